#ifndef FLOORQ_SEMIGROUP_HPP
#define FLOORQ_SEMIGROUP_HPP

#include <vector>

#include "floorq/checked.hpp"

// The numerical semigroup M(d) of floor multiples of a fixed d: all n with
// d <=_1 n. Closed forms: Frobenius number d^2 - 1, gap count (d-1)(d+2)/2,
// minimal generators i(d+1) - 1 for i = 1..d.

namespace floorq {

struct SemigroupInfo {
    int64_t d = 0;
    int64_t frobenius = 0; // d^2 - 1 for d >= 2; reported as 0 for d = 1 (M(1) = N+)
    int64_t gap_count = 0;
    std::vector<int64_t> generators; // ascending, length d
};

// Membership in M(d) by the closed form: true when n >= d^2, otherwise
// n = dk + j with 0 <= j,k < d is a member iff j < k. Agrees with
// is_floor_quotient(d, n) everywhere.
bool is_floor_multiple(int64_t d, int64_t n);

SemigroupInfo semigroup_info(int64_t d);

// All gaps of M(d), ascending. Theta(d^2) output; guarded at d <= 2^16.
std::vector<int64_t> semigroup_gaps(int64_t d);

} // namespace floorq

#endif
