#ifndef FLOORQ_RELATION_HPP
#define FLOORQ_RELATION_HPP

#include <optional>

#include "floorq/checked.hpp"

// The floor quotient relation d <=_1 n ("d = floor(n/k) for some k"), its six
// equivalent characterizations, cutting length sets, and the n-floor
// reciprocal map J_n(k) = floor(n/k). Everything here is a pure function of
// its arguments; all arithmetic is exact.

namespace floorq {

enum class Characterization {
    Cutting,           // d = floor(n/k) for some k, by bounded scan
    Covering,          // k*[d,d+1) covers [n,n+1) for some k
    Intersection,      // k*[d,d+1) meets [n,n+1) for some k
    StrongRemainder,   // n = dk + r with r < min(d,k)
    TippingPoint,      // floor(n/d) > floor(n/(d+1))
    ReciprocalDuality, // d = floor(n / floor(n/d))
};

// Certified cutting length set of (d, n): the half-open integer range
// (k_lo, k_hi] with k_lo = floor(n/(d+1)), k_hi = floor(n/d). Nonempty
// exactly when d is a floor quotient of n.
struct QuotientWitness {
    int64_t d = 0;
    int64_t n = 0;
    int64_t k_lo = 0; // exclusive
    int64_t k_hi = 0; // inclusive

    bool related() const noexcept { return k_lo < k_hi; }
    int64_t cardinality() const noexcept { return k_hi - k_lo; }
    bool contains(int64_t k) const noexcept { return k_lo < k && k <= k_hi; }
};

// O(1) relation test (two divisions, tipping-point form).
bool is_floor_quotient(int64_t d, int64_t n);
inline bool is_floor_quotient(PosInt d, PosInt n) { return is_floor_quotient(d.value(), n.value()); }

// Same test without argument validation; requires d, n >= 1. Hot-loop form
// shared across the library. The d >= n branch keeps d + 1 in range even at
// the top of the int64 domain.
inline bool is_floor_quotient_unchecked(int64_t d, int64_t n) noexcept
{
    if (d >= n)
        return d == n;
    return n / d > n / (d + 1);
}

// Each variant evaluates its own defining predicate; all six agree on every
// input.
bool characterization(int64_t d, int64_t n, Characterization which);

QuotientWitness cutting_set(int64_t d, int64_t n);

// J_n(k) = floor(n/k). Rejects k > n, where the quotient would leave N+.
int64_t floor_reciprocal(int64_t n, int64_t k);

// The unique cutting length of (d, n) that is itself a floor quotient of n
// (= floor(n/d), the maximum of the cutting set); absent when unrelated.
std::optional<int64_t> canonical_cutting_length(int64_t d, int64_t n);

// Executable regression oracle for the dilated-floor commutation identity
// floor(floor(n/l)/k) = floor(floor(n/k)/l) = floor(n/(k*l)).
// Throws std::overflow_error if k*l does not fit in int64.
bool dilated_floor_commute_check(int64_t n, int64_t k, int64_t l);

} // namespace floorq

#endif
