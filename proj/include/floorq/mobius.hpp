#ifndef FLOORQ_MOBIUS_HPP
#define FLOORQ_MOBIUS_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "floorq/checked.hpp"

// Mobius machinery of the floor quotient poset: the classical mu sieve, the
// two-variable mu_1(d,n) with the d >= sqrt(n) reduction to classical mu, a
// sieve-style builder for mu_1(1,n) tables via the differenced recursion, the
// Hall chain-sum oracle, and sign-change scanning.

namespace floorq {

struct ClassicalMobiusTable {
    int64_t limit = 0;
    std::vector<std::int8_t> mu; // 1-based; mu[0] unused

    int mu_at(int64_t n) const { return mu.at(static_cast<std::size_t>(n)); }
};

ClassicalMobiusTable classical_mobius(int64_t limit); // linear sieve; limit <= 1e8

// Single classical mu(n) by trial-division factorization.
int mobius_value(int64_t n);

// Dense table of mu1[n] = mu_1(1,n) and delta[n] = mu_1(1,n) - mu_1(1,n-1)
// for 1 <= n <= limit. Immutable after the build.
struct MobiusTable {
    int64_t limit = 0;
    std::vector<int64_t> mu1;   // 1-based
    std::vector<int64_t> delta; // 1-based; delta[1] = 1 (mu_1(0) := 0)

    int64_t mu1_at(int64_t n) const { return mu1.at(static_cast<std::size_t>(n)); }
    int64_t delta_at(int64_t n) const { return delta.at(static_cast<std::size_t>(n)); }
};

// One ascending pass over the differenced recursion
//   delta[n] = -sum_{d | n, sqrt(n) < d < n} delta[d]   (- mu1[s] at n = s^2, s(s+1))
// evaluated as a forward push sieve: when delta[d] is final, subtract it from
// delta[d*k] for 2 <= k < d. O(limit log limit); accumulation is checked.
MobiusTable mu1_initial_table(int64_t limit); // limit <= 1e8

// Memoized evaluator for the two-variable mu_1(d, n). The cache is owned by
// the context; a context is single-owner, not to be shared across threads.
// use_sqrt_shortcut selects the closed form mu(floor(n/d)) whenever d^2 >= n;
// switching it off forces the defining recursion everywhere (the independent
// route used to validate the shortcut).
class Mu1Context {
public:
    explicit Mu1Context(bool use_sqrt_shortcut = true)
        : use_sqrt_shortcut_(use_sqrt_shortcut) {}

    int64_t mu1(int64_t d, int64_t n);

    std::size_t cache_size() const noexcept { return memo_.size(); }

private:
    struct KeyHash {
        std::size_t operator()(const std::pair<int64_t, int64_t>& k) const noexcept
        {
            auto h = static_cast<std::uint64_t>(k.first) * 0x9e3779b97f4a7c15ULL;
            h ^= static_cast<std::uint64_t>(k.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return static_cast<std::size_t>(h);
        }
    };

    bool use_sqrt_shortcut_;
    std::unordered_map<std::pair<int64_t, int64_t>, int64_t, KeyHash> memo_;
};

// One-shot convenience wrapper around a fresh context.
int64_t mu1(int64_t d, int64_t n);

// Philip Hall alternating chain sum c_0 - c_1 + c_2 - ...; equals mu1(d, n).
int64_t hall_chain_sum(int64_t d, int64_t n);

// l_1 = 2 < l_2 < ... with strictly alternating sign of mu_1(1, l_j) and
// l_{j+1} <= 2 l_j^2 - 2; each successor is the smallest witness in the
// cancellation-recursion range. Truncates when the next bound exceeds the
// table limit.
struct SignChangeSequence {
    std::vector<int64_t> entries;
};

SignChangeSequence sign_change_sequence(const MobiusTable& table);
SignChangeSequence sign_change_sequence(int64_t limit);

// Reporting only: max |mu1|, its first location, and max over n >= 2 of
// |mu1[n]| / n^beta.
struct GrowthSummary {
    int64_t argmax_n = 0;
    int64_t max_abs = 0;
    double beta = 0.0;
    double max_ratio = 0.0;
    int64_t max_ratio_n = 0;
};

GrowthSummary growth_scan(const MobiusTable& table, double beta);

// Longest run of consecutive n with constant nonzero sign of mu1[n];
// returns {length, last_n_of_run}.
std::pair<int64_t, int64_t> longest_sign_run(const MobiusTable& table);

} // namespace floorq

#endif
