#ifndef FLOORQ_INTERVAL_HPP
#define FLOORQ_INTERVAL_HPP

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "floorq/checked.hpp"

// Floor quotient intervals Q[d,n] = { e : d <=_1 e <=_1 n }: enumeration, the
// Q^-/Q^+ split of initial intervals, gaps and multiplicities, covering edges,
// consecutive-interval deltas, incidence counts, and chain counts.

namespace floorq {

struct IntervalView {
    int64_t lo = 0;
    int64_t hi = 0;
    std::vector<int64_t> elements;                  // strictly ascending
    std::unordered_map<int64_t, std::size_t> index; // element -> position

    bool empty() const noexcept { return elements.empty(); }
    std::size_t size() const noexcept { return elements.size(); }
    bool contains(int64_t e) const { return index.count(e) != 0; }
};

// Initial interval Q[1,n] = {1..s} U {floor(n/k) : k <= s}, s = floor(sqrt n).
IntervalView initial_interval(int64_t n);

// Element list of Q[1,n] without the index map; cheap path for sweeps.
std::vector<int64_t> initial_elements(int64_t n);

// Q[d,n], computed by filtering Q[1,n] with the M(d) membership test.
IntervalView interval(int64_t d, int64_t n);

struct InitialSplit {
    int64_t n = 0;
    int64_t s = 0;                  // floor(sqrt(n))
    std::vector<int64_t> q_minus;   // {1..s}
    std::vector<int64_t> q_plus;    // {floor(n/k) : k = 1..s}, ascending
    std::optional<int64_t> overlap; // = s iff s^2 <= n < s(s+1)
};

InitialSplit split(int64_t n);

// gap(d,n) = d - d^- where d^- is the previous floor quotient of n (1^- = 0);
// multiplicity(d,n) = |cutting set|. Both require d <=_1 n; the two values
// interchange under J_n.
int64_t gap(int64_t d, int64_t n);
int64_t multiplicity(int64_t d, int64_t n);

// Covering pairs (a,b) of the view: a <_1 b with no view element strictly
// between. Pairwise scan with interposition check; display-path complexity.
std::vector<std::pair<int64_t, int64_t>> covering_edges(const IntervalView& view);

// Incidence counts over Q[1,n] and its halves (non-strict, ordered pairs).
// The cross counts exclude the shared element s when the halves overlap, so
// z_total = z_minus + z_plus + z_cross_minus_plus + z_cross_plus_minus
//           - (overlap ? 1 : 0)
// holds exactly. z_plus is cross-checked internally against
// sum_{k <= floor(sqrt n)} sigma_0(k).
struct IncidenceStats {
    int64_t n = 0;
    int64_t z_total = 0;
    int64_t z_minus = 0;
    int64_t z_plus = 0;
    int64_t z_cross_minus_plus = 0;
    int64_t z_cross_plus_minus = 0; // provably 0 or 1
    bool overlap = false;
};

IncidenceStats incidence_stats(int64_t n); // guarded at n <= 1e8

// Total number of chains d = a_0 <_1 a_1 <_1 ... <_1 a_k = n, stratified by
// length. total = sum(by_length); by_length[0] = 1 iff d = n. All counting is
// overflow-checked.
struct ChainCount {
    int64_t d = 0;
    int64_t n = 0;
    int64_t total = 0;
    std::vector<int64_t> by_length;
};

ChainCount count_chains(int64_t d, int64_t n);

// Set difference Q[1,n] vs Q[1,n-1]: applying removed/added to Q[1,n-1]
// yields Q[1,n]. Closed form via D^+(n) = { d | n : d > sqrt(n) }.
struct SetDelta {
    int64_t n = 0;
    std::vector<int64_t> removed;
    std::vector<int64_t> added;
};

SetDelta consecutive_delta(int64_t n); // requires n >= 2

// Exact rational n/d in lowest terms.
struct Ratio {
    int64_t num = 0;
    int64_t den = 1;
};

Ratio width(int64_t d, int64_t n);

} // namespace floorq

#endif
