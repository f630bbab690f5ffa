#include "floorq/interval.hpp"

#include <algorithm>
#include <numeric>

#include "floorq/relation.hpp"
#include "floorq/semigroup.hpp"

namespace floorq {

namespace {

constexpr auto fq = is_floor_quotient_unchecked;

IntervalView make_view(int64_t lo, int64_t hi, std::vector<int64_t> elements)
{
    IntervalView v;
    v.lo = lo;
    v.hi = hi;
    v.elements = std::move(elements);
    v.index.reserve(v.elements.size());
    for (std::size_t i = 0; i < v.elements.size(); ++i)
        v.index.emplace(v.elements[i], i);
    return v;
}

} // namespace

std::vector<int64_t> initial_elements(int64_t n)
{
    require_positive(n, "n");
    const int64_t s = isqrt(n);
    std::vector<int64_t> out;
    out.reserve(static_cast<std::size_t>(2 * s));
    for (int64_t d = 1; d <= s; ++d)
        out.push_back(d);
    // floor(n/k) descends as k grows; emit in ascending order, skipping the
    // possible duplicate floor(n/s) = s.
    for (int64_t k = s; k >= 1; --k) {
        int64_t q = n / k;
        if (q > s)
            out.push_back(q);
    }
    return out;
}

IntervalView initial_interval(int64_t n)
{
    return make_view(1, n, initial_elements(n));
}

IntervalView interval(int64_t d, int64_t n)
{
    require_positive(d, "d");
    require_positive(n, "n");
    if (!fq(d, n))
        return make_view(d, n, {});
    std::vector<int64_t> kept;
    for (int64_t e : initial_elements(n))
        if (e >= d && is_floor_multiple(d, e))
            kept.push_back(e);
    return make_view(d, n, std::move(kept));
}

InitialSplit split(int64_t n)
{
    require_positive(n, "n");
    InitialSplit sp;
    sp.n = n;
    sp.s = isqrt(n);
    sp.q_minus.reserve(static_cast<std::size_t>(sp.s));
    for (int64_t d = 1; d <= sp.s; ++d)
        sp.q_minus.push_back(d);
    sp.q_plus.reserve(static_cast<std::size_t>(sp.s));
    for (int64_t k = sp.s; k >= 1; --k) {
        int64_t q = n / k;
        if (sp.q_plus.empty() || sp.q_plus.back() != q)
            sp.q_plus.push_back(q);
    }
    if (n / sp.s == sp.s) // s^2 <= n < s(s+1)
        sp.overlap = sp.s;
    return sp;
}

int64_t gap(int64_t d, int64_t n)
{
    if (!is_floor_quotient(d, n))
        throw std::domain_error("gap: " + std::to_string(d) + " is not a floor quotient of " +
                                std::to_string(n));
    if (d == 1)
        return 1; // convention 1^- = 0; also keeps floor(n/d) + 1 in range
    // d^- = floor(n / (floor(n/d) + 1))
    return d - n / (n / d + 1);
}

int64_t multiplicity(int64_t d, int64_t n)
{
    if (!is_floor_quotient(d, n))
        throw std::domain_error("multiplicity: " + std::to_string(d) +
                                " is not a floor quotient of " + std::to_string(n));
    if (d == n)
        return 1; // only k = 1; also keeps d + 1 in range
    return n / d - n / (d + 1);
}

std::vector<std::pair<int64_t, int64_t>> covering_edges(const IntervalView& view)
{
    std::vector<std::pair<int64_t, int64_t>> edges;
    const auto& el = view.elements;
    const std::size_t m = el.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (!fq(el[i], el[j]))
                continue;
            bool covered = true;
            // any interposing element is additively strictly between
            for (std::size_t t = i + 1; t < j && covered; ++t)
                if (fq(el[i], el[t]) && fq(el[t], el[j]))
                    covered = false;
            if (covered)
                edges.emplace_back(el[i], el[j]);
        }
    }
    return edges;
}

IncidenceStats incidence_stats(int64_t n)
{
    require_positive(n, "n");
    if (n > 100000000)
        throw std::length_error("incidence_stats: n = " + std::to_string(n) +
                                " exceeds the 1e8 work guard");
    const std::vector<int64_t> el = initial_elements(n);
    const int64_t s = isqrt(n);
    const int64_t s_star = n / s; // smallest element of Q^+
    const bool overlap = s == s_star;

    IncidenceStats st;
    st.n = n;
    st.overlap = overlap;

    const std::size_t m = el.size();
    std::vector<unsigned char> in_minus(m), in_plus(m);
    for (std::size_t i = 0; i < m; ++i) {
        in_minus[i] = el[i] <= s;
        in_plus[i] = el[i] >= s_star;
    }

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i; j < m; ++j) {
            if (!fq(el[i], el[j]))
                continue;
            ++st.z_total;
            if (in_minus[i] && in_minus[j])
                ++st.z_minus;
            if (in_plus[i] && in_plus[j])
                ++st.z_plus;
            if (in_minus[i] && !in_plus[i] && in_plus[j] && !in_minus[j])
                ++st.z_cross_minus_plus;
            if (in_plus[i] && !in_minus[i] && in_minus[j] && !in_plus[j])
                ++st.z_cross_plus_minus;
        }
    }

    // Q^+ carries the divisor order of {1..s} in reverse, so its incidence
    // count must equal sum_{k<=s} sigma_0(k) = sum_{j<=s} floor(s/j).
    int64_t sigma_sum = 0;
    for (int64_t j = 1; j <= s; ++j)
        sigma_sum += s / j;
    if (st.z_plus != sigma_sum)
        throw std::logic_error("incidence_stats self-check failed at n = " + std::to_string(n) +
                               ": z_plus = " + std::to_string(st.z_plus) + ", sigma sum = " +
                               std::to_string(sigma_sum));
    return st;
}

ChainCount count_chains(int64_t d, int64_t n)
{
    require_positive(d, "d");
    require_positive(n, "n");
    ChainCount cc;
    cc.d = d;
    cc.n = n;
    if (!fq(d, n))
        return cc; // total 0, no lengths
    if (d == n) {
        cc.total = 1;
        cc.by_length = {1};
        return cc;
    }

    const IntervalView view = interval(d, n);
    const auto& el = view.elements;
    const std::size_t m = el.size();

    // counts[i][len] = number of chains d -> el[i] of that length; ascending
    // DP, since every chain enters el[i] from a strictly smaller element.
    std::vector<std::vector<int64_t>> counts(m);
    counts[0] = {1}; // el[0] == d
    for (std::size_t i = 1; i < m; ++i) {
        std::vector<int64_t>& acc = counts[i];
        for (std::size_t f = 0; f < i; ++f) {
            if (!fq(el[f], el[i]))
                continue;
            const std::vector<int64_t>& prev = counts[f];
            if (acc.size() < prev.size() + 1)
                acc.resize(prev.size() + 1, 0);
            for (std::size_t len = 0; len < prev.size(); ++len)
                acc[len + 1] = checked_add(acc[len + 1], prev[len]);
        }
    }

    cc.by_length = counts[m - 1];
    for (int64_t c : cc.by_length)
        cc.total = checked_add(cc.total, c);
    return cc;
}

SetDelta consecutive_delta(int64_t n)
{
    require_positive(n, "n");
    if (n < 2)
        throw std::domain_error("consecutive_delta requires n >= 2");
    SetDelta delta;
    delta.n = n;

    const int64_t s = isqrt(n);
    std::vector<int64_t> d_plus; // divisors of n above sqrt(n), descending by j
    for (int64_t j = 1; j <= s; ++j) {
        if (n % j == 0) {
            int64_t d = n / j;
            if (d > n / d) // d^2 > n
                d_plus.push_back(d);
        }
    }
    std::sort(d_plus.begin(), d_plus.end());

    const bool square = s * s == n;
    const bool pronic = s * (s + 1) == n;

    for (int64_t d : d_plus) {
        if (pronic && d - 1 == s)
            continue; // s stays: it is still in Q^-(n)
        delta.removed.push_back(d - 1);
    }
    delta.added = d_plus;
    if (square) {
        delta.added.insert(delta.added.begin(), s); // s joins Q^-(n) fresh
    }
    std::sort(delta.added.begin(), delta.added.end());
    return delta;
}

Ratio width(int64_t d, int64_t n)
{
    require_positive(d, "d");
    require_positive(n, "n");
    const int64_t g = std::gcd(d, n);
    return Ratio{n / g, d / g};
}

} // namespace floorq
