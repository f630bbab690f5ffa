#include "floorq/mobius.hpp"

#include <algorithm>
#include <cmath>

#include "floorq/interval.hpp"
#include "floorq/relation.hpp"

namespace floorq {

namespace {

constexpr auto fq = is_floor_quotient_unchecked;

constexpr int64_t kTableLimit = 100000000; // 1e8 memory guard

} // namespace

ClassicalMobiusTable classical_mobius(int64_t limit)
{
    require_positive(limit, "limit");
    if (limit > kTableLimit)
        throw std::length_error("classical_mobius: limit " + std::to_string(limit) +
                                " exceeds the 1e8 memory guard");
    ClassicalMobiusTable t;
    t.limit = limit;
    t.mu.assign(static_cast<std::size_t>(limit) + 1, 0);
    t.mu[1] = 1;

    // linear sieve: every composite is crossed once via its smallest prime
    std::vector<int64_t> primes;
    std::vector<unsigned char> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (int64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            t.mu[i] = -1;
        }
        for (int64_t p : primes) {
            if (p > limit / i)
                break;
            composite[p * i] = 1;
            if (i % p == 0) {
                t.mu[p * i] = 0;
                break;
            }
            t.mu[p * i] = -t.mu[i];
        }
    }
    return t;
}

int mobius_value(int64_t n)
{
    require_positive(n, "n");
    int result = 1;
    int64_t m = n;
    for (int64_t p = 2; p <= m / p; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0)
                return 0;
            result = -result;
        }
    }
    if (m > 1)
        result = -result;
    return result;
}

MobiusTable mu1_initial_table(int64_t limit)
{
    require_positive(limit, "limit");
    if (limit > kTableLimit)
        throw std::length_error("mu1_initial_table: limit " + std::to_string(limit) +
                                " exceeds the 1e8 memory guard");
    MobiusTable t;
    t.limit = limit;
    t.mu1.assign(static_cast<std::size_t>(limit) + 1, 0);
    t.delta.assign(static_cast<std::size_t>(limit) + 1, 0);

    t.delta[1] = 1; // mu_1(0) := 0 convention
    t.mu1[1] = 1;
    if (limit >= 2) {
        t.delta[2] = -2;
        t.mu1[2] = -1;
    }

    // The differenced recursion applies from n = 3 on. Contributions
    // -delta[d] arrive at n = d*k (2 <= k < d) via the forward push below;
    // the feedback term -mu1[s] lands at n = s^2 and n = s(s+1).
    int64_t s = 1;
    for (int64_t n = 3; n <= limit; ++n) {
        while ((s + 1) * (s + 1) <= n)
            ++s;
        if (s * s == n || s * (s + 1) == n) {
            try {
                t.delta[n] = checked_sub(t.delta[n], t.mu1[s]);
            } catch (const std::overflow_error&) {
                throw std::overflow_error("mu1_initial_table: delta accumulation overflow at n = " +
                                          std::to_string(n));
            }
        }
        try {
            t.mu1[n] = checked_add(t.mu1[n - 1], t.delta[n]);
        } catch (const std::overflow_error&) {
            throw std::overflow_error("mu1_initial_table: mu1 overflow at n = " +
                                      std::to_string(n));
        }
        const int64_t dn = t.delta[n];
        if (dn != 0) {
            const int64_t k_max = std::min<int64_t>(n - 1, limit / n);
            for (int64_t k = 2; k <= k_max; ++k) {
                int64_t& cell = t.delta[n * k];
                if (__builtin_sub_overflow(cell, dn, &cell))
                    throw std::overflow_error(
                        "mu1_initial_table: delta accumulation overflow at n = " +
                        std::to_string(n * k));
            }
        }
    }
    return t;
}

int64_t Mu1Context::mu1(int64_t d, int64_t n)
{
    require_positive(d, "d");
    require_positive(n, "n");
    if (!fq(d, n))
        return 0;
    if (d == n)
        return 1;

    const auto key = std::make_pair(d, n);
    if (auto it = memo_.find(key); it != memo_.end())
        return it->second;

    // d^2 >= n (division-only test): the value reduces to classical mu.
    const int64_t q = n / d;
    if (use_sqrt_shortcut_ && (d > q || (d == q && q * d == n))) {
        const int64_t value = mobius_value(n / d);
        memo_.emplace(key, value);
        return value;
    }

    // Defining recursion evaluated bottom-up over Q[d,n]; every prefix value
    // is the Mobius value of the sub-interval Q[d,e] and is cached.
    const IntervalView view = interval(d, n);
    const auto& el = view.elements;
    std::vector<int64_t> values(el.size(), 0);
    values[0] = 1;
    memo_.emplace(std::make_pair(d, d), 1);
    for (std::size_t i = 1; i < el.size(); ++i) {
        if (auto it = memo_.find(std::make_pair(d, el[i])); it != memo_.end()) {
            values[i] = it->second;
            continue;
        }
        int64_t acc = 0;
        for (std::size_t f = 0; f < i; ++f)
            if (fq(el[f], el[i]))
                acc = checked_add(acc, values[f]);
        values[i] = checked_sub(int64_t{0}, acc);
        memo_.emplace(std::make_pair(d, el[i]), values[i]);
    }
    return values.back();
}

int64_t mu1(int64_t d, int64_t n)
{
    Mu1Context ctx;
    return ctx.mu1(d, n);
}

int64_t hall_chain_sum(int64_t d, int64_t n)
{
    const ChainCount cc = count_chains(d, n);
    int64_t sum = 0;
    for (std::size_t len = 0; len < cc.by_length.size(); ++len) {
        if (len % 2 == 0)
            sum = checked_add(sum, cc.by_length[len]);
        else
            sum = checked_sub(sum, cc.by_length[len]);
    }
    return sum;
}

SignChangeSequence sign_change_sequence(const MobiusTable& table)
{
    SignChangeSequence seq;
    const int64_t limit = table.limit;
    if (limit < 2)
        return seq;
    seq.entries.push_back(2); // mu_1(1,2) = -1

    while (true) {
        const int64_t l = seq.entries.back();
        const int64_t bound = checked_sub(checked_mul(2, checked_mul(l, l)), 2); // 2l^2 - 2
        if (bound > limit)
            break; // truncation is normal termination
        const int64_t t = l * l - 1;
        const int64_t sign_l = table.mu1[static_cast<std::size_t>(l)] > 0 ? 1 : -1;

        int64_t next = 0;
        for (int64_t m : initial_elements(bound)) {
            if (m <= l)
                continue;
            if (fq(m, t))
                continue; // cancelled against Q[1, l^2 - 1]
            const int64_t v = table.mu1[static_cast<std::size_t>(m)];
            if ((v > 0 ? 1 : v < 0 ? -1 : 0) == -sign_l) {
                next = m;
                break;
            }
        }
        if (next == 0)
            throw std::logic_error("sign_change_sequence: no opposite-sign witness after l = " +
                                   std::to_string(l) + " (recursion guarantees one)");
        seq.entries.push_back(next);
    }
    return seq;
}

SignChangeSequence sign_change_sequence(int64_t limit)
{
    const MobiusTable table = mu1_initial_table(limit);
    return sign_change_sequence(table);
}

GrowthSummary growth_scan(const MobiusTable& table, double beta)
{
    GrowthSummary g;
    g.beta = beta;
    for (int64_t n = 1; n <= table.limit; ++n) {
        const int64_t a = std::llabs(table.mu1[static_cast<std::size_t>(n)]);
        if (a > g.max_abs) {
            g.max_abs = a;
            g.argmax_n = n;
        }
        if (n >= 2) {
            const double ratio = static_cast<double>(a) / std::pow(static_cast<double>(n), beta);
            if (ratio > g.max_ratio) {
                g.max_ratio = ratio;
                g.max_ratio_n = n;
            }
        }
    }
    return g;
}

std::pair<int64_t, int64_t> longest_sign_run(const MobiusTable& table)
{
    int64_t best = 0, best_end = 0, run = 0;
    int current = 0;
    for (int64_t n = 1; n <= table.limit; ++n) {
        const int64_t v = table.mu1[static_cast<std::size_t>(n)];
        const int sign = v > 0 ? 1 : v < 0 ? -1 : 0;
        if (sign != 0 && sign == current) {
            ++run;
        } else {
            run = sign != 0 ? 1 : 0;
            current = sign;
        }
        if (run > best) {
            best = run;
            best_end = n;
        }
    }
    return {best, best_end};
}

} // namespace floorq
