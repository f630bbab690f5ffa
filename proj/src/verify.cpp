#include "floorq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "floorq/alpha.hpp"
#include "floorq/interval.hpp"
#include "floorq/relation.hpp"
#include "floorq/semigroup.hpp"

namespace floorq {

namespace {

constexpr auto fq = is_floor_quotient_unchecked;

CheckResult pass(std::string name, int64_t cases)
{
    return CheckResult{std::move(name), true, cases, ""};
}

CheckResult fail(std::string name, int64_t cases, std::string counterexample)
{
    return CheckResult{std::move(name), false, cases, std::move(counterexample)};
}

// |Q[1,n]| closed form, used as an independent cross-check only.
inline int64_t initial_size_closed(int64_t n)
{
    const int64_t s = isqrt(n);
    return n / s == s ? 2 * s - 1 : 2 * s;
}

// ---- relation ----

CheckResult check_six_characterizations(const VerifyBudget&)
{
    const char* name = "six-characterization agreement";
    int64_t cases = 0;
    for (int64_t n = 1; n <= 500; ++n) {
        for (int64_t d = 1; d <= 500; ++d) {
            const bool ref = characterization(d, n, Characterization::TippingPoint);
            for (auto which : {Characterization::Cutting, Characterization::Covering,
                               Characterization::Intersection, Characterization::StrongRemainder,
                               Characterization::ReciprocalDuality}) {
                if (characterization(d, n, which) != ref)
                    return fail(name, cases,
                                "variant " + std::to_string(static_cast<int>(which)) +
                                    " disagrees at (d,n) = (" + std::to_string(d) + "," +
                                    std::to_string(n) + ")");
            }
            ++cases;
        }
    }
    return pass(name, cases);
}

CheckResult check_partial_order_axioms(const VerifyBudget&)
{
    const char* name = "partial-order axioms";
    int64_t cases = 0;
    for (int64_t n = 1; n <= 2000; ++n) {
        if (!fq(n, n))
            return fail(name, cases, "reflexivity fails at n = " + std::to_string(n));
        ++cases;
    }
    // antisymmetry on every related pair, transitivity on constructed triples
    std::mt19937_64 rng(12345);
    for (int64_t n = 2; n <= 2000; ++n) {
        const auto el = initial_elements(n);
        for (int64_t d : el) {
            if (d != n && fq(d, n) && fq(n, d))
                return fail(name, cases,
                            "antisymmetry fails at (" + std::to_string(d) + "," +
                                std::to_string(n) + ")");
            ++cases;
        }
    }
    for (int trial = 0; trial < 100000; ++trial) {
        const int64_t n = std::uniform_int_distribution<int64_t>(1, 2000)(rng);
        const int64_t k1 = std::uniform_int_distribution<int64_t>(1, n)(rng);
        const int64_t m = n / k1;
        const int64_t k2 = std::uniform_int_distribution<int64_t>(1, m)(rng);
        const int64_t d = m / k2;
        if (!fq(d, n))
            return fail(name, cases,
                        "transitivity fails: " + std::to_string(d) + " <=_1 " + std::to_string(m) +
                            " <=_1 " + std::to_string(n));
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_sandwich(const VerifyBudget&)
{
    const char* name = "approximate divisor order sandwich";
    int64_t cases = 0;
    for (int64_t n = 1; n <= 2000; ++n) {
        for (int64_t d = 1; d <= n; ++d) {
            if (n % d == 0 && !fq(d, n))
                return fail(name, cases,
                            std::to_string(d) + " | " + std::to_string(n) + " but not <=_1");
            ++cases;
        }
        for (int64_t d = n + 1; d <= n + 3; ++d)
            if (fq(d, n))
                return fail(name, cases,
                            std::to_string(d) + " <=_1 " + std::to_string(n) + " with d > n");
    }
    return pass(name, cases);
}

CheckResult check_involution(const VerifyBudget&)
{
    const char* name = "floor-reciprocal involution domain";
    int64_t cases = 0;
    for (int64_t n = 1; n <= 2000; ++n) {
        for (int64_t k = 1; k <= n; ++k) {
            const int64_t jj = n / (n / k);
            const bool quotient = fq(k, n);
            if (quotient != (jj == k))
                return fail(name, cases,
                            "J_n fixed-square mismatch at (k,n) = (" + std::to_string(k) + "," +
                                std::to_string(n) + ")");
            if (!quotient && jj <= k)
                return fail(name, cases,
                            "J_n^2(k) <= k for non-quotient k = " + std::to_string(k) + ", n = " +
                                std::to_string(n));
            ++cases;
        }
    }
    return pass(name, cases);
}

CheckResult check_cutting_partition(const VerifyBudget&)
{
    const char* name = "cutting-set partition of {1..n}";
    int64_t cases = 0;
    for (int64_t n = 1; n <= 2000; ++n) {
        const auto el = initial_elements(n);
        // descending d gives ascending k-ranges (floor(n/(d+1)), floor(n/d)]
        int64_t covered = 0;
        for (auto it = el.rbegin(); it != el.rend(); ++it) {
            const auto w = cutting_set(*it, n);
            if (w.k_lo != covered)
                return fail(name, cases,
                            "gap or overlap before d = " + std::to_string(*it) + " at n = " +
                                std::to_string(n));
            covered = w.k_hi;
        }
        if (covered != n)
            return fail(name, cases, "union misses top at n = " + std::to_string(n));
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_commute(const VerifyBudget&)
{
    const char* name = "dilated-floor commutation identity";
    std::mt19937_64 rng(777);
    int64_t cases = 0;
    for (int trial = 0; trial < 100000; ++trial) {
        const int64_t n = std::uniform_int_distribution<int64_t>(1, 1000000000)(rng);
        const int64_t k = std::uniform_int_distribution<int64_t>(1, 46340)(rng);
        const int64_t l = std::uniform_int_distribution<int64_t>(1, (int64_t{1} << 31) / k)(rng);
        if (!dilated_floor_commute_check(n, k, l))
            return fail(name, cases,
                        "identity fails at (n,k,l) = (" + std::to_string(n) + "," +
                            std::to_string(k) + "," + std::to_string(l) + ")");
        ++cases;
    }
    return pass(name, cases);
}

// ---- semigroup ----

CheckResult check_semigroup_closure(const VerifyBudget&)
{
    const char* name = "floor-multiple semigroup closure";
    int64_t cases = 0;
    for (int64_t d = 1; d <= 60; ++d) {
        const int64_t d2 = d * d;
        std::vector<int64_t> members;
        for (int64_t n = 1; n <= d2; ++n)
            if (is_floor_multiple(d, n))
                members.push_back(n);
        for (int64_t m1 : members) {
            for (int64_t m2 : members) {
                if (!is_floor_multiple(d, m1 + m2))
                    return fail(name, cases,
                                "M(" + std::to_string(d) + ") not closed: " + std::to_string(m1) +
                                    " + " + std::to_string(m2));
                ++cases;
            }
        }
    }
    return pass(name, cases);
}

CheckResult check_membership_oracle(const VerifyBudget&)
{
    const char* name = "membership closed form vs relation test";
    int64_t cases = 0;
    for (int64_t d = 1; d <= 2000; ++d)
        for (int64_t n = 1; n <= 2000; ++n) {
            if (is_floor_multiple(d, n) != fq(d, n))
                return fail(name, cases,
                            "mismatch at (d,n) = (" + std::to_string(d) + "," + std::to_string(n) +
                                ")");
            ++cases;
        }
    return pass(name, cases);
}

CheckResult check_generators(const VerifyBudget&)
{
    const char* name = "semigroup generators minimal and complete";
    int64_t cases = 0;
    for (int64_t d = 1; d <= 40; ++d) {
        const auto info = semigroup_info(d);
        const int64_t bound = 2 * d * d;
        // reachable[x]: x is a nonnegative combination of generators
        std::vector<unsigned char> reachable(static_cast<std::size_t>(bound) + 1, 0);
        reachable[0] = 1;
        for (int64_t g : info.generators)
            for (int64_t x = g; x <= bound; ++x)
                if (reachable[x - g])
                    reachable[x] = 1;
        for (int64_t n = 1; n <= bound; ++n) {
            if (is_floor_multiple(d, n) != (reachable[n] != 0))
                return fail(name, cases,
                            "combination set differs from M(" + std::to_string(d) + ") at n = " +
                                std::to_string(n));
            ++cases;
        }
        // minimality: generator i must not be reachable from earlier ones
        for (std::size_t i = 1; i < info.generators.size(); ++i) {
            const int64_t g_i = info.generators[i];
            std::vector<unsigned char> partial(static_cast<std::size_t>(g_i) + 1, 0);
            partial[0] = 1;
            for (std::size_t j = 0; j < i; ++j)
                for (int64_t x = info.generators[j]; x <= g_i; ++x)
                    if (partial[x - info.generators[j]])
                        partial[x] = 1;
            if (partial[g_i])
                return fail(name, cases,
                            "generator " + std::to_string(g_i) + " of M(" + std::to_string(d) +
                                ") is redundant");
            ++cases;
        }
    }
    return pass(name, cases);
}

CheckResult check_frobenius(const VerifyBudget&)
{
    const char* name = "frobenius boundary of M(d)";
    int64_t cases = 0;
    for (int64_t d = 2; d <= 60; ++d) {
        const auto info = semigroup_info(d);
        if (is_floor_multiple(d, info.frobenius))
            return fail(name, cases, "frobenius of M(" + std::to_string(d) + ") is a member");
        for (int64_t t = 1; t <= d * d; ++t) {
            if (!is_floor_multiple(d, info.frobenius + t))
                return fail(name, cases,
                            "frobenius + " + std::to_string(t) + " not in M(" + std::to_string(d) +
                                ")");
            ++cases;
        }
        const auto gaps = semigroup_gaps(d);
        if (static_cast<int64_t>(gaps.size()) != info.gap_count)
            return fail(name, cases, "gap count formula fails at d = " + std::to_string(d));
        ++cases;
    }
    return pass(name, cases);
}

// ---- interval ----

CheckResult check_size_sandwich(const VerifyBudget& budget)
{
    const char* name = "initial interval size sandwich";
    const int64_t limit = budget.cap(2000, 100000);
    int64_t cases = 0;
    for (int64_t n = 1; n <= limit; ++n) {
        const auto el = initial_elements(n);
        const long double size = static_cast<long double>(el.size());
        const long double root = sqrtl(static_cast<long double>(n));
        if (!(2 * root - 2 < size && size < 2 * root))
            return fail(name, cases, "size bound fails at n = " + std::to_string(n));
        if (static_cast<int64_t>(el.size()) != initial_size_closed(n))
            return fail(name, cases, "closed-form size mismatch at n = " + std::to_string(n));
        // strictly ascending, endpoints, membership coherence
        for (std::size_t i = 1; i < el.size(); ++i)
            if (el[i - 1] >= el[i])
                return fail(name, cases, "elements not ascending at n = " + std::to_string(n));
        if (el.front() != 1 || el.back() != n)
            return fail(name, cases, "endpoints wrong at n = " + std::to_string(n));
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_width_bound(const VerifyBudget& budget)
{
    const char* name = "interval size vs width bound";
    const int64_t n_max = budget.cap(2000, 1000000);
    const int trials = budget.full ? 10000 : 1000;
    std::mt19937_64 rng(424242);
    int64_t cases = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const int64_t n = std::uniform_int_distribution<int64_t>(1, n_max)(rng);
        int64_t d;
        switch (trial % 3) {
        case 0:
            d = std::uniform_int_distribution<int64_t>(1, n)(rng);
            break;
        case 1:
            d = std::uniform_int_distribution<int64_t>(1, std::max<int64_t>(1, isqrt(n)))(rng);
            break;
        default:
            d = n / std::uniform_int_distribution<int64_t>(1, std::max<int64_t>(1, isqrt(n)))(rng);
            break;
        }
        const auto view = interval(d, n);
        const long double w = static_cast<long double>(n) / static_cast<long double>(d);
        if (static_cast<long double>(view.size()) > 1.5L * powl(w, 2.0L / 3.0L) + 1e-9L)
            return fail(name, cases,
                        "width bound fails at (d,n) = (" + std::to_string(d) + "," +
                            std::to_string(n) + "), size " + std::to_string(view.size()));
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_exact_family(const VerifyBudget& budget)
{
    const char* name = "exact size family Q[d, d^4]";
    const int64_t d_max = budget.full ? 50 : 6;
    int64_t cases = 0;
    for (int64_t d = 1; d <= d_max; ++d) {
        const int64_t n = d * d * d * d;
        const auto view = interval(d, n);
        const int64_t expected = 3 * d * d / 2 - d / 2; // (3d^2 - d)/2, d and 3d^2 same parity
        if (static_cast<int64_t>(view.size()) != (3 * d * d - d) / 2)
            return fail(name, cases,
                        "size(" + std::to_string(d) + "," + std::to_string(n) + ") = " +
                            std::to_string(view.size()) + ", expected " + std::to_string(expected));
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_lower_bounds(const VerifyBudget& budget)
{
    const char* name = "interval size lower bounds";
    const int64_t limit = budget.cap(2000, 10000);
    // sigma_0 sieve up to sqrt(limit)
    const int64_t smax = isqrt(limit);
    std::vector<int64_t> sigma0(static_cast<std::size_t>(smax) + 1, 0);
    for (int64_t j = 1; j <= smax; ++j)
        for (int64_t m = j; m <= smax; m += j)
            ++sigma0[m];

    int64_t cases = 0;
    for (int64_t n = 1; n <= limit; ++n) {
        const auto el = initial_elements(n);
        const int64_t s = isqrt(n);
        for (int64_t e : el) {
            // |Q[e, n]| by filtering
            int64_t size = 0;
            for (int64_t x : el)
                if (x >= e && is_floor_multiple(e, x))
                    ++size;
            const long double sz = static_cast<long double>(size);
            const int64_t e4 = e <= 55108 ? e * e * e * e : 0; // e^4, only needed small
            if (e <= s && e4 != 0 && e4 <= n) { // d <= n^(1/4)
                const long double rhs = 1.5L * sqrtl((long double)n) -
                                        0.5L * sqrtl(sqrtl((long double)n)) - 1.0L;
                if (sz + 1e-9L < rhs)
                    return fail(name, cases,
                                "low-d bound fails at (d,n) = (" + std::to_string(e) + "," +
                                    std::to_string(n) + ")");
            }
            if (e <= s && (e4 == 0 || e4 >= n)) { // n^(1/4) <= d <= n^(1/2)
                const long double r = (long double)n / ((long double)e * (long double)e);
                const long double rhs = 1.5L * r - 1.5L * sqrtl(r);
                if (sz + 1e-9L < rhs)
                    return fail(name, cases,
                                "mid-d bound fails at (d,n) = (" + std::to_string(e) + "," +
                                    std::to_string(n) + ")");
            }
            if (e > s) {
                const int64_t k = n / e; // e = floor(n/k), k <= s
                if (size != sigma0[k])
                    return fail(name, cases,
                                "upper-half size != sigma_0 at (d,n) = (" + std::to_string(e) +
                                    "," + std::to_string(n) + ")");
            }
            ++cases;
        }
    }
    return pass(name, cases);
}

CheckResult check_anti_isomorphism(const VerifyBudget& budget)
{
    const char* name = "upper half anti-isomorphic to divisor order";
    const int64_t limit = budget.cap(2000, 5000);
    int64_t cases = 0;
    for (int64_t n = 1; n <= limit; ++n) {
        const int64_t s = isqrt(n);
        for (int64_t j = 1; j <= s; ++j)
            for (int64_t l = 1; l <= s; ++l) {
                if (fq(n / j, n / l) != (j % l == 0))
                    return fail(name, cases,
                                "grid mismatch at n = " + std::to_string(n) + ", (j,l) = (" +
                                    std::to_string(j) + "," + std::to_string(l) + ")");
                ++cases;
            }
    }
    return pass(name, cases);
}

CheckResult check_never_order_preserving(const VerifyBudget&)
{
    const char* name = "involution never order-preserving";
    int64_t cases = 0;
    for (int64_t n = 1; n <= 2000; ++n) {
        const auto el = initial_elements(n);
        for (int64_t d : el)
            for (int64_t e : el) {
                if (d >= e || !fq(d, e))
                    continue;
                if (fq(n / d, n / e))
                    return fail(name, cases,
                                "J_n preserves order at n = " + std::to_string(n) + ", (d,e) = (" +
                                    std::to_string(d) + "," + std::to_string(e) + ")");
                ++cases;
            }
    }
    return pass(name, cases);
}

CheckResult check_gap_multiplicity(const VerifyBudget& budget)
{
    const char* name = "gap/multiplicity interchange";
    const int64_t limit = budget.cap(2000, 5000);
    int64_t cases = 0;
    for (int64_t n = 1; n <= limit; ++n) {
        for (int64_t d : initial_elements(n)) {
            const int64_t jd = n / d;
            if (gap(jd, n) != multiplicity(d, n) || multiplicity(jd, n) != gap(d, n))
                return fail(name, cases,
                            "interchange fails at (d,n) = (" + std::to_string(d) + "," +
                                std::to_string(n) + ")");
            ++cases;
        }
    }
    return pass(name, cases);
}

CheckResult check_fixed_points(const VerifyBudget& budget)
{
    const char* name = "involution fixed points";
    const int64_t limit = budget.cap(2000, 10000);
    int64_t cases = 0;
    for (int64_t n = 1; n <= limit; ++n) {
        const int64_t s = isqrt(n);
        const bool expect_fixed = n / s == s; // s^2 <= n < s(s+1)
        for (int64_t d : initial_elements(n)) {
            const bool fixed = n / d == d;
            if (fixed != (expect_fixed && d == s))
                return fail(name, cases,
                            "fixed-point set wrong at n = " + std::to_string(n) + ", d = " +
                                std::to_string(d));
            ++cases;
        }
    }
    return pass(name, cases);
}

CheckResult check_consecutive_reconstruction(const VerifyBudget& budget)
{
    const char* name = "consecutive-interval reconstruction";
    const int64_t limit = budget.cap(2000, 10000);
    int64_t cases = 0;
    for (int64_t n = 2; n <= limit; ++n) {
        const auto delta = consecutive_delta(n);
        const auto prev = initial_elements(n - 1);
        std::set<int64_t> rebuilt(prev.begin(), prev.end());
        for (int64_t r : delta.removed)
            if (rebuilt.erase(r) != 1)
                return fail(name, cases,
                            "removed element " + std::to_string(r) + " absent from Q[1," +
                                std::to_string(n - 1) + "]");
        for (int64_t a : delta.added)
            if (!rebuilt.insert(a).second)
                return fail(name, cases,
                            "added element " + std::to_string(a) + " already present at n = " +
                                std::to_string(n));
        const auto cur = initial_elements(n);
        if (!std::equal(cur.begin(), cur.end(), rebuilt.begin(), rebuilt.end()))
            return fail(name, cases, "reconstruction mismatch at n = " + std::to_string(n));
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_consecutive_posets(const VerifyBudget&)
{
    const char* name = "consecutive-interval poset maps";
    int64_t cases = 0;
    for (int64_t n = 3; n <= 2000; ++n) {
        const int64_t s = isqrt(n);
        if (s * s == n)
            continue;
        // identity on Q^-: same additive interval {1..s}, nothing to map.
        // k-indexed map on Q^+ preserves and reflects the relation:
        for (int64_t j = 1; j <= s; ++j)
            for (int64_t l = 1; l <= s; ++l) {
                if (fq((n - 1) / j, (n - 1) / l) != fq(n / j, n / l))
                    return fail(name, cases,
                                "upper map not an order isomorphism at n = " + std::to_string(n) +
                                    ", (j,l) = (" + std::to_string(j) + "," + std::to_string(l) +
                                    ")");
                ++cases;
            }
    }
    return pass(name, cases);
}

CheckResult check_incidence(const VerifyBudget& budget)
{
    const char* name = "incidence counts and sigma identity";
    int64_t cases = 0;

    auto run_one = [&](int64_t n) -> std::string {
        const IncidenceStats st = incidence_stats(n); // internal sigma self-check throws
        const int64_t expected_total = st.z_minus + st.z_plus + st.z_cross_minus_plus +
                                       st.z_cross_plus_minus - (st.overlap ? 1 : 0);
        if (st.z_total != expected_total)
            return "half decomposition fails at n = " + std::to_string(n);
        if (st.z_cross_plus_minus != 0 && st.z_cross_plus_minus != 1)
            return "z_cross_plus_minus outside {0,1} at n = " + std::to_string(n);
        // independent route: total = sum of initial-interval sizes over elements
        int64_t closure = 0;
        for (int64_t b : initial_elements(n))
            closure += initial_size_closed(b);
        if (st.z_total != closure)
            return "downward-closure total mismatch at n = " + std::to_string(n);
        ++cases;
        return "";
    };

    const int64_t exhaustive = budget.cap(2000, 10000);
    for (int64_t n = 1; n <= exhaustive; ++n)
        if (auto msg = run_one(n); !msg.empty())
            return fail(name, cases, msg);

    if (budget.full) {
        for (int64_t s = 2; s <= 200; ++s)
            for (int64_t n : {s * s - 1, s * s, s * s + 1, s * (s + 1) - 1, s * (s + 1),
                              s * (s + 1) + 1})
                if (auto msg = run_one(n); !msg.empty())
                    return fail(name, cases, msg);
        for (int64_t s : {250, 316, 500, 707, 999, 1000})
            for (int64_t n : {s * s - 1, s * s, s * s + 1, s * (s + 1), s * s + s + 1})
                if (auto msg = run_one(n); !msg.empty())
                    return fail(name, cases, msg);
        std::mt19937_64 rng(31337);
        for (int trial = 0; trial < 200; ++trial) {
            const int64_t n = std::uniform_int_distribution<int64_t>(1, 1000000)(rng);
            if (auto msg = run_one(n); !msg.empty())
                return fail(name, cases, msg);
        }
        for (int64_t n : {10000, 100000, 1000000})
            if (auto msg = run_one(n); !msg.empty())
                return fail(name, cases, msg);
    }
    return pass(name, cases);
}

CheckResult check_chain_envelope(const VerifyBudget& budget)
{
    const char* name = "chain-count envelope";
    const int64_t n_max = budget.cap(2000, 100000);
    const int trials = budget.full ? 10000 : 500;
    const long double a0 = static_cast<long double>(alpha0());
    std::mt19937_64 rng(5150);
    int64_t cases = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const int64_t n = std::uniform_int_distribution<int64_t>(1, n_max)(rng);
        const int64_t s = std::max<int64_t>(1, isqrt(n));
        int64_t d;
        switch (trial % 3) {
        case 0:
            d = std::uniform_int_distribution<int64_t>(1, n)(rng);
            break;
        case 1:
            d = std::uniform_int_distribution<int64_t>(1, s)(rng);
            break;
        default:
            d = n / std::uniform_int_distribution<int64_t>(1, s)(rng);
            break;
        }
        const ChainCount cc = count_chains(d, n);
        const long double bound =
            powl(static_cast<long double>(n) / static_cast<long double>(d), a0);
        if (static_cast<long double>(cc.total) > bound)
            return fail(name, cases,
                        "TC(" + std::to_string(d) + "," + std::to_string(n) + ") = " +
                            std::to_string(cc.total) + " exceeds width^alpha0");
        int64_t total = 0;
        for (int64_t c : cc.by_length)
            total += c;
        if (total != cc.total)
            return fail(name, cases, "by_length sum mismatch at (" + std::to_string(d) + "," +
                                         std::to_string(n) + ")");
        ++cases;
    }
    return pass(name, cases);
}

// ---- mobius ----

CheckResult check_classical_sieve(const VerifyBudget& budget)
{
    const char* name = "classical mobius divisor-sum identity";
    const int64_t limit = budget.cap(2000, 100000);
    const auto table = classical_mobius(limit);
    std::vector<int64_t> divsum(static_cast<std::size_t>(limit) + 1, 0);
    for (int64_t d = 1; d <= limit; ++d)
        for (int64_t m = d; m <= limit; m += d)
            divsum[m] += table.mu[d];
    int64_t cases = 0;
    for (int64_t n = 2; n <= limit; ++n) {
        if (divsum[n] != 0)
            return fail(name, cases, "sum_{d|n} mu(d) != 0 at n = " + std::to_string(n));
        if (table.mu[n] != mobius_value(n))
            return fail(name, cases, "sieve vs factorization mismatch at n = " + std::to_string(n));
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_defining_recursion(const VerifyBudget& budget, Mu1Context& ctx)
{
    const char* name = "mobius defining recursion";
    const int64_t limit = budget.cap(500, 1500);
    int64_t cases = 0;
    for (int64_t n = 2; n <= limit; ++n) {
        const auto el = initial_elements(n);
        for (int64_t d : el) {
            if (d == n)
                continue;
            int64_t sum = 0;
            for (int64_t e : el)
                if (e >= d && is_floor_multiple(d, e))
                    sum += ctx.mu1(d, e);
            if (sum != 0)
                return fail(name, cases,
                            "sum over Q[" + std::to_string(d) + "," + std::to_string(n) +
                                "] is " + std::to_string(sum));
            ++cases;
        }
    }
    return pass(name, cases);
}

CheckResult check_dual_recursion(const VerifyBudget& budget, Mu1Context& ctx)
{
    const char* name = "mobius dual recursion";
    const int64_t limit = budget.cap(500, 1500);
    int64_t cases = 0;
    for (int64_t n = 2; n <= limit; ++n) {
        const auto el = initial_elements(n);
        for (int64_t d : el) {
            if (d == n)
                continue;
            int64_t sum = 0;
            for (int64_t e : el)
                if (e >= d && is_floor_multiple(d, e))
                    sum += ctx.mu1(e, n);
            if (sum != 0)
                return fail(name, cases,
                            "dual sum over Q[" + std::to_string(d) + "," + std::to_string(n) +
                                "] is " + std::to_string(sum));
            ++cases;
        }
    }
    return pass(name, cases);
}

CheckResult check_table_vs_recursion(const VerifyBudget&, Mu1Context& ctx)
{
    const char* name = "table builder vs memoized recursion";
    const auto table = mu1_initial_table(2000);
    int64_t cases = 0;
    for (int64_t n = 1; n <= 2000; ++n) {
        if (table.mu1[n] != ctx.mu1(1, n))
            return fail(name, cases, "mu1(1," + std::to_string(n) + ") differs");
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_hall(const VerifyBudget& budget, Mu1Context& ctx)
{
    const char* name = "hall chain-sum equivalence";
    const int64_t limit = budget.cap(200, 300);
    int64_t cases = 0;
    for (int64_t n = 1; n <= limit; ++n)
        for (int64_t d : initial_elements(n)) {
            if (hall_chain_sum(d, n) != ctx.mu1(d, n))
                return fail(name, cases,
                            "hall != mu1 at (d,n) = (" + std::to_string(d) + "," +
                                std::to_string(n) + ")");
            ++cases;
        }
    return pass(name, cases);
}

CheckResult check_sqrt_reduction(const VerifyBudget& budget)
{
    const char* name = "sqrt-domain reduction to classical mu";
    const int64_t limit = budget.cap(2000, 10000);
    Mu1Context plain(false); // defining recursion only, no shortcut
    int64_t cases = 0;
    for (int64_t n = 1; n <= limit; ++n) {
        const int64_t s = isqrt(n);
        for (int64_t d : initial_elements(n)) {
            if (d < s)
                continue;
            if (d * d < n)
                continue;
            const int64_t expected = mobius_value(n / d);
            if (plain.mu1(d, n) != expected)
                return fail(name, cases,
                            "reduction fails at (d,n) = (" + std::to_string(d) + "," +
                                std::to_string(n) + ")");
            if (std::llabs(expected) > 1)
                return fail(name, cases, "|mu1| > 1 on sqrt domain at n = " + std::to_string(n));
            ++cases;
        }
    }
    return pass(name, cases);
}

CheckResult check_mu_grid(const VerifyBudget&, Mu1Context& ctx)
{
    const char* name = "upper-half mobius grid";
    int64_t cases = 0;
    for (int64_t n : {int64_t{1000}, int64_t{9999}, int64_t{10000}}) {
        const int64_t s = isqrt(n);
        for (int64_t k = 1; k <= s; ++k)
            for (int64_t l = 1; l <= k; ++l) {
                const int64_t expected = k % l == 0 ? mobius_value(k / l) : 0;
                if (ctx.mu1(n / k, n / l) != expected)
                    return fail(name, cases,
                                "grid value wrong at n = " + std::to_string(n) + ", (k,l) = (" +
                                    std::to_string(k) + "," + std::to_string(l) + ")");
                ++cases;
            }
    }
    return pass(name, cases);
}

CheckResult check_vanishing(const VerifyBudget& budget)
{
    const char* name = "differenced mobius vanishing classes";
    const int64_t limit = budget.cap(2000, 100000);
    const auto table = mu1_initial_table(limit);
    const auto classical = classical_mobius(limit);
    // largest prime factor sieve
    std::vector<int64_t> maxpf(static_cast<std::size_t>(limit) + 1, 0);
    for (int64_t p = 2; p <= limit; ++p)
        if (maxpf[p] == 0)
            for (int64_t m = p; m <= limit; m += p)
                maxpf[m] = p;
    int64_t cases = 0;
    for (int64_t n = 3; n <= limit; ++n) {
        const bool odd_squarefree = n % 2 == 1 && classical.mu[n] != 0;
        const bool big_prime = (maxpf[n] - 1) * (maxpf[n] - 1) >= n; // p >= sqrt(n) + 1
        if ((odd_squarefree || big_prime) && table.delta[n] != 0)
            return fail(name, cases, "delta[" + std::to_string(n) + "] != 0");
        if (odd_squarefree || big_prime)
            ++cases;
    }
    return pass(name, cases);
}

CheckResult check_mobius_envelope(const VerifyBudget& budget, Mu1Context& ctx)
{
    const char* name = "mobius growth envelope";
    const int64_t n_max = budget.cap(2000, 100000);
    const int trials = budget.full ? 10000 : 500;
    const long double a0 = static_cast<long double>(alpha0());
    std::mt19937_64 rng(8086);
    int64_t cases = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const int64_t n = std::uniform_int_distribution<int64_t>(1, n_max)(rng);
        const int64_t s = std::max<int64_t>(1, isqrt(n));
        int64_t d;
        switch (trial % 3) {
        case 0:
            d = std::uniform_int_distribution<int64_t>(1, n)(rng);
            break;
        case 1:
            d = std::uniform_int_distribution<int64_t>(1, s)(rng);
            break;
        default:
            d = n / std::uniform_int_distribution<int64_t>(1, s)(rng);
            break;
        }
        const int64_t v = ctx.mu1(d, n);
        const long double bound =
            powl(static_cast<long double>(n) / static_cast<long double>(d), a0);
        if (static_cast<long double>(std::llabs(v)) > bound)
            return fail(name, cases,
                        "|mu1(" + std::to_string(d) + "," + std::to_string(n) +
                            ")| exceeds width^alpha0");
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_cancellation(const VerifyBudget& budget, Mu1Context& ctx)
{
    const char* name = "doubling cancellation recursion";
    const int64_t limit = budget.cap(200, 500);
    int64_t cases = 0;
    for (int64_t n = 2; n <= limit; ++n) {
        const int64_t s = isqrt(n);
        int64_t sum = 0;
        for (int64_t m : initial_elements(2 * n)) {
            if (m <= s || m >= 2 * n)
                continue;
            if (fq(m, n))
                continue;
            sum += ctx.mu1(1, m);
        }
        if (ctx.mu1(1, 2 * n) != -sum)
            return fail(name, cases, "cancellation recursion fails at n = " + std::to_string(n));
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_sign_changes(const VerifyBudget& budget)
{
    const char* name = "sign-change sequence bounds";
    const int64_t limit = budget.cap(2000, 1000000);
    const auto table = mu1_initial_table(limit);
    const auto seq = sign_change_sequence(table);
    if (seq.entries.empty() || seq.entries[0] != 2)
        return fail(name, 0, "sequence does not start at 2");
    if (table.mu1[2] != -1)
        return fail(name, 0, "mu1(1,2) != -1");
    int64_t cases = 0;
    for (std::size_t j = 0; j < seq.entries.size(); ++j) {
        const int64_t v = table.mu1[static_cast<std::size_t>(seq.entries[j])];
        const int expected_sign = j % 2 == 0 ? -1 : 1; // (-1)^(j+1) with 1-based j
        if ((v > 0 ? 1 : v < 0 ? -1 : 0) != expected_sign)
            return fail(name, cases, "sign wrong at entry " + std::to_string(seq.entries[j]));
        if (j + 1 < seq.entries.size()) {
            const int64_t l = seq.entries[j];
            if (seq.entries[j + 1] <= l || seq.entries[j + 1] > 2 * l * l - 2)
                return fail(name, cases,
                            "step bound violated after " + std::to_string(l));
        }
        ++cases;
    }
    return pass(name, cases);
}

CheckResult check_alpha0(const VerifyBudget&)
{
    const char* name = "alpha0 bisection residual";
    const double a = alpha0();
    if (!(1.728 < a && a < 1.730))
        return fail(name, 1, "alpha0 = " + std::to_string(a) + " outside (1.728, 1.730)");
    if (std::fabs(zeta_real(a) - 2.0) > 1e-12)
        return fail(name, 1, "zeta(alpha0) misses 2 by more than 1e-12");
    return pass(name, 2);
}

} // namespace

CheckResult verify_mobius_table(const MobiusTable& table)
{
    const char* name = "mobius table structural identities";
    const int64_t limit = table.limit;
    int64_t cases = 0;
    if (table.mu1.size() != static_cast<std::size_t>(limit) + 1 ||
        table.delta.size() != static_cast<std::size_t>(limit) + 1)
        return fail(name, cases, "array sizes do not match limit");
    if (table.mu1[1] != 1 || table.delta[1] != 1)
        return fail(name, cases, "seed at n = 1 wrong");
    if (limit >= 2 && (table.mu1[2] != -1 || table.delta[2] != -2))
        return fail(name, cases, "seed at n = 2 wrong");

    int64_t s = 1;
    for (int64_t n = 2; n <= limit; ++n) {
        if (table.mu1[n] != table.mu1[n - 1] + table.delta[n])
            return fail(name, cases, "prefix-sum break at n = " + std::to_string(n));
        ++cases;
        if (n < 3)
            continue;
        while ((s + 1) * (s + 1) <= n)
            ++s;
        // independent re-derivation by divisor enumeration
        int64_t sum = 0;
        for (int64_t j = 2; j * j < n; ++j)
            if (n % j == 0)
                sum += table.delta[n / j];
        int64_t expected = -sum;
        if (s * s == n || s * (s + 1) == n)
            expected -= table.mu1[s];
        if (table.delta[n] != expected)
            return fail(name, cases, "differenced recursion fails at n = " + std::to_string(n));
        ++cases;
    }
    return pass(name, cases);
}

std::vector<CheckResult> run_all_checks(const VerifyBudget& budget, std::ostream* progress)
{
    std::vector<CheckResult> results;
    Mu1Context ctx;

    auto add = [&](CheckResult r) {
        if (progress)
            *progress << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)"
                      << (r.passed ? "" : ": " + r.counterexample) << "\n";
        results.push_back(std::move(r));
    };

    add(check_six_characterizations(budget));
    add(check_partial_order_axioms(budget));
    add(check_sandwich(budget));
    add(check_involution(budget));
    add(check_cutting_partition(budget));
    add(check_commute(budget));
    add(check_semigroup_closure(budget));
    add(check_membership_oracle(budget));
    add(check_generators(budget));
    add(check_frobenius(budget));
    add(check_size_sandwich(budget));
    add(check_width_bound(budget));
    add(check_exact_family(budget));
    add(check_lower_bounds(budget));
    add(check_anti_isomorphism(budget));
    add(check_never_order_preserving(budget));
    add(check_gap_multiplicity(budget));
    add(check_fixed_points(budget));
    add(check_consecutive_reconstruction(budget));
    add(check_consecutive_posets(budget));
    add(check_incidence(budget));
    add(check_chain_envelope(budget));
    add(check_classical_sieve(budget));
    add(check_defining_recursion(budget, ctx));
    add(check_dual_recursion(budget, ctx));
    add(check_table_vs_recursion(budget, ctx));
    add(check_hall(budget, ctx));
    add(check_sqrt_reduction(budget));
    add(check_mu_grid(budget, ctx));
    add(check_vanishing(budget));
    add(check_mobius_envelope(budget, ctx));
    add(check_cancellation(budget, ctx));
    add(check_sign_changes(budget));
    add(verify_mobius_table(mu1_initial_table(budget.cap(2000, 100000))));
    add(check_alpha0(budget));

    return results;
}

} // namespace floorq
