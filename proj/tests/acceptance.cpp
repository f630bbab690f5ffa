// Acceptance suite: every criterion prints exactly one PASS/FAIL line.
// Exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "floorq/alpha.hpp"
#include "floorq/interval.hpp"
#include "floorq/io.hpp"
#include "floorq/mobius.hpp"
#include "floorq/relation.hpp"
#include "floorq/semigroup.hpp"

using namespace floorq;

namespace {

struct Reporter {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& message)
    {
        if (ok && !condition) {
            ok = false;
            detail = message;
        }
    }
};

// ---------------------------------------------------------------- criterion 1
void worked_examples(Reporter& r)
{
    r.require(initial_interval(16).elements == std::vector<int64_t>{1, 2, 3, 4, 5, 8, 16},
              "Q[1,16] elements");
    auto edges = covering_edges(initial_interval(16));
    std::sort(edges.begin(), edges.end());
    const std::vector<std::pair<int64_t, int64_t>> figure_edges = {
        {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 16}, {4, 8}, {5, 16}, {8, 16}};
    r.require(edges == figure_edges, "Q[1,16] covering edges");

    const std::vector<int64_t> a_values = {1, 2, 3, 4, 9};
    const std::vector<std::size_t> sizes = {5, 6, 6, 5, 4};
    for (std::size_t i = 0; i < a_values.size(); ++i)
        r.require(interval(a_values[i], 10 * a_values[i]).size() == sizes[i],
                  "|Q[a,10a]| at a = " + std::to_string(a_values[i]));

    r.require(interval(10, 10000).size() == 145, "|Q[10,10000]|");

    const auto m4 = semigroup_info(4);
    r.require(m4.frobenius == 15, "M(4) frobenius");
    r.require(m4.generators == std::vector<int64_t>{4, 9, 14, 19}, "M(4) generators");
    r.require(semigroup_gaps(4) == std::vector<int64_t>{1, 2, 3, 5, 6, 7, 10, 11, 15},
              "M(4) gaps");

    const auto s11 = split(11);
    r.require(s11.q_minus == std::vector<int64_t>{1, 2, 3} &&
                  s11.q_plus == std::vector<int64_t>{3, 5, 11} && s11.overlap == 3,
              "split(11)");
    const auto s12 = split(12);
    r.require(s12.q_minus == std::vector<int64_t>{1, 2, 3} &&
                  s12.q_plus == std::vector<int64_t>{4, 6, 12} && !s12.overlap.has_value(),
              "split(12)");
}

// ---------------------------------------------------------------- criterion 2
void oracle_equivalences(Reporter& r)
{
    for (int64_t n = 1; n <= 500 && r.ok; ++n)
        for (int64_t d = 1; d <= 500; ++d) {
            const bool ref = characterization(d, n, Characterization::TippingPoint);
            bool all_equal = true;
            for (int v = 0; v < 6; ++v)
                all_equal &= characterization(d, n, static_cast<Characterization>(v)) == ref;
            if (!all_equal) {
                r.require(false, "characterizations disagree at (" + std::to_string(d) + "," +
                                     std::to_string(n) + ")");
                break;
            }
        }

    const auto table = mu1_initial_table(2000);
    Mu1Context ctx;
    for (int64_t n = 1; n <= 2000 && r.ok; ++n)
        r.require(table.mu1_at(n) == ctx.mu1(1, n),
                  "table vs recursion at n = " + std::to_string(n));

    for (int64_t n = 1; n <= 300 && r.ok; ++n)
        for (int64_t e : initial_elements(n))
            if (hall_chain_sum(e, n) != ctx.mu1(e, n)) {
                r.require(false, "hall sum differs at (" + std::to_string(e) + "," +
                                     std::to_string(n) + ")");
                break;
            }
}

// ---------------------------------------------------------------- criterion 3
void exact_closed_forms(Reporter& r)
{
    for (int64_t d = 1; d <= 50 && r.ok; ++d) {
        const int64_t n = d * d * d * d;
        r.require(static_cast<int64_t>(interval(d, n).size()) == (3 * d * d - d) / 2,
                  "|Q[d,d^4]| at d = " + std::to_string(d));
    }

    // z_plus = sum sigma_0 (self-checked inside every incidence_stats call):
    // exhaustive to 1e4, split-boundary cases, samples and decades to 1e6.
    auto check_stats = [&](int64_t n) {
        const auto st = incidence_stats(n);
        r.require(st.z_total == st.z_minus + st.z_plus + st.z_cross_minus_plus +
                                    st.z_cross_plus_minus - (st.overlap ? 1 : 0),
                  "incidence decomposition at n = " + std::to_string(n));
    };
    for (int64_t n = 1; n <= 10000 && r.ok; ++n)
        check_stats(n);
    for (int64_t s = 2; s <= 200 && r.ok; ++s)
        for (int64_t n : {s * s - 1, s * s, s * s + 1, s * (s + 1) - 1, s * (s + 1),
                          s * (s + 1) + 1})
            check_stats(n);
    for (int64_t s : {int64_t{500}, int64_t{707}, int64_t{999}, int64_t{1000}})
        for (int64_t n : {s * s - 1, s * s, s * (s + 1)})
            if (r.ok)
                check_stats(n);
    std::mt19937_64 rng(2718281828);
    for (int trial = 0; trial < 200 && r.ok; ++trial)
        check_stats(std::uniform_int_distribution<int64_t>(1, 1000000)(rng));
    if (r.ok) {
        r.require(incidence_stats(10000).z_plus == 482, "z_plus at 1e4");
        r.require(incidence_stats(100000).z_plus == 1873, "z_plus at 1e5");
        r.require(incidence_stats(1000000).z_plus == 7069, "z_plus at 1e6");
    }

    for (int64_t n = 1; n <= 2000 && r.ok; ++n)
        for (int64_t d = 1; d <= 2000; ++d) {
            const auto w = cutting_set(d, n);
            const int64_t expected = d > n ? 0 : n / d - n / (d + 1);
            if (w.cardinality() != expected || w.related() != (expected > 0)) {
                r.require(false, "cutting-set cardinality at (" + std::to_string(d) + "," +
                                     std::to_string(n) + ")");
                break;
            }
        }
}

// ---------------------------------------------------------------- criterion 4
void bound_suites(Reporter& r)
{
    for (int64_t n = 1; n <= 100000 && r.ok; ++n) {
        const long double size = static_cast<long double>(initial_elements(n).size());
        const long double root = sqrtl(static_cast<long double>(n));
        if (!(2 * root - 2 < size && size < 2 * root)) {
            r.require(false, "size sandwich at n = " + std::to_string(n));
            break;
        }
    }

    std::mt19937_64 rng(1618033988);
    for (int trial = 0; trial < 10000 && r.ok; ++trial) {
        const int64_t n = std::uniform_int_distribution<int64_t>(1, 1000000)(rng);
        const int64_t s = std::max<int64_t>(1, isqrt(n));
        int64_t d = 0;
        switch (trial % 3) {
        case 0: d = std::uniform_int_distribution<int64_t>(1, n)(rng); break;
        case 1: d = std::uniform_int_distribution<int64_t>(1, s)(rng); break;
        default: d = n / std::uniform_int_distribution<int64_t>(1, s)(rng); break;
        }
        const long double w = static_cast<long double>(n) / static_cast<long double>(d);
        if (static_cast<long double>(interval(d, n).size()) > 1.5L * powl(w, 2.0L / 3.0L) + 1e-9L)
            r.require(false, "width bound at (" + std::to_string(d) + "," + std::to_string(n) + ")");
    }

    const long double a0 = static_cast<long double>(alpha0());
    r.require(std::fabs(zeta_real(alpha0()) - 2.0) < 1e-12, "alpha0 bisection residual");

    Mu1Context ctx;
    std::mt19937_64 rng2(3141592653);
    for (int trial = 0; trial < 10000 && r.ok; ++trial) {
        const int64_t n = std::uniform_int_distribution<int64_t>(1, 100000)(rng2);
        const int64_t s = std::max<int64_t>(1, isqrt(n));
        int64_t d = 0;
        switch (trial % 3) {
        case 0: d = std::uniform_int_distribution<int64_t>(1, n)(rng2); break;
        case 1: d = std::uniform_int_distribution<int64_t>(1, s)(rng2); break;
        default: d = n / std::uniform_int_distribution<int64_t>(1, s)(rng2); break;
        }
        const long double bound = powl((long double)n / (long double)d, a0);
        const int64_t tc = count_chains(d, n).total;
        if (static_cast<long double>(tc) > bound) {
            r.require(false, "chain bound at (" + std::to_string(d) + "," + std::to_string(n) + ")");
            break;
        }
        const int64_t mv = ctx.mu1(d, n);
        if (static_cast<long double>(std::llabs(mv)) > bound) {
            r.require(false, "mobius bound at (" + std::to_string(d) + "," + std::to_string(n) + ")");
            break;
        }
    }
}

// ---------------------------------------------------------------- criterion 5
void mobius_structure(Reporter& r)
{
    Mu1Context plain(false); // no sqrt shortcut: independent route
    for (int64_t n = 1; n <= 10000 && r.ok; ++n) {
        for (int64_t d : initial_elements(n)) {
            if (d * d < n)
                continue;
            if (plain.mu1(d, n) != mobius_value(n / d)) {
                r.require(false, "sqrt reduction at (" + std::to_string(d) + "," +
                                     std::to_string(n) + ")");
                break;
            }
        }
    }

    Mu1Context ctx;
    for (int64_t n : {int64_t{1000}, int64_t{9999}, int64_t{10000}}) {
        const int64_t s = isqrt(n);
        for (int64_t k = 1; k <= s && r.ok; ++k)
            for (int64_t l = 1; l <= k; ++l) {
                const int64_t expected = k % l == 0 ? mobius_value(k / l) : 0;
                if (ctx.mu1(n / k, n / l) != expected) {
                    r.require(false, "mu grid at n = " + std::to_string(n) + ", (k,l) = (" +
                                         std::to_string(k) + "," + std::to_string(l) + ")");
                    break;
                }
            }
    }

    const int64_t limit = 100000;
    const auto table = mu1_initial_table(limit);
    const auto classical = classical_mobius(limit);
    std::vector<int64_t> maxpf(static_cast<std::size_t>(limit) + 1, 0);
    for (int64_t p = 2; p <= limit; ++p)
        if (maxpf[p] == 0)
            for (int64_t m = p; m <= limit; m += p)
                maxpf[m] = p;
    for (int64_t n = 3; n <= limit && r.ok; ++n) {
        const bool odd_squarefree = n % 2 == 1 && classical.mu_at(n) != 0;
        const bool big_prime = (maxpf[n] - 1) * (maxpf[n] - 1) >= n;
        if ((odd_squarefree || big_prime) && table.delta_at(n) != 0)
            r.require(false, "delta vanishing at n = " + std::to_string(n));
    }
}

// ---------------------------------------------------------------- criterion 6
void sign_changes(Reporter& r, const MobiusTable& table)
{
    r.require(table.mu1_at(2) == -1, "mu1(1,2)");
    const auto seq = sign_change_sequence(table);
    r.require(!seq.entries.empty() && seq.entries.front() == 2, "sequence starts at 2");
    r.require(seq.entries == std::vector<int64_t>{2, 6, 23, 62, 70, 91, 122, 133, 1072},
              "frozen sequence over the 1e6 table");
    for (std::size_t j = 0; j + 1 < seq.entries.size() && r.ok; ++j) {
        const int64_t l = seq.entries[j];
        r.require(seq.entries[j + 1] > l && seq.entries[j + 1] <= 2 * l * l - 2,
                  "step bound after " + std::to_string(l));
    }
    for (std::size_t j = 0; j < seq.entries.size() && r.ok; ++j) {
        const int64_t v = table.mu1_at(seq.entries[j]);
        r.require(j % 2 == 0 ? v < 0 : v > 0, "alternation at " + std::to_string(seq.entries[j]));
    }
}

// ---------------------------------------------------------------- criterion 7
void incidence_asymptotics(Reporter& r, std::string& recorded)
{
    // Calibration per the design decision: C = 1.5 * max over n in
    // {1e3, 1e4, 1e5} of |Z - (16/3) n^(3/4)| / sqrt(n), frozen from the
    // fixture values Z = 766, 4755, 28136 -> C = 8.802.
    const double C = 8.802;
    const int64_t z3 = incidence_stats(1000).z_total;
    const int64_t z4 = incidence_stats(10000).z_total;
    const int64_t z5 = incidence_stats(100000).z_total;
    const int64_t z6 = incidence_stats(1000000).z_total;
    r.require(z3 == 766 && z4 == 4755 && z5 == 28136 && z6 == 162792, "frozen Z values");

    const double main6 = 16.0 / 3.0 * std::pow(1e6, 0.75);
    const double ratio6 = static_cast<double>(z6) / main6;
    r.require(0.95 <= ratio6 && ratio6 <= 1.05, "Z/main at 1e6 outside [0.95, 1.05]");

    std::ostringstream rec;
    rec << "C = " << C << ";";
    for (auto [n, z] : {std::pair<int64_t, int64_t>{10000, z4}, {100000, z5}, {1000000, z6}}) {
        const double dev = std::fabs(static_cast<double>(z) -
                                     16.0 / 3.0 * std::pow(static_cast<double>(n), 0.75)) /
                           std::sqrt(static_cast<double>(n));
        rec << " dev(" << n << ") = " << dev << ";";
        r.require(dev <= C, "deviation/sqrt(n) exceeds recorded C at n = " + std::to_string(n));
    }
    rec << " Z(1e6)/main = " << ratio6;
    recorded = rec.str();
}

// ---------------------------------------------------------------- criterion 8
void figure_scale_data(Reporter& r, const MobiusTable& table, double build_seconds)
{
    r.require(build_seconds <= 60.0,
              "1e6 table build took " + std::to_string(build_seconds) + " s");
    const auto g = growth_scan(table, 0.6);
    r.require(g.max_ratio > 1.0, "no n with |mu1| > n^0.6");
    r.require(g.max_abs == 6603 && g.argmax_n == 990360, "frozen growth maximum");
    const int64_t first = 186560; // first exceeder, frozen
    r.require(std::llabs(table.mu1_at(first)) >
                  static_cast<int64_t>(std::pow(static_cast<double>(first), 0.6)),
              "frozen first 0.6-exceeder");

    const std::string csv = mobius_table_to_csv(table);
    r.require(csv.rfind("n,mu1,delta_mu1\n", 0) == 0, "csv header");
    const auto rows = std::count(csv.begin(), csv.end(), '\n');
    r.require(rows == table.limit + 1, "csv row count");
}

// ---------------------------------------------------------------- criterion 9
void negative_paths(Reporter& r)
{
    auto throws_domain = [](std::function<void()> f) {
        try {
            f();
        } catch (const std::domain_error&) {
            return true;
        } catch (...) {
            return false;
        }
        return false;
    };
    auto throws_overflow = [](std::function<void()> f) {
        try {
            f();
        } catch (const std::overflow_error&) {
            return true;
        } catch (...) {
            return false;
        }
        return false;
    };
    auto throws_length = [](std::function<void()> f) {
        try {
            f();
        } catch (const std::length_error&) {
            return true;
        } catch (...) {
            return false;
        }
        return false;
    };

    r.require(throws_overflow([] { dilated_floor_commute_check(10, int64_t{1} << 40, int64_t{1} << 40); }),
              "commute-check overflow not raised");
    r.require(throws_overflow([] { checked_mul(int64_t{1} << 40, int64_t{1} << 40); }),
              "checked_mul overflow not raised");
    r.require(throws_overflow([] { checked_add(std::numeric_limits<int64_t>::max(), 1); }),
              "checked_add overflow not raised");
    r.require(throws_overflow([] { scan_width_csv(int64_t{1} << 40, int64_t{1} << 40); }),
              "scan-width overflow guard not raised");
    r.require(throws_domain([] { gap(6, 16); }), "gap off the quotient set not raised");
    r.require(throws_domain([] { multiplicity(6, 16); }),
              "multiplicity off the quotient set not raised");
    r.require(throws_domain([] { floor_reciprocal(7, 9); }), "floor_reciprocal k > n not raised");
    r.require(throws_domain([] { PosInt(0); }), "PosInt(0) not rejected");
    r.require(throws_domain([] { consecutive_delta(1); }), "consecutive_delta(1) not raised");
    r.require(throws_length([] { semigroup_gaps(int64_t{70000}); }), "gap-list guard not raised");
    r.require(throws_length([] { classical_mobius(int64_t{200000000}); }),
              "classical sieve guard not raised");
    r.require(throws_length([] { mu1_initial_table(int64_t{200000000}); }),
              "table guard not raised");
    r.require(throws_length([] { incidence_stats(int64_t{200000000}); }),
              "incidence guard not raised");
}

} // namespace

int main()
{
    int failures = 0;
    const auto run = [&](int id, const std::string& label, std::function<void(Reporter&)> body,
                         double max_seconds = 0.0) {
        Reporter r;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(r);
        } catch (const std::exception& e) {
            r.require(false, std::string("unexpected exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (max_seconds > 0.0)
            r.require(secs <= max_seconds, "exceeded the " + std::to_string(max_seconds) +
                                               " s budget (" + std::to_string(secs) + " s)");
        std::printf("%s criterion %d: %s (%.2f s)%s%s\n", r.ok ? "PASS" : "FAIL", id,
                    label.c_str(), secs, r.ok ? "" : " -- ", r.ok ? "" : r.detail.c_str());
        std::fflush(stdout);
        failures += r.ok ? 0 : 1;
    };

    run(1, "worked-example fidelity", worked_examples, 1.0);
    run(2, "oracle equivalences", oracle_equivalences, 30.0);
    run(3, "exact closed forms", exact_closed_forms);
    run(4, "bound suites at alpha0", bound_suites);
    run(5, "mobius structure identities", mobius_structure);

    const auto t0 = std::chrono::steady_clock::now();
    const MobiusTable big = mu1_initial_table(1000000);
    const double build_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    run(6, "sign-change sequence", [&](Reporter& r) { sign_changes(r, big); });

    std::string recorded;
    run(7, "incidence asymptotics", [&](Reporter& r) { incidence_asymptotics(r, recorded); });
    if (!recorded.empty())
        std::printf("     recorded constants: %s\n", recorded.c_str());

    run(8, "figure-scale mobius data",
        [&](Reporter& r) { figure_scale_data(r, big, build_seconds); });
    run(9, "negative paths", negative_paths);

    return failures;
}
