#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <set>
#include <thread>

#include "brute.hpp"
#include "floorq/alpha.hpp"
#include "floorq/interval.hpp"
#include "floorq/mobius.hpp"
#include "floorq/relation.hpp"

using namespace floorq;

TEST_CASE("initial intervals: worked examples")
{
    CHECK(initial_interval(16).elements == std::vector<int64_t>{1, 2, 3, 4, 5, 8, 16});
    CHECK(initial_interval(10).elements == std::vector<int64_t>{1, 2, 3, 5, 10});
    CHECK(initial_interval(1).elements == std::vector<int64_t>{1});
    CHECK(initial_interval(9).elements == std::vector<int64_t>{1, 2, 3, 4, 9});

    const auto v = initial_interval(16);
    CHECK(v.lo == 1);
    CHECK(v.hi == 16);
    CHECK(v.contains(8));
    CHECK_FALSE(v.contains(6));
    CHECK(v.index.at(8) == 5);
}

TEST_CASE("initial intervals match the definitional scan")
{
    for (int64_t n = 1; n <= 300; ++n)
        CHECK(initial_elements(n) == brute::quotients(n));
}

TEST_CASE("general intervals: worked examples")
{
    CHECK(interval(2, 20).elements == std::vector<int64_t>{2, 4, 5, 6, 10, 20});
    CHECK(interval(3, 30).elements == std::vector<int64_t>{3, 6, 7, 10, 15, 30});
    CHECK(interval(4, 40).elements == std::vector<int64_t>{4, 8, 13, 20, 40});
    CHECK(interval(9, 90).elements == std::vector<int64_t>{9, 18, 45, 90});
    CHECK(interval(10, 10000).size() == 145);
    CHECK(interval(6, 16).empty()); // unrelated endpoints
    CHECK(interval(7, 7).elements == std::vector<int64_t>{7});
    for (int64_t n = 1; n <= 120; ++n)
        for (int64_t d = 1; d <= n; ++d)
            CHECK(interval(d, n).elements == brute::interval(d, n));
}

TEST_CASE("split: worked examples")
{
    const auto s11 = split(11);
    CHECK(s11.q_minus == std::vector<int64_t>{1, 2, 3});
    CHECK(s11.q_plus == std::vector<int64_t>{3, 5, 11});
    CHECK(s11.overlap == 3);

    const auto s12 = split(12);
    CHECK(s12.q_minus == std::vector<int64_t>{1, 2, 3});
    CHECK(s12.q_plus == std::vector<int64_t>{4, 6, 12});
    CHECK_FALSE(s12.overlap.has_value());

    const auto s168 = split(168);
    CHECK(s168.s == 12);
    CHECK(s168.q_minus.size() == 12);
    CHECK(s168.q_plus ==
          std::vector<int64_t>{14, 15, 16, 18, 21, 24, 28, 33, 42, 56, 84, 168});
    CHECK_FALSE(s168.overlap.has_value());

    const auto s1 = split(1);
    CHECK(s1.q_minus == std::vector<int64_t>{1});
    CHECK(s1.q_plus == std::vector<int64_t>{1});
    CHECK(s1.overlap == 1);
}

TEST_CASE("split invariants: union, involution bijection, overlap rule")
{
    for (int64_t n = 1; n <= 2000; ++n) {
        const auto sp = split(n);
        std::set<int64_t> un(sp.q_minus.begin(), sp.q_minus.end());
        un.insert(sp.q_plus.begin(), sp.q_plus.end());
        const auto el = initial_elements(n);
        CHECK(std::equal(el.begin(), el.end(), un.begin(), un.end()));

        const int64_t s = sp.s;
        CHECK(sp.overlap.has_value() == (s * s <= n && n < s * (s + 1)));
        if (sp.overlap)
            CHECK(*sp.overlap == s);

        // J_n maps q_minus onto q_plus bijectively and back
        std::set<int64_t> plus(sp.q_plus.begin(), sp.q_plus.end());
        std::set<int64_t> image;
        for (int64_t d : sp.q_minus)
            image.insert(n / d);
        CHECK(image == plus);
        std::set<int64_t> back;
        for (int64_t d : sp.q_plus)
            back.insert(n / d);
        CHECK(back == std::set<int64_t>(sp.q_minus.begin(), sp.q_minus.end()));
    }
}

TEST_CASE("gap and multiplicity")
{
    CHECK(gap(5, 10) == 2);
    CHECK(multiplicity(2, 10) == 2);
    CHECK(gap(1, 10) == 1);
    CHECK(gap(1, 999) == 1);
    CHECK(multiplicity(10, 10) == 1);
    CHECK_THROWS_AS(gap(6, 16), std::domain_error);
    CHECK_THROWS_AS(multiplicity(6, 16), std::domain_error);

    for (int64_t n = 1; n <= 400; ++n) {
        const auto el = initial_elements(n);
        for (std::size_t i = 0; i < el.size(); ++i) {
            // gap against the predecessor in the element list
            const int64_t expected_gap = i == 0 ? el[0] : el[i] - el[i - 1];
            CHECK(gap(el[i], n) == expected_gap);
            CHECK(multiplicity(el[i], n) == cutting_set(el[i], n).cardinality());
            // interchange under J_n
            CHECK(gap(n / el[i], n) == multiplicity(el[i], n));
        }
    }
}

TEST_CASE("covering edges: figures")
{
    using E = std::vector<std::pair<int64_t, int64_t>>;
    auto sorted = [](E e) {
        std::sort(e.begin(), e.end());
        return e;
    };
    CHECK(sorted(covering_edges(initial_interval(16))) ==
          E{{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 16}, {4, 8}, {5, 16}, {8, 16}});
    CHECK(sorted(covering_edges(initial_interval(9))) ==
          E{{1, 2}, {1, 3}, {2, 4}, {3, 9}, {4, 9}});
    CHECK(covering_edges(initial_interval(1)).empty());
    CHECK(covering_edges(initial_interval(168)).size() == 54);
}

TEST_CASE("covering edges: reachability equals the order relation")
{
    // transitive closure of the covering relation must reproduce <=_1
    for (int64_t n : {60, 100, 168}) {
        const auto view = initial_interval(n);
        const auto edges = covering_edges(view);
        const std::size_t m = view.size();
        std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
        for (std::size_t i = 0; i < m; ++i)
            reach[i][i] = true;
        for (std::size_t i = 0; i < m; ++i) // edges always point upward, so one pass suffices
            for (auto [a, b] : edges)
                if (view.index.at(a) == i)
                    for (std::size_t f = 0; f < m; ++f)
                        if (reach[f][i])
                            reach[f][view.index.at(b)] = true;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                CHECK(reach[i][j] ==
                      is_floor_quotient(view.elements[i], view.elements[j]));
    }
}

TEST_CASE("incidence stats")
{
    const auto one = incidence_stats(1);
    CHECK(one.z_total == 1);

    const auto st = incidence_stats(16);
    CHECK(st.z_total == 22); // 7 reflexive + 15 strict over {1,2,3,4,5,8,16}
    CHECK(st.z_minus == 8);
    CHECK(st.z_plus == 8);
    CHECK(st.z_cross_minus_plus == 7);
    CHECK(st.z_cross_plus_minus == 0);
    CHECK(st.overlap);

    const auto st100 = incidence_stats(100);
    CHECK(st100.z_total == 116);
    CHECK(st100.z_minus == 33);
    CHECK(st100.z_plus == 27);
    CHECK(st100.z_cross_minus_plus == 57);

    for (int64_t n = 1; n <= 500; ++n) {
        const auto s = incidence_stats(n);
        CHECK(s.z_total == s.z_minus + s.z_plus + s.z_cross_minus_plus + s.z_cross_plus_minus -
                               (s.overlap ? 1 : 0));
        // brute total over the element list
        const auto el = initial_elements(n);
        int64_t total = 0;
        for (int64_t a : el)
            for (int64_t b : el)
                if (is_floor_quotient(a, b))
                    ++total;
        CHECK(s.z_total == total);
    }

    CHECK_THROWS_AS(incidence_stats(100000001), std::length_error);
}

TEST_CASE("chain counts: frozen brute-force values")
{
    const auto c14 = count_chains(1, 4);
    CHECK(c14.total == 2); // chains (1,4) and (1,2,4)
    CHECK(c14.by_length == std::vector<int64_t>{0, 1, 1});

    const auto c116 = count_chains(1, 16);
    CHECK(c116.total == 11);
    CHECK(c116.by_length == std::vector<int64_t>{0, 1, 5, 4, 1});

    const auto c220 = count_chains(2, 20);
    CHECK(c220.total == 6);
    CHECK(c220.by_length == std::vector<int64_t>{0, 1, 4, 1});

    CHECK(count_chains(1, 10).total == 5);
    CHECK(count_chains(7, 7).total == 1);
    CHECK(count_chains(7, 7).by_length == std::vector<int64_t>{1});
    CHECK(count_chains(6, 16).total == 0);
    CHECK(count_chains(1, 1000).total == 8249);

    const auto big = count_chains(1, 1000000);
    CHECK(big.total == 1187446086);
    CHECK(static_cast<long double>(big.total) <= powl(1e6L, (long double)alpha0()));
}

TEST_CASE("chain counts agree with exhaustive enumeration")
{
    for (int64_t n = 1; n <= 48; ++n)
        for (int64_t d = 1; d <= n; ++d) {
            std::map<int64_t, int64_t> counts;
            brute::chains_by_length(d, n, counts);
            const auto cc = count_chains(d, n);
            int64_t total = 0;
            for (auto [len, c] : counts) {
                total += c;
                REQUIRE(len < static_cast<int64_t>(cc.by_length.size()));
                CHECK(cc.by_length[static_cast<std::size_t>(len)] == c);
            }
            CHECK(cc.total == total);
        }
}

TEST_CASE("chain bound via alpha0")
{
    const long double a0 = static_cast<long double>(alpha0());
    for (int64_t n = 1; n <= 500; ++n)
        for (int64_t d : initial_elements(n)) {
            const auto cc = count_chains(d, n);
            CHECK(static_cast<long double>(cc.total) <=
                  powl(static_cast<long double>(n) / static_cast<long double>(d), a0));
        }
}

TEST_CASE("consecutive deltas")
{
    const auto d2 = consecutive_delta(2);
    CHECK(d2.removed.empty());
    CHECK(d2.added == std::vector<int64_t>{2});

    const auto d9 = consecutive_delta(9);
    CHECK(d9.removed == std::vector<int64_t>{8});
    CHECK(d9.added == std::vector<int64_t>{3, 9});

    const auto d12 = consecutive_delta(12);
    CHECK(d12.removed == std::vector<int64_t>{5, 11});
    CHECK(d12.added == std::vector<int64_t>{4, 6, 12});

    CHECK_THROWS_AS(consecutive_delta(1), std::domain_error);

    for (int64_t n = 2; n <= 2000; ++n) {
        const auto delta = consecutive_delta(n);
        const auto prev = initial_elements(n - 1);
        std::set<int64_t> rebuilt(prev.begin(), prev.end());
        for (int64_t r : delta.removed)
            CHECK(rebuilt.erase(r) == 1);
        for (int64_t a : delta.added)
            CHECK(rebuilt.insert(a).second);
        const auto cur = initial_elements(n);
        CHECK(std::equal(cur.begin(), cur.end(), rebuilt.begin(), rebuilt.end()));
    }
}

TEST_CASE("gap and multiplicity at the top of the int64 domain")
{
    const int64_t top = std::numeric_limits<int64_t>::max();
    CHECK(multiplicity(top, top) == 1);
    CHECK(gap(1, top) == 1);
}

TEST_CASE("width")
{
    CHECK(width(10, 10000).num == 1000);
    CHECK(width(10, 10000).den == 1);
    CHECK(width(7, 7).num == 1);
    CHECK(width(7, 7).den == 1);
    CHECK(width(3, 30).num == 10);
    CHECK(width(4, 10).num == 5);
    CHECK(width(4, 10).den == 2);
}

TEST_CASE("exact family Q[d, d^4]")
{
    for (int64_t d = 1; d <= 20; ++d)
        CHECK(static_cast<int64_t>(interval(d, d * d * d * d).size()) == (3 * d * d - d) / 2);
}

TEST_CASE("pure operations are safe to run concurrently")
{
    std::vector<std::thread> workers;
    std::atomic<int> failures{0};
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([t, &failures] {
            for (int64_t n = 1 + t; n <= 4000; n += 8) {
                if (initial_elements(n).size() != initial_interval(n).size())
                    ++failures;
                if (!is_floor_quotient(1, n) || interval(1, n).empty())
                    ++failures;
                const auto st = split(n);
                if (st.q_minus.size() != static_cast<std::size_t>(st.s))
                    ++failures;
            }
            // thread-private mobius contexts
            Mu1Context ctx;
            if (ctx.mu1(1, 1000 + t) != mu1(1, 1000 + t))
                ++failures;
        });
    }
    for (auto& w : workers)
        w.join();
    CHECK(failures == 0);
}

TEST_CASE("size sandwich on a sweep")
{
    for (int64_t n = 1; n <= 20000; ++n) {
        const int64_t size = static_cast<int64_t>(initial_elements(n).size());
        const long double root = sqrtl(static_cast<long double>(n));
        CHECK(2 * root - 2 < static_cast<long double>(size));
        CHECK(static_cast<long double>(size) < 2 * root);
    }
}
