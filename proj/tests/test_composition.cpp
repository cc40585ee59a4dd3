#include <doctest.h>

#include "oracles.hpp"
#include "zigzag/composition.hpp"
#include "zigzag/errors.hpp"
#include "zigzag/rng.hpp"

using namespace zigzag;

TEST_CASE("composition from descent sets") {
    CHECK(Composition::from_descents({}, 4) == Composition({4}));
    CHECK(Composition::from_descents({3, 5, 9}, 10) == Composition({3, 2, 4, 1}));
    CHECK(Composition::from_descents({1, 2}, 3) == Composition({1, 1, 1}));
    CHECK_THROWS_AS(Composition::from_descents({4}, 4), InvalidDescent);
    CHECK_THROWS_AS(Composition::from_descents({0}, 4), InvalidDescent);

    // round trip over every composition of n ≤ 10
    for (int n = 1; n <= 10; ++n)
        for (const Composition& lam : oracle::compositions_of(n))
            CHECK(Composition::from_descents(lam.descents(), n) == lam);
}

TEST_CASE("composition text round trip") {
    Composition lam({3, 2, 4, 1});
    CHECK(lam.to_string() == "3,2,4,1");
    CHECK(Composition::parse("3,2,4,1") == lam);
    CHECK(Permutation::parse("3,5,8,4,7,1,6,9,10,2").to_string() == "3,5,8,4,7,1,6,9,10,2");
}

TEST_CASE("run decomposition of the worked example") {
    RunDecomposition rd(Composition({3, 2, 4, 1}));
    CHECK(rd.valleys() == std::vector<int>{1, 4, 6, 10});
    CHECK(rd.peaks() == std::vector<int>{3, 5, 9});
    REQUIRE(rd.runs().size() == 6);
    const int expect[6][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 9}, {9, 10}};
    for (int i = 0; i < 6; ++i) {
        CHECK(rd.runs()[std::size_t(i)].a == expect[i][0]);
        CHECK(rd.runs()[std::size_t(i)].b == expect[i][1]);
    }
    CHECK(rd.slope(7).lo == 7);
    CHECK(rd.slope(7).hi == 8);
    CHECK(rd.slope(6).lo == 6);
    CHECK(rd.slope(6).hi == 8);
}

TEST_CASE("run decomposition edge shapes") {
    RunDecomposition row(Composition({5}));
    CHECK(row.valleys() == std::vector<int>{1});
    CHECK(row.peaks() == std::vector<int>{5});
    REQUIRE(row.runs().size() == 1);
    CHECK(row.runs()[0].length() == 4);
    CHECK(row.runs()[0].ascending);

    RunDecomposition cell(Composition({1}));
    CHECK(cell.valleys() == std::vector<int>{1});
    CHECK(cell.peaks().empty());
    CHECK(cell.runs().empty());
    CHECK(cell.slope(1).lo == 1);
    CHECK(cell.slope(1).hi == 1);
}

TEST_CASE("run lengths tile the ribbon") {
    for (int n = 2; n <= 10; ++n)
        for (const Composition& lam : oracle::compositions_of(n)) {
            RunDecomposition rd(lam);
            int total = 0;
            for (const auto& run : rd.runs()) total += run.length();
            CHECK(total == n - 1);
            for (std::size_t i = 0; i + 1 < rd.runs().size(); ++i) {  // runs alternate and touch
                CHECK(rd.runs()[i].b == rd.runs()[i + 1].a);
                CHECK(rd.runs()[i].ascending != rd.runs()[i + 1].ascending);
            }
        }
}

TEST_CASE("peaks and valleys are the local extremes of every filling") {
    // missing neighbors never disqualify an extreme: boundary cells are a
    // peak or a valley according to their single comparison
    for (int n = 2; n <= 7; ++n) {
        oracle::for_each_permutation(n, [&](const std::vector<int>& w) {
            Composition lam = Composition::from_descents(oracle::descent_set_of(w), n);
            RunDecomposition rd(lam);
            for (int i = 1; i <= n; ++i) {
                bool rises_in = i == 1 || w[std::size_t(i - 2)] < w[std::size_t(i - 1)];
                bool falls_out = i == n || w[std::size_t(i)] < w[std::size_t(i - 1)];
                bool falls_in = i == 1 || w[std::size_t(i - 2)] > w[std::size_t(i - 1)];
                bool rises_out = i == n || w[std::size_t(i)] > w[std::size_t(i - 1)];
                CHECK(rd.is_peak(i) == (rises_in && falls_out));
                CHECK(rd.is_valley(i) == (falls_in && rises_out));
            }
        });
    }
}

TEST_CASE("concatenation") {
    CHECK(concat(Composition({2, 1}), Composition({1, 2}), ConcatMode::plus) == Composition({2, 2, 2}));
    CHECK(concat(Composition({2, 1}), Composition({1, 2}), ConcatMode::minus) ==
          Composition({2, 1, 1, 2}));
    CHECK(concat(Composition({3}), Composition({4}), ConcatMode::plus) == Composition({7}));
    CHECK_THROWS(concat(Composition(), Composition({1}), ConcatMode::plus));

    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int a = rng.uniform_int(1, 8), b = rng.uniform_int(1, 8);
        Composition lam = oracle::compositions_of(a)[rng.below(1u << (a - 1))];
        Composition mu = oracle::compositions_of(b)[rng.below(1u << (b - 1))];
        CHECK(concat(lam, mu, ConcatMode::plus).size() == a + b);
        CHECK(concat(lam, mu, ConcatMode::minus).size() == a + b);
    }
}

TEST_CASE("restriction to cell windows") {
    Composition lam({3, 2, 4, 1});
    CHECK(right_of(Composition({2, 1}), 1) == Composition({1, 1}));
    CHECK(left_of(lam, 4) == Composition({3}));
    CHECK(restricted(lam, 1, lam.size()) == lam);
    CHECK(restricted(lam, 4, 6) == Composition({2, 1}));  // descent at 5 lands inside
    CHECK_THROWS_AS(left_of(lam, 1), EmptyRestriction);
    CHECK_THROWS_AS(restricted(lam, 11, 12), EmptyRestriction);
}

TEST_CASE("permutation descents") {
    CHECK(Permutation::parse("3,5,8,4,7,1,6,9,10,2").descent_composition() ==
          Composition({3, 2, 4, 1}));
    CHECK(Permutation::identity(6).descent_composition() == Composition({6}));
    CHECK(Permutation::parse("2,1").descent_composition() == Composition({1, 1}));
}

TEST_CASE("project_down") {
    CHECK(Permutation::parse("5,2,3,4,1").project_down(3) == Permutation::parse("2,3,1"));
    Permutation sigma = Permutation::parse("5,2,3,4,1");
    CHECK(sigma.project_down(5) == sigma);
    CHECK(Permutation::parse("2,1").project_down(1) == Permutation::parse("1"));

    // erasing down to k in one go or through any intermediate m agrees
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        int n = rng.uniform_int(2, 9);
        std::vector<int> word(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) word[std::size_t(i)] = i + 1;
        for (int i = n - 1; i > 0; --i)
            std::swap(word[std::size_t(i)], word[rng.below(std::uint64_t(i) + 1)]);
        Permutation sig{word};
        int m = rng.uniform_int(1, n), k = rng.uniform_int(1, m);
        CHECK(sig.project_down(m).project_down(k) == sig.project_down(k));
    }
}
