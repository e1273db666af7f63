#include <doctest.h>

#include "footseq/filters_const.hpp"
#include "footseq/theory.hpp"
#include "support.hpp"

using namespace footseq;

namespace {
ScoreSequence seq(std::vector<int> v) { return ScoreSequence::from_sorted(std::move(v)); }
}  // namespace

TEST_CASE("landau test") {
    CHECK(landau_test(seq({0, 1, 2})));
    CHECK(landau_test(seq({1, 1, 1})));
    CHECK_FALSE(landau_test(seq({0, 0, 3})));
    CHECK_FALSE(landau_test(seq({0, 1, 1})));  // no equality at k = n
}

TEST_CASE("moon test") {
    CHECK(moon_test(seq({2, 2, 2}), 2));
    CHECK(moon_test(seq({0, 2, 4}), 2));
    CHECK_FALSE(moon_test(seq({0, 1, 5}), 2));
    CHECK_THROWS_AS(moon_test(seq({0, 1, 2}), 0), std::invalid_argument);
}

TEST_CASE("moon test agrees with exhaustive multigraph tournament enumeration") {
    // Every pair of teams is joined by exactly b arcs; a team's score is its
    // out-degree. Enumerate every orientation split per pair.
    for (int b : {1, 2}) {
        for (int n = 2; n <= 4; ++n) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
            const int m = static_cast<int>(pairs.size());
            long long total = 1;
            for (int i = 0; i < m; ++i) total *= (b + 1);
            std::set<std::vector<int>> realizable;
            for (long long code = 0; code < total; ++code) {
                long long c = code;
                std::vector<int> score(static_cast<std::size_t>(n), 0);
                for (int i = 0; i < m; ++i) {
                    const int w = static_cast<int>(c % (b + 1));
                    c /= (b + 1);
                    score[pairs[i].first] += w;
                    score[pairs[i].second] += b - w;
                }
                std::sort(score.begin(), score.end());
                realizable.insert(std::move(score));
            }
            for (auto& cand : testsupport::brute_sequences(n, 0, b * (n - 1))) {
                CHECK(moon_test(seq(cand), b) == (realizable.count(cand) > 0));
            }
        }
    }
}

TEST_CASE("landau is the single-arc case of moon") {
    for (int n = 2; n <= 5; ++n)
        for (auto& cand : testsupport::brute_sequences(n, 0, n - 1))
            CHECK(landau_test(seq(cand)) == moon_test(seq(cand), 1));
}

TEST_CASE("failing the (2,3,n) interval test implies no football tournament") {
    for (int n = 2; n <= 5; ++n) {
        const auto good = testsupport::brute_football_sequences(n);
        for (auto& cand : testsupport::brute_sequences(n, 0, 3 * (n - 1))) {
            if (!interval_complete_test(seq(cand), 2, 3)) CHECK(good.count(cand) == 0);
        }
    }
}

TEST_CASE("point loss recursion") {
    CHECK(point_loss(seq({0, 3, 6}), 3).values == std::vector<long long>{0, 0, 0, 0});
    // entries may exceed the football range; the recursion has no
    // preconditions of its own
    CHECK(point_loss(ScoreSequence::trusted({0, 0, 9}), 3).values ==
          std::vector<long long>{0, 0, 3, 3});
    CHECK(point_loss(seq({3, 3, 3}), 3).values == std::vector<long long>{0, 0, 0, 0});
    // nondecreasing and nonnegative on arbitrary regular input
    for (auto& cand : testsupport::brute_sequences(4, 0, 9)) {
        auto pl = point_loss(seq(cand), 3);
        for (std::size_t k = 1; k < pl.values.size(); ++k) {
            CHECK(pl.values[k] >= pl.values[k - 1]);
            CHECK(pl.values[k] >= 0);
        }
    }
}

TEST_CASE("interval complete test") {
    CHECK(interval_complete_test(seq({0, 3, 6}), 2, 3));
    CHECK_FALSE(interval_complete_test(seq({0, 0, 6}), 2, 3));
    CHECK(interval_complete_test(seq({2, 2, 2}), 2, 3));
    CHECK_THROWS_AS(interval_complete_test(seq({0, 1}), 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(interval_complete_test(seq({0, 1}), 0, 0), std::invalid_argument);
}

TEST_CASE("reid-zhang test") {
    CHECK(reid_zhang_test(seq({1, 1, 1})));
    CHECK_FALSE(reid_zhang_test(seq({0, 1, 3})));
    CHECK(reid_zhang_test(seq({1, 1, 2})));
    CHECK(reid_zhang_test(seq({0, 1, 2})));
    CHECK(reid_zhang_test(seq({1, 2, 2})));  // no equality requirement at k = n
}

TEST_CASE("berger test") {
    CHECK(berger_test({{{1, 1}, {1, 1}}}));
    CHECK_FALSE(berger_test({{{2, 0}, {0, 2}}}));
    CHECK(berger_test({{{0, 0}, {0, 0}, {0, 0}}}));
    CHECK_THROWS_AS(berger_test({{{0, 1}, {1, 0}}}), std::invalid_argument);
}

TEST_CASE("minimal decisive matches for strictly increasing scores") {
    CHECK(min_wins_strict(2) == 1);
    CHECK(min_wins_strict(3) == 1);
    CHECK(min_wins_strict(4) == 2);
    CHECK_THROWS_AS(min_wins_strict(1), std::invalid_argument);
    CHECK_THROWS_AS(min_wins_strict(6), std::invalid_argument);
}

TEST_CASE("constant filter efficiency ratios") {
    CHECK(filter_efficiency(Stage::C1, 2) == Rational(3, 10));
    CHECK(filter_efficiency(Stage::C1, std::nullopt) == Rational(3, 16));
    CHECK(filter_efficiency(Stage::C2, std::nullopt) == Rational(37, 256));
    CHECK(filter_efficiency(Stage::C3, std::nullopt) == Rational(37, 256));
    CHECK(filter_efficiency(Stage::C4, std::nullopt) == Rational(2343, 65536));
    CHECK(filter_efficiency(Stage::C5, std::nullopt) == Rational(1575, 65536));
    CHECK(filter_efficiency(Stage::C6, std::nullopt) == Rational(999, 65536));
    CHECK(filter_efficiency(Stage::C7, std::nullopt) == Rational(999, 65536));
    CHECK(filter_efficiency(Stage::C8, std::nullopt) == Rational(63, 4096));
    CHECK(filter_efficiency(Stage::C9, std::nullopt) == Rational(81, 16384));
    CHECK(cumulative_filter_efficiency(std::nullopt) == Rational(38480, 65536));
    CHECK_THROWS_AS(filter_efficiency(Stage::L1, 4), std::invalid_argument);
}

TEST_CASE("per-filter efficiency matches exhaustive pattern counts") {
    static const ConstFilterId kIds[] = {
        ConstFilterId::C1, ConstFilterId::C2, ConstFilterId::C3,
        ConstFilterId::C4, ConstFilterId::C5, ConstFilterId::C6,
        ConstFilterId::C7, ConstFilterId::C8, ConstFilterId::C9,
    };
    for (int n = 2; n <= 6; ++n) {
        std::uint64_t total = 0;
        std::uint64_t matched[9] = {};
        for (auto& cand : testsupport::brute_sequences(n, 0, 3 * (n - 1))) {
            ++total;
            const ScoreSequence s = seq(cand);
            for (int i = 0; i < 9; ++i)
                if (constant_test(kIds[i], s).is_bad()) ++matched[i];
        }
        // the C4..C9 formulas presume their three positions exist (n >= 3)
        const int upto = n >= 3 ? 9 : 3;
        for (int i = 0; i < upto; ++i) {
            CHECK(filter_efficiency(stage_of(kIds[i]), n) ==
                  Rational(matched[i], total));
        }
    }
}

TEST_CASE("efficiency ratios approach their limits") {
    auto close = [](const Rational& a, const Rational& b) {
        Rational d = a - b;
        if (d < 0) d = -d;
        return d < Rational(1, 10000);
    };
    CHECK(close(filter_efficiency(Stage::C1, 1000000), Rational(3, 16)));
    CHECK(close(cumulative_filter_efficiency(1000000), Rational(38480, 65536)));
    CHECK(close(regular_growth_ratio(1000000), Rational(256, 27)));
}

TEST_CASE("regular growth ratio") {
    CHECK(regular_growth_ratio(2) == Rational(42, 5));
    CHECK(regular_growth_ratio(3) == Rational(715, 84));
    CHECK(to_decimal(regular_growth_ratio(2), 3) == "8.400");
    CHECK(to_decimal(regular_growth_ratio(3), 3) == "8.512");
    CHECK(regular_growth_ratio(std::nullopt) == Rational(256, 27));
    // exact recurrence against the closed-form counts
    for (long long n = 1; n <= 14; ++n) {
        Rational lhs = regular_growth_ratio(n) * Rational(count_regular(0, 3 * n - 3, n));
        CHECK(lhs == Rational(count_regular(0, 3 * n, n + 1)));
    }
}

TEST_CASE("decimal rendering rounds half up") {
    CHECK(to_decimal(Rational(1, 8), 2) == "0.13");
    CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
    CHECK(to_decimal(Rational(3, 16), 4) == "0.1875");
    CHECK(to_decimal(Rational(5, 1), 0) == "5");
}
