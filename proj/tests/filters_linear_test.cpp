#include <doctest.h>

#include <numeric>

#include "footseq/filters_linear.hpp"
#include "support.hpp"

using namespace footseq;

namespace {
ScoreSequence seq(std::vector<int> v) { return ScoreSequence::from_sorted(std::move(v)); }
}  // namespace

TEST_CASE("l1 complete-tournament bounds") {
    CHECK(l1_complete(seq({0, 0, 0})).is_bad());
    CHECK(l1_complete(seq({3, 3, 3})).is_undecided());
    CHECK(l1_complete(seq({0, 3, 6})).is_undecided());
}

TEST_CASE("l2 point losses") {
    CHECK(l2_point_losses(seq({0, 4, 5})).is_bad());
    CHECK(l2_point_losses(seq({2, 2, 2})).is_undecided());
    CHECK(l2_point_losses(seq({1, 1, 6})).is_undecided());
}

TEST_CASE("l3 reduction0") {
    CHECK(l3_reduction0(seq({1, 1, 4})).is_bad());
    CHECK(l3_reduction0(seq({0, 4, 4})).is_undecided());
    CHECK(l3_reduction0(seq({0, 3, 6})).is_undecided());
}

TEST_CASE("l4 reduction1") {
    CHECK(l4_reduction1(seq({1, 2, 3})).is_bad());
    CHECK(l4_reduction1(seq({1, 2, 4})).is_undecided());
    CHECK(l4_reduction1(seq({2, 2, 6, 8})).is_bad());
}

TEST_CASE("draw bounds") {
    SUBCASE("capped packets") {
        const DrawBounds b = draw_bounds(seq({3, 3, 3, 5}));
        CHECK(b.total_draws == 4);
        CHECK(b.lower == std::vector<int>{0, 0, 0, 2});
        CHECK(b.upper == std::vector<int>{3, 3, 3, 2});
    }
    SUBCASE("forced by remainders") {
        const DrawBounds b = draw_bounds(seq({2, 2, 2}));
        CHECK(b.total_draws == 3);
        CHECK(b.lower == b.upper);
        CHECK(b.lower == std::vector<int>{2, 2, 2});
    }
    SUBCASE("no draws available") {
        const DrawBounds b = draw_bounds(seq({0, 3, 6}));
        CHECK(b.total_draws == 0);
        CHECK(b.lower == std::vector<int>{0, 0, 0});
        CHECK(b.upper == std::vector<int>{0, 0, 0});
    }
}

TEST_CASE("erdos-gallai graphicality") {
    CHECK(is_graphical({2, 2, 2}));
    CHECK_FALSE(is_graphical({1, 1, 1}));
    CHECK_FALSE(is_graphical({3, 3, 2, 0}));
    CHECK(is_graphical({}));
    CHECK(is_graphical({0, 0}));
    CHECK_FALSE(is_graphical({-1, 1}));
}

TEST_CASE("l5 unique draw sequence") {
    CHECK(l5_draw_unique(seq({0, 4, 5})).is_bad());
    CHECK(l5_draw_unique(seq({0, 4, 4})).is_undecided());
    CHECK(l5_draw_unique(seq({1, 1, 8, 9, 9})).is_undecided());
}

TEST_CASE("l6 balancedness of wins and losses") {
    CHECK(l6_balanced({0, 0, 2, 3, 3}, {3, 3, 0, 1, 1}).is_undecided());
    CHECK(l6_balanced({0, 0, 0, 0, 4}, {4, 0, 0, 0, 0}).is_bad());
    CHECK(l6_balanced({0, 1, 2}, {2, 1, 0}).is_undecided());
    CHECK_THROWS_AS(l6_balanced({1, 0}, {0, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(l6_balanced({1, 1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("l7 uniform draw allocation") {
    SUBCASE("nongraphical uniform allocation rejects") {
        const UniformDrawResult r = l7_sport_uniform(seq({3, 3, 3, 5}));
        CHECK(r.verdict.is_bad());
    }
    SUBCASE("forced allocation") {
        const UniformDrawResult r = l7_sport_uniform(seq({2, 2, 2}));
        CHECK(r.verdict.is_undecided());
        CHECK(r.draws == std::vector<int>{2, 2, 2});
    }
    SUBCASE("unique sport matrix example") {
        const UniformDrawResult r = l7_sport_uniform(seq({1, 1, 8, 8, 10, 13}));
        CHECK(r.verdict.is_undecided());
        CHECK(r.draws == std::vector<int>{1, 1, 2, 2, 1, 1});
    }
    SUBCASE("allocated draws stay within bounds and hit the total") {
        for (auto& cand : testsupport::brute_sequences(5, 0, 12)) {
            const ScoreSequence s = seq(cand);
            const UniformDrawResult r = l7_sport_uniform(s);
            if (!r.verdict.is_undecided()) continue;
            const DrawBounds b = draw_bounds(s);
            long long sum = 0;
            for (int i = 0; i < 5; ++i) {
                CHECK(r.draws[i] >= b.lower[i]);
                CHECK(r.draws[i] <= b.upper[i]);
                CHECK((r.draws[i] - b.lower[i]) % 3 == 0);
                sum += r.draws[i];
            }
            CHECK(sum == 2 * b.total_draws);
        }
    }
}

TEST_CASE("l8 sorted-unique draw sequence") {
    CHECK(l8_draw_sorted_unique(seq({3, 3, 3, 5})).is_bad());
    CHECK(l8_draw_sorted_unique(seq({1, 1, 7, 7})).is_undecided());
    CHECK(l8_draw_sorted_unique(seq({0, 3, 6})).is_undecided());
}

TEST_CASE("sport matrix consistency from a unique draw sequence") {
    const ScoreSequence s = seq({1, 1, 8, 8, 10, 13});
    const DrawBounds b = draw_bounds(s);
    auto d = unique_draw_sequence(b);
    REQUIRE(d.has_value());
    const SportMatrix m = sport_matrix_from_draws(s, *d);
    CHECK(m.consistent());
    CHECK(m.wins == std::vector<int>{0, 0, 2, 2, 3, 4});
    CHECK(m.losses == std::vector<int>{4, 4, 1, 1, 1, 0});
}

TEST_CASE("linear cascade") {
    CHECK(linear_cascade(seq({2, 2, 2})).is_undecided());
    CHECK(linear_cascade(seq({0, 4, 5})).is_bad());
    // never Good
    for (auto& cand : testsupport::brute_sequences(4, 0, 9))
        CHECK_FALSE(linear_cascade(seq(cand)).is_good());
}

TEST_CASE("soundness: linear cascade keeps every realizable sequence") {
    for (int n = 2; n <= 5; ++n) {
        for (const auto& g : testsupport::brute_football_sequences(n))
            CHECK(linear_cascade(ScoreSequence::from_sorted(g)).is_undecided());
    }
}

TEST_CASE("draw counts of certificates lie within the computed bounds") {
    // For every realizable 4-team sequence, check an actual outcome's draw
    // counts against DrawBounds.
    const int n = 4;
    std::vector<std::pair<int, int>> matches;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) matches.emplace_back(i, j);
    const int m = static_cast<int>(matches.size());
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= 3;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        std::vector<int> score(n, 0), draws(n, 0);
        for (int i = 0; i < m; ++i) {
            const int r = static_cast<int>(c % 3);
            c /= 3;
            const auto [a, b] = matches[i];
            if (r == 0) {
                score[a] += 1;
                score[b] += 1;
                ++draws[a];
                ++draws[b];
            } else if (r == 1) {
                score[a] += 3;
            } else {
                score[b] += 3;
            }
        }
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return score[a] < score[b]; });
        std::vector<int> sorted_score, sorted_draws;
        for (int i : order) {
            sorted_score.push_back(score[i]);
            sorted_draws.push_back(draws[i]);
        }
        const DrawBounds b = draw_bounds(seq(sorted_score));
        long long sum = 0;
        for (int i = 0; i < n; ++i) {
            CHECK(sorted_draws[i] >= b.lower[i]);
            CHECK(sorted_draws[i] <= b.upper[i]);
            sum += sorted_draws[i];
        }
        CHECK(sum == 2 * b.total_draws);
    }
}
