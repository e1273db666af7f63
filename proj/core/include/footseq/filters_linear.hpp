#pragma once

#include <optional>
#include <vector>

#include "footseq/sequence.hpp"

namespace footseq {

// Per-team bounds on draws, wins and losses forced by the scores alone.
// For team i the feasible draw counts are remainder[i] + 3*t with
// 0 <= t <= packet_cap[i]; packet_cap[i] < 0 means no feasible row exists.
struct DrawBounds {
    int n = 0;
    long long total_draws = 0;  // number of drawn matches in the tournament
    std::vector<int> remainder;  // obligatory draws, s_i mod 3
    std::vector<int> lower;      // = remainder
    std::vector<int> upper;      // remainder + 3*packet_cap (when feasible)
    std::vector<int> packet_cap;
    std::vector<int> oblig_wins;
    std::vector<int> oblig_losses;
    std::vector<int> max_wins;
    std::vector<int> max_losses;

    bool per_team_feasible() const;
    long long lower_sum() const;
    long long upper_sum() const;
};

// Per-team (wins, draws, losses, points) table.
struct SportMatrix {
    std::vector<int> wins, draws, losses, points;

    bool consistent() const;
};

DrawBounds draw_bounds(const ScoreSequence& s);

// Sport matrix determined by a concrete draw sequence d.
SportMatrix sport_matrix_from_draws(const ScoreSequence& s, const std::vector<int>& d);

// Erdos-Gallai test: is d the degree sequence of a simple graph?
bool is_graphical(std::vector<int> degrees);

// The unique draw sequence when the bounds pin it down, nullopt otherwise.
std::optional<std::vector<int>> unique_draw_sequence(const DrawBounds& b);

Verdict l1_complete(const ScoreSequence& s);
Verdict l2_point_losses(const ScoreSequence& s);
Verdict l3_reduction0(const ScoreSequence& s);
Verdict l4_reduction1(const ScoreSequence& s);
Verdict l5_draw_unique(const ScoreSequence& s);

// Requires equal lengths and equal sums; throws otherwise. Intended for the
// (w, l) pair of a unique draw sequence.
Verdict l6_balanced(const std::vector<int>& wins, const std::vector<int>& losses);

struct UniformDrawResult {
    Verdict verdict;
    std::vector<int> draws;  // allocated draw sequence when not Bad
};

UniformDrawResult l7_sport_uniform(const ScoreSequence& s);
Verdict l8_draw_sorted_unique(const ScoreSequence& s);

// L1..L8 in order, first Bad wins; L6 runs only when the draw sequence is
// unique. Never returns Good.
Verdict linear_cascade(const ScoreSequence& s);

// Cascade with a per-stage callback: on_pass(stage) fires after every passed
// filter, in cascade order. Shares one DrawBounds computation across L5-L8.
template <typename OnPass>
Verdict linear_cascade_traced(const ScoreSequence& s, OnPass&& on_pass);

namespace detail {
Verdict l5_impl(const ScoreSequence& s, const DrawBounds& b);
UniformDrawResult l7_impl(const ScoreSequence& s, const DrawBounds& b);
Verdict l8_impl(const ScoreSequence& s, const DrawBounds& b);
}  // namespace detail

template <typename OnPass>
Verdict linear_cascade_traced(const ScoreSequence& s, OnPass&& on_pass) {
    if (Verdict v = l1_complete(s); v.is_bad()) return v;
    on_pass(Stage::L1);
    if (Verdict v = l2_point_losses(s); v.is_bad()) return v;
    on_pass(Stage::L2);
    if (Verdict v = l3_reduction0(s); v.is_bad()) return v;
    on_pass(Stage::L3);
    if (Verdict v = l4_reduction1(s); v.is_bad()) return v;
    on_pass(Stage::L4);
    const DrawBounds b = draw_bounds(s);
    if (Verdict v = detail::l5_impl(s, b); v.is_bad()) return v;
    on_pass(Stage::L5);
    if (auto d = unique_draw_sequence(b)) {
        const SportMatrix m = sport_matrix_from_draws(s, *d);
        if (Verdict v = l6_balanced(m.wins, m.losses); v.is_bad()) return v;
    }
    on_pass(Stage::L6);
    if (UniformDrawResult r = detail::l7_impl(s, b); r.verdict.is_bad()) return r.verdict;
    on_pass(Stage::L7);
    if (Verdict v = detail::l8_impl(s, b); v.is_bad()) return v;
    on_pass(Stage::L8);
    return Verdict::undecided();
}

}  // namespace footseq
