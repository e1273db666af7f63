#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "footseq/filters_quad.hpp"
#include "footseq/sequence.hpp"

namespace footseq {

// q_k = minimal number of drawn matches among the k lowest-scoring teams,
// for k = 1..n (entry 0 unused). Values can exceed k(k-1)/2, in which case
// the sequence admits no tournament at all.
std::vector<long long> inner_draw_bounds(const ScoreSequence& s);

// A concrete pairing of all draws: team i appears in exactly draws[i] pairs.
struct DrawAssignment {
    std::vector<int> draws;
    std::vector<std::pair<int, int>> pairs;   // 0-based, first < second
    std::vector<std::pair<int, int>> forced;  // subset placed before pairing
};

// Realizes d as a simple graph containing the forced pairs. Greedy
// largest-degree-first with full backtracking; nullopt iff none exists.
std::optional<DrawAssignment> pair_draws(const std::vector<int>& d,
                                         const std::vector<std::pair<int, int>>& forced);

// Enumerates realizations in greedy-first order until `visit` returns true.
// prefix_min_edges[k] (when nonzero) requires at least that many pairs inside
// the k lowest-scoring teams. Returns true when a visit succeeded.
bool for_each_draw_assignment(const std::vector<int>& d,
                              const std::vector<std::pair<int, int>>& forced,
                              const std::vector<long long>& prefix_min_edges,
                              std::uint64_t max_assignments,
                              const std::function<bool(const DrawAssignment&)>& visit);

// Greedy "largest wins against largest remaining losses" completion of a
// draw assignment. Complete matrix on success, nullopt on a dead end.
std::optional<ResultMatrix> assign_decisive(const DrawAssignment& assignment,
                                            std::vector<int> wins, std::vector<int> losses);

// Certificate for a fully forced reduction: stripped blocks plus an all-draw
// core. nullopt when a stripped suffix block is not realizable.
std::optional<ResultMatrix> realize_forced(const ScoreSequence& s, const ReducedSequence& r);

// R1 (forced certificates), then R3 (obligatory inner draws) feeding R2
// (pairing plus greedy decisive assignment). Good or Undecided, never Bad.
Verdict reconstruct_pipeline(const ScoreSequence& s, const QuadOutcome& quad);
Verdict reconstruct_pipeline(const ScoreSequence& s);

}  // namespace footseq
