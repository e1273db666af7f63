#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "footseq/sequence.hpp"

namespace footseq {

struct BacktrackOptions {
    // Canonicalizes the match between adjacent equal-score teams; prunes
    // relabelings of the same outcome. Decision-equivalent to the plain
    // search.
    bool symmetry_pruning = false;
};

// Exhaustive search over all match outcomes with residual-demand pruning.
// Always decides: Good with a certificate, or Bad.
// TODO: a draw-graph + orientation-feasibility decider could replace the
// exponential search for large n; unvalidated, so not used yet.
Verdict backtrack_decide(const ScoreSequence& s, const BacktrackOptions& options = {});

// All football sequences of one length, lexicographically sorted, with an
// index from first element to row range.
class GoodStore {
public:
    GoodStore() = default;
    GoodStore(int n, std::vector<std::vector<int>> sorted_sequences);

    static GoodStore base_n2();

    int n() const { return n_; }
    std::uint64_t count() const { return sequences_.size(); }
    const std::vector<std::vector<int>>& sequences() const { return sequences_; }
    bool contains(const std::vector<int>& s) const;

    // Index of the first row whose first element is >= v.
    std::size_t first_row_with_min(int v) const;

    void write(std::ostream& out) const;
    static GoodStore read(std::istream& in);

private:
    void rebuild_index();

    int n_ = 0;
    std::vector<std::vector<int>> sequences_;
    std::vector<std::uint64_t> prefix_index_;
};

// True iff s (length n) extends some stored good sequence of length n-1 by
// one deleted team: a bijection between the stored sequence and the tail of
// s with per-team point gains in {0, 1, 3} whose complements sum to s_1.
// Throws when store.n() != s.team_count() - 1.
bool incremental_decide(const ScoreSequence& s, const GoodStore& store);

enum class StoreDecider {
    Pipeline,        // filters + reconstruction + backtracking
    PureIncremental  // filters + incremental_decide against the n-1 store
};

// Builds the complete store for n, recursing for smaller stores as needed.
GoodStore build_store(int n, StoreDecider decider, const std::string& cache_dir = "");

}  // namespace footseq
