#pragma once

#include <vector>

#include "footseq/sequence.hpp"

namespace footseq {

// One stripped block of forced structure.
struct StripRecord {
    enum class Side { Prefix, Suffix };
    enum class Kind {
        AllDraw,       // prefix block: every internal match drawn
        DrawPlusWin,   // prefix block: internal draws plus last-beats-first
        AllDecisive,   // suffix block: no internal draws, won everything outside
    };
    Side side;
    Kind kind;
    int size = 0;
    int adjustment = 0;            // subtracted from every remaining score
    std::vector<int> block_scores; // window-internal scores of the block
    int window_len = 0;            // window length at the moment of the strip
};

// Working view of a sequence under prefix/suffix stripping. first_index and
// last_index delimit the surviving window within the original sequence
// (0-based, half-open is not used: window = [first_index, last_index]).
struct ReducedSequence {
    std::vector<int> scores;  // adjusted scores of the window
    int first_index = 0;
    int last_index = -1;
    std::vector<StripRecord> strips;
    bool fully_forced = false;  // window empty or an all-draw block

    int window_size() const { return static_cast<int>(scores.size()); }
};

ReducedSequence make_window(const ScoreSequence& s);

// Win/loss prefix pairing test (wins sorted nonincreasing, losses matched).
// Throws on length or sum mismatch.
Verdict q1_balanced_quad(const std::vector<int>& wins, const std::vector<int>& losses);

struct QuadReduceResult {
    Verdict verdict;
    ReducedSequence reduced;
};

// Strips forced minimal prefixes (and whole-window min-plus-one blocks with
// an internal win); rejects on any shape violation.
QuadReduceResult q2_reduce_small(ReducedSequence rs);

// Strips forced maximal suffixes; rejects on shape violations.
QuadReduceResult q3_reduce_large(ReducedSequence rs);

struct QuadOutcome {
    Verdict verdict;
    ReducedSequence reduced;

    bool fully_forced() const { return reduced.fully_forced; }
};

// Alternates q2/q3 to a fixpoint, re-filters the reduced sequence with the
// constant and linear cascades, and applies q1 when the reduced sequence has
// a unique draw sequence. Never returns Good.
QuadOutcome quad_cascade(const ScoreSequence& s);

}  // namespace footseq
