#pragma once

#include "footseq/sequence.hpp"

namespace footseq {

enum class ConstFilterId { C1, C2, C3, C4, C5, C6, C7, C8, C9 };

Stage stage_of(ConstFilterId id);

// Applies one constant-time rejection test. Bad(id) when the forbidden
// pattern holds, Undecided otherwise. Tests referencing positions that do
// not exist for small n are vacuously Undecided.
Verdict constant_test(ConstFilterId id, const ScoreSequence& s);

// C1..C9 in order; first Bad wins, never Good.
Verdict constant_cascade(const ScoreSequence& s);

}  // namespace footseq
