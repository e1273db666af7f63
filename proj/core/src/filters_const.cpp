#include "footseq/filters_const.hpp"

namespace footseq {

Stage stage_of(ConstFilterId id) {
    switch (id) {
        case ConstFilterId::C1: return Stage::C1;
        case ConstFilterId::C2: return Stage::C2;
        case ConstFilterId::C3: return Stage::C3;
        case ConstFilterId::C4: return Stage::C4;
        case ConstFilterId::C5: return Stage::C5;
        case ConstFilterId::C6: return Stage::C6;
        case ConstFilterId::C7: return Stage::C7;
        case ConstFilterId::C8: return Stage::C8;
        case ConstFilterId::C9: return Stage::C9;
    }
    return Stage::None;
}

namespace {

// Each test inspects at most s_1, s_2, s_3 and s_{n-2}, s_{n-1}, s_n.
bool matches(ConstFilterId id, const ScoreSequence& s) {
    const int n = s.team_count();
    switch (id) {
        case ConstFilterId::C1:
            return n >= 2 && s[n - 1] == 3 * n - 4;
        case ConstFilterId::C2:
            return n >= 2 && s[n - 1] == 3 * n - 3 && s[n - 2] >= 3 * n - 5;
        case ConstFilterId::C3:
            return n >= 2 && s[0] == 0 && s[1] <= 2;
        case ConstFilterId::C4:
            return n >= 3 && s[0] == 1 && s[1] == 1 && s[2] <= 5;
        case ConstFilterId::C5:
            return n >= 3 && s[n - 1] == 3 * n - 5 && s[n - 2] == 3 * n - 5 &&
                   s[n - 3] >= 3 * n - 8;
        case ConstFilterId::C6:
            return n >= 3 && s[n - 1] == 3 * n - 3 && s[n - 2] == 3 * n - 6 &&
                   s[n - 3] >= 3 * n - 8;
        case ConstFilterId::C7:
            return n >= 3 && s[0] == 0 && s[1] == 3 && s[2] <= 5;
        case ConstFilterId::C8:
            return n >= 3 && s[0] == 1 && s[1] == 2 && s[2] <= 3;
        case ConstFilterId::C9:
            return n >= 3 && s[n - 1] == 3 * n - 5 && s[n - 2] == 3 * n - 7 &&
                   s[n - 3] >= 3 * n - 7;
    }
    return false;
}

}  // namespace

Verdict constant_test(ConstFilterId id, const ScoreSequence& s) {
    return matches(id, s) ? Verdict::bad(stage_of(id)) : Verdict::undecided();
}

Verdict constant_cascade(const ScoreSequence& s) {
    static const ConstFilterId kOrder[] = {
        ConstFilterId::C1, ConstFilterId::C2, ConstFilterId::C3,
        ConstFilterId::C4, ConstFilterId::C5, ConstFilterId::C6,
        ConstFilterId::C7, ConstFilterId::C8, ConstFilterId::C9,
    };
    for (ConstFilterId id : kOrder)
        if (matches(id, s)) return Verdict::bad(stage_of(id));
    return Verdict::undecided();
}

}  // namespace footseq
