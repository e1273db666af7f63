#include <doctest.h>

#include "footseq/filters_const.hpp"
#include "footseq/oracle.hpp"
#include "support.hpp"

using namespace footseq;

namespace {
ScoreSequence seq(std::vector<int> v) { return ScoreSequence::from_sorted(std::move(v)); }
}  // namespace

TEST_CASE("individual constant tests") {
    CHECK(constant_test(ConstFilterId::C1, seq({0, 3, 5})).is_bad());
    CHECK(constant_test(ConstFilterId::C4, seq({1, 1, 4})).is_bad());
    CHECK(constant_test(ConstFilterId::C4, seq({1, 1, 6})).is_undecided());
    CHECK(constant_test(ConstFilterId::C3, seq({0, 3, 6})).is_undecided());
    CHECK(constant_test(ConstFilterId::C2, seq({1, 3})).is_bad());
    CHECK(constant_test(ConstFilterId::C5, seq({1, 4, 4})).is_bad());
    CHECK(constant_test(ConstFilterId::C6, seq({1, 3, 6})).is_bad());
    CHECK(constant_test(ConstFilterId::C7, seq({0, 3, 4})).is_bad());
    CHECK(constant_test(ConstFilterId::C8, seq({1, 2, 3})).is_bad());
    CHECK(constant_test(ConstFilterId::C9, seq({2, 2, 4})).is_bad());
    CHECK(constant_test(ConstFilterId::C9, seq({1, 2, 4})).is_undecided());
}

TEST_CASE("tests needing absent positions are vacuously undecided") {
    CHECK(constant_test(ConstFilterId::C4, seq({1, 1})).is_undecided());
    CHECK(constant_test(ConstFilterId::C5, seq({1, 1})).is_undecided());
    CHECK(constant_test(ConstFilterId::C9, seq({0, 3})).is_undecided());
    CHECK(constant_cascade(seq({0})).is_undecided());
}

TEST_CASE("cascade applies filters in order and reports the first hit") {
    const Verdict v = constant_cascade(seq({0, 0, 5}));  // matches C1 and C3
    CHECK(v.is_bad());
    CHECK(v.stage == Stage::C1);
    CHECK(constant_cascade(seq({2, 2, 2})).is_undecided());
}

TEST_CASE("cascade survivor counts for small n") {
    auto survivors = [](int n) {
        std::uint64_t count = 0;
        for (auto& cand : testsupport::brute_sequences(n, 0, 3 * (n - 1)))
            if (!constant_cascade(ScoreSequence::from_sorted(cand)).is_bad()) ++count;
        return count;
    };
    CHECK(survivors(2) == 2);
    CHECK(survivors(3) == 14);
    CHECK(survivors(4) == 203);
}

TEST_CASE("constant tests read only the boundary positions") {
    // Changing any interior entry (positions 4..n-3) never changes a verdict.
    const int n = 9;
    const ScoreSequence base = seq({0, 1, 2, 5, 5, 5, 20, 21, 24});
    const ScoreSequence tweaked = seq({0, 1, 2, 7, 9, 11, 20, 21, 24});
    static const ConstFilterId kIds[] = {
        ConstFilterId::C1, ConstFilterId::C2, ConstFilterId::C3,
        ConstFilterId::C4, ConstFilterId::C5, ConstFilterId::C6,
        ConstFilterId::C7, ConstFilterId::C8, ConstFilterId::C9,
    };
    for (ConstFilterId id : kIds)
        CHECK(constant_test(id, base).kind == constant_test(id, tweaked).kind);
    CHECK(n == base.team_count());
}

TEST_CASE("soundness: no constant filter rejects a realizable sequence") {
    for (int n = 2; n <= 5; ++n) {
        const auto good = testsupport::brute_football_sequences(n);
        for (const auto& g : good)
            CHECK(constant_cascade(ScoreSequence::from_sorted(g)).is_undecided());
    }
}
