#include "footseq/filters_quad.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "footseq/filters_const.hpp"
#include "footseq/filters_linear.hpp"

namespace footseq {

namespace {

long long pairs_of(long long k) { return k * (k - 1) / 2; }

void strip_prefix(ReducedSequence& rs, int k, StripRecord::Kind kind) {
    StripRecord rec;
    rec.side = StripRecord::Side::Prefix;
    rec.kind = kind;
    rec.size = k;
    rec.adjustment = 3 * k;
    rec.window_len = rs.window_size();
    rec.block_scores.assign(rs.scores.begin(), rs.scores.begin() + k);
    rs.strips.push_back(std::move(rec));
    rs.scores.erase(rs.scores.begin(), rs.scores.begin() + k);
    for (int& v : rs.scores) v -= 3 * k;
    rs.first_index += k;
}

void strip_suffix(ReducedSequence& rs, int k) {
    StripRecord rec;
    rec.side = StripRecord::Side::Suffix;
    rec.kind = StripRecord::Kind::AllDecisive;
    rec.size = k;
    rec.adjustment = 0;
    rec.window_len = rs.window_size();
    rec.block_scores.assign(rs.scores.end() - k, rs.scores.end());
    rs.strips.push_back(std::move(rec));
    rs.scores.erase(rs.scores.end() - k, rs.scores.end());
    rs.last_index -= k;
}

}  // namespace

ReducedSequence make_window(const ScoreSequence& s) {
    ReducedSequence rs;
    rs.scores = s.scores();
    rs.first_index = 0;
    rs.last_index = s.team_count() - 1;
    return rs;
}

Verdict q1_balanced_quad(const std::vector<int>& wins, const std::vector<int>& losses) {
    if (wins.size() != losses.size())
        throw std::invalid_argument("q1_balanced_quad: length mismatch");
    const int n = static_cast<int>(wins.size());
    for (int i = 1; i < n; ++i)
        if (wins[i] > wins[i - 1])
            throw std::invalid_argument("q1_balanced_quad: wins must be nonincreasing");
    const long long ws = std::accumulate(wins.begin(), wins.end(), 0LL);
    const long long ls = std::accumulate(losses.begin(), losses.end(), 0LL);
    if (ws != ls) throw std::invalid_argument("q1_balanced_quad: win and loss totals differ");
    long long lhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += wins[k - 1];
        long long rhs = 0;
        for (int i = 1; i <= k; ++i) rhs += std::min(losses[i - 1], k - 1);
        for (int i = k + 1; i <= n; ++i) rhs += std::min(losses[i - 1], k);
        if (lhs > rhs) return Verdict::bad(Stage::Q1);
        if (k == n && lhs != rhs) return Verdict::bad(Stage::Q1);
    }
    return Verdict::undecided();
}

QuadReduceResult q2_reduce_small(ReducedSequence rs) {
restart:
    const auto& e = rs.scores;
    const int len = rs.window_size();
    if (len == 0) {
        rs.fully_forced = true;
        return {Verdict::undecided(), std::move(rs)};
    }
    long long sum = 0;
    for (int k = 1; k <= len; ++k) {
        sum += e[k - 1];
        if (sum == static_cast<long long>(k) * (k - 1)) {
            // Minimal prefix: an all-draw block that lost everything outside.
            if (e[0] != k - 1 || e[k - 1] != k - 1)
                return {Verdict::bad(Stage::Q2), std::move(rs)};
            if (k < len && e[k] < 3 * k) return {Verdict::bad(Stage::Q2), std::move(rs)};
            if (k == len) {
                rs.fully_forced = true;
                return {Verdict::undecided(), std::move(rs)};
            }
            strip_prefix(rs, k, StripRecord::Kind::AllDraw);
            goto restart;
        }
        if (sum == static_cast<long long>(k) * (k - 1) + 1) {
            // Minimum plus one: either one draw against a later team (case a,
            // partner unknown, nothing stripped) or one internal win with
            // everything outside lost (case b, strippable).
            bool case_a = false;
            if (k < len) {
                case_a = (k == 1 || (e[0] == k - 1 && e[k - 2] == k - 1)) && e[k - 1] == k &&
                         e[k] >= 3 * k - 2;
            }
            const bool case_b = k >= 2 && e[0] == k - 2 && e[k - 1] == k + 1 &&
                                (k == 2 || (e[1] == k - 1 && e[k - 2] == k - 1)) &&
                                (k == len || e[k] >= 3 * k);
            if (!case_a && !case_b) return {Verdict::bad(Stage::Q2), std::move(rs)};
            if (case_b) {
                if (k == len) {
                    strip_prefix(rs, k, StripRecord::Kind::DrawPlusWin);
                    rs.fully_forced = true;
                    return {Verdict::undecided(), std::move(rs)};
                }
                strip_prefix(rs, k, StripRecord::Kind::DrawPlusWin);
                goto restart;
            }
        }
    }
    return {Verdict::undecided(), std::move(rs)};
}

QuadReduceResult q3_reduce_large(ReducedSequence rs) {
restart:
    const auto& e = rs.scores;
    const int len = rs.window_size();
    if (len == 0) {
        rs.fully_forced = true;
        return {Verdict::undecided(), std::move(rs)};
    }
    long long top = 0;
    int rem0 = 0, rem1 = 0, rem2 = 0;
    for (int k = 1; k <= len; ++k) {
        const int v = e[len - k];
        top += v;
        if (v % 3 == 0) ++rem0;
        if (v % 3 == 1) ++rem1;
        if (v % 3 == 2) ++rem2;
        const long long maximal = 3LL * k * (len - k) + 3 * pairs_of(k);
        if (top == maximal) {
            // The block won everything outside and drew nothing.
            if (rem0 != k) return {Verdict::bad(Stage::Q3), std::move(rs)};
            if (k < len && e[len - k - 1] > 3 * (len - k - 1))
                return {Verdict::bad(Stage::Q3), std::move(rs)};
            strip_suffix(rs, k);
            if (rs.window_size() == 0) rs.fully_forced = true;
            if (rs.fully_forced) return {Verdict::undecided(), std::move(rs)};
            goto restart;
        }
        if (top == maximal - 1) {
            // One internal draw; partner unknown, so only validate.
            if (rem1 != 2 || rem2 != 0) return {Verdict::bad(Stage::Q3), std::move(rs)};
            if (k < len && e[len - k - 1] > 3 * (len - k - 1))
                return {Verdict::bad(Stage::Q3), std::move(rs)};
        }
    }
    return {Verdict::undecided(), std::move(rs)};
}

QuadOutcome quad_cascade(const ScoreSequence& s) {
    ReducedSequence rs = make_window(s);
    for (;;) {
        const std::size_t before = rs.strips.size();
        QuadReduceResult r2 = q2_reduce_small(std::move(rs));
        if (r2.verdict.is_bad()) return {r2.verdict, std::move(r2.reduced)};
        if (r2.reduced.fully_forced) return {Verdict::undecided(), std::move(r2.reduced)};
        QuadReduceResult r3 = q3_reduce_large(std::move(r2.reduced));
        if (r3.verdict.is_bad()) return {r3.verdict, std::move(r3.reduced)};
        if (r3.reduced.fully_forced) return {Verdict::undecided(), std::move(r3.reduced)};
        rs = std::move(r3.reduced);
        if (rs.strips.size() == before) break;
    }
    if (!rs.strips.empty() && rs.window_size() > 0) {
        const ScoreSequence reduced = ScoreSequence::trusted(rs.scores);
        if (Verdict v = constant_cascade(reduced); v.is_bad()) return {v, std::move(rs)};
        if (Verdict v = linear_cascade(reduced); v.is_bad()) return {v, std::move(rs)};
    }
    if (rs.window_size() > 0) {
        const ScoreSequence reduced = ScoreSequence::trusted(rs.scores);
        const DrawBounds b = draw_bounds(reduced);
        if (auto d = unique_draw_sequence(b)) {
            const SportMatrix m = sport_matrix_from_draws(reduced, *d);
            std::vector<int> order(m.wins.size());
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int bb) { return m.wins[a] > m.wins[bb]; });
            std::vector<int> w, l;
            w.reserve(order.size());
            l.reserve(order.size());
            for (int i : order) {
                w.push_back(m.wins[i]);
                l.push_back(m.losses[i]);
            }
            if (Verdict v = q1_balanced_quad(w, l); v.is_bad()) return {v, std::move(rs)};
        }
    }
    return {Verdict::undecided(), std::move(rs)};
}

}  // namespace footseq
