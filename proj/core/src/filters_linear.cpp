#include "footseq/filters_linear.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace footseq {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long pairs_of(long long k) { return k * (k - 1) / 2; }

}  // namespace

bool DrawBounds::per_team_feasible() const {
    for (int c : packet_cap)
        if (c < 0) return false;
    return true;
}

long long DrawBounds::lower_sum() const {
    return std::accumulate(lower.begin(), lower.end(), 0LL);
}

long long DrawBounds::upper_sum() const {
    long long s = 0;
    for (std::size_t i = 0; i < upper.size(); ++i)
        s += (packet_cap[i] < 0) ? lower[i] : upper[i];
    return s;
}

bool SportMatrix::consistent() const {
    const int n = static_cast<int>(points.size());
    long long ws = 0, ds = 0, ls = 0, ss = 0;
    for (int i = 0; i < n; ++i) {
        if (wins[i] < 0 || draws[i] < 0 || losses[i] < 0) return false;
        if (wins[i] + draws[i] + losses[i] != n - 1) return false;
        if (3 * wins[i] + draws[i] != points[i]) return false;
        ws += wins[i];
        ds += draws[i];
        ls += losses[i];
        ss += points[i];
    }
    if (ws != ls) return false;
    if (ws != ss - static_cast<long long>(n) * (n - 1)) return false;
    return ds == 2 * (3 * pairs_of(n) - ss);
}

DrawBounds draw_bounds(const ScoreSequence& s) {
    const int n = s.team_count();
    DrawBounds b;
    b.n = n;
    b.total_draws = 3 * pairs_of(n) - s.total();
    b.remainder.resize(n);
    b.lower.resize(n);
    b.upper.resize(n);
    b.packet_cap.resize(n);
    b.oblig_wins.resize(n);
    b.oblig_losses.resize(n);
    b.max_wins.resize(n);
    b.max_losses.resize(n);
    for (int i = 0; i < n; ++i) {
        const int v = s[i];
        const int r = v % 3;
        b.remainder[i] = r;
        b.lower[i] = r;
        const long long cap = std::min<long long>(
            std::min<long long>((v - r) / 3, floor_div(n - 1 - r, 3)),
            floor_div(3LL * (n - 1) - 2 * r - v, 6));
        b.packet_cap[i] = static_cast<int>(cap);
        b.upper[i] = r + 3 * static_cast<int>(cap);
        b.oblig_wins[i] = std::max(0, static_cast<int>((v - (n - 1) + 1) / 2));
        b.oblig_losses[i] = std::max(0, n - 1 - v);
        b.max_wins[i] = std::min((v - r) / 3, n - 1 - r);
        b.max_losses[i] =
            std::min(static_cast<int>(floor_div(3LL * (n - 1) - v, 3)), n - 1 - r);
    }
    return b;
}

SportMatrix sport_matrix_from_draws(const ScoreSequence& s, const std::vector<int>& d) {
    const int n = s.team_count();
    SportMatrix m;
    m.points = s.scores();
    m.draws = d;
    m.wins.resize(n);
    m.losses.resize(n);
    for (int i = 0; i < n; ++i) {
        m.wins[i] = (s[i] - d[i]) / 3;
        m.losses[i] = n - 1 - d[i] - m.wins[i];
    }
    return m;
}

bool is_graphical(std::vector<int> degrees) {
    for (int d : degrees)
        if (d < 0) return false;
    std::sort(degrees.begin(), degrees.end(), std::greater<int>());
    const int n = static_cast<int>(degrees.size());
    long long total = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    if (total % 2 != 0) return false;
    long long head = 0;
    for (int k = 1; k <= n; ++k) {
        head += degrees[k - 1];
        long long tail = 0;
        for (int i = k; i < n; ++i) tail += std::min(degrees[i], k);
        if (head > static_cast<long long>(k) * (k - 1) + tail) return false;
    }
    return true;
}

std::optional<std::vector<int>> unique_draw_sequence(const DrawBounds& b) {
    if (!b.per_team_feasible()) return std::nullopt;
    const long long target = 2 * b.total_draws;
    if (b.lower_sum() == target) return b.lower;
    if (b.upper_sum() == target) return b.upper;
    return std::nullopt;
}

Verdict l1_complete(const ScoreSequence& s) {
    const int n = s.team_count();
    const long long grand = 3 * pairs_of(n);
    long long sum = 0;
    for (int k = 1; k <= n; ++k) {
        sum += s[k - 1];
        if (sum < 2 * pairs_of(k)) return Verdict::bad(Stage::L1);
        if (sum > grand - static_cast<long long>(n - k) * s[k - 1]) return Verdict::bad(Stage::L1);
    }
    return Verdict::undecided();
}

Verdict l2_point_losses(const ScoreSequence& s) {
    const int n = s.team_count();
    const long long grand = 3 * pairs_of(n);
    long long sum = 0, rem_sum = 0, p = 0;
    for (int k = 1; k <= n; ++k) {
        sum += s[k - 1];
        rem_sum += s[k - 1] % 3;
        if (sum < 2 * pairs_of(k)) return Verdict::bad(Stage::L2);
        p = std::max(p, std::max(3 * pairs_of(k) - sum, (rem_sum + 1) / 2));
        if (sum > grand - static_cast<long long>(n - k) * s[k - 1] - p)
            return Verdict::bad(Stage::L2);
    }
    return Verdict::undecided();
}

Verdict l3_reduction0(const ScoreSequence& s) {
    const int n = s.team_count();
    long long sum = 0;
    for (int k = 1; k <= n; ++k) {
        sum += s[k - 1];
        if (sum == static_cast<long long>(k) * (k - 1)) {
            // All matches among the k smallest drawn, everything outside lost.
            if (s[0] != k - 1 || s[k - 1] != k - 1) return Verdict::bad(Stage::L3);
            if (k < n && s[k] < 3 * k) return Verdict::bad(Stage::L3);
        }
    }
    long long top = 0;
    bool multiples = true;
    for (int k = 1; k <= n; ++k) {
        top += s[n - k];
        multiples = multiples && (s[n - k] % 3 == 0);
        if (top == 3LL * k * (n - k) + 3 * pairs_of(k)) {
            if (!multiples) return Verdict::bad(Stage::L3);
            if (k < n && s[n - k - 1] > 3 * (n - k - 1)) return Verdict::bad(Stage::L3);
        }
    }
    return Verdict::undecided();
}

Verdict l4_reduction1(const ScoreSequence& s) {
    const int n = s.team_count();
    long long sum = 0;
    for (int k = 1; k <= n; ++k) {
        sum += s[k - 1];
        if (sum == static_cast<long long>(k) * (k - 1) + 1) {
            // Case a: draws only inside, one draw against a later team.
            bool case_a = false;
            if (k < n) {
                case_a = (k == 1 || (s[0] == k - 1 && s[k - 2] == k - 1)) && s[k - 1] == k &&
                         s[k] >= 3 * k - 2;
            }
            // Case b: one internal win, everything outside lost.
            bool case_b = k >= 2 && s[0] == k - 2 && s[k - 1] == k + 1 &&
                          (k == 2 || (s[1] == k - 1 && s[k - 2] == k - 1)) &&
                          (k == n || s[k] >= 3 * k);
            if (!case_a && !case_b) return Verdict::bad(Stage::L4);
        }
    }
    long long top = 0;
    int rem1 = 0, rem2 = 0;
    for (int k = 1; k <= n; ++k) {
        const int r = s[n - k] % 3;
        if (r == 1) ++rem1;
        if (r == 2) ++rem2;
        top += s[n - k];
        if (top == 3LL * k * (n - k) + 3 * pairs_of(k) - 1) {
            if (rem1 != 2 || rem2 != 0) return Verdict::bad(Stage::L4);
            if (k < n && s[n - k - 1] > 3 * (n - k - 1)) return Verdict::bad(Stage::L4);
        }
    }
    return Verdict::undecided();
}

namespace detail {

Verdict l5_impl(const ScoreSequence&, const DrawBounds& b) {
    const long long target = 2 * b.total_draws;
    if (!b.per_team_feasible() || b.lower_sum() > target || b.upper_sum() < target)
        return Verdict::bad(Stage::L5);
    if (auto d = unique_draw_sequence(b); d && !is_graphical(*d))
        return Verdict::bad(Stage::L5);
    return Verdict::undecided();
}

// Allocates the free draw packets over teams with spare capacity in uniform
// rounds; the final partial round serves remainder class 0 first, then 1,
// then 2, ascending team index inside a class. Reports whether a partial
// round happened and whether its eligible teams all shared one score.
struct Allocation {
    bool feasible = false;
    bool had_partial = false;
    bool partial_unambiguous = true;
    std::vector<int> draws;
};

Allocation allocate_uniform(const ScoreSequence& s, const DrawBounds& b) {
    Allocation out;
    const long long target = 2 * b.total_draws;
    if (!b.per_team_feasible() || b.lower_sum() > target || b.upper_sum() < target)
        return out;
    const int n = b.n;
    out.feasible = true;
    out.draws = b.lower;
    long long packets = (target - b.lower_sum()) / 3;
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    while (packets > 0) {
        std::vector<int> eligible;
        for (int i = 0; i < n; ++i)
            if (used[i] < b.packet_cap[i]) eligible.push_back(i);
        if (packets >= static_cast<long long>(eligible.size())) {
            for (int i : eligible) {
                ++used[i];
                --packets;
            }
            continue;
        }
        // Partial round.
        out.had_partial = true;
        for (std::size_t a = 1; a < eligible.size(); ++a)
            if (s[eligible[a]] != s[eligible[0]]) out.partial_unambiguous = false;
        for (int cls = 0; cls <= 2 && packets > 0; ++cls) {
            for (int i : eligible) {
                if (packets == 0) break;
                if (b.remainder[i] == cls) {
                    ++used[i];
                    --packets;
                }
            }
        }
        break;
    }
    for (int i = 0; i < n; ++i) out.draws[i] = b.lower[i] + 3 * used[i];
    return out;
}

UniformDrawResult l7_impl(const ScoreSequence& s, const DrawBounds& b) {
    Allocation a = allocate_uniform(s, b);
    if (!a.feasible) return {Verdict::bad(Stage::L7), {}};
    if (!is_graphical(a.draws)) return {Verdict::bad(Stage::L7), {}};
    return {Verdict::undecided(), std::move(a.draws)};
}

Verdict l8_impl(const ScoreSequence& s, const DrawBounds& b) {
    const int n = b.n;
    const long long target = 2 * b.total_draws;
    const long long wins_total = s.total() - static_cast<long long>(n) * (n - 1);
    if (!b.per_team_feasible()) return Verdict::bad(Stage::L8);
    long long oblig_draws = 0, max_draw_packets = 0, oblig_wins = 0, max_wins = 0,
              oblig_losses = 0, max_losses = 0;
    for (int i = 0; i < n; ++i) {
        oblig_draws += b.remainder[i];
        max_draw_packets += b.packet_cap[i];
        oblig_wins += b.oblig_wins[i];
        max_wins += b.max_wins[i];
        oblig_losses += b.oblig_losses[i];
        max_losses += b.max_losses[i];
    }
    if (oblig_draws > target) return Verdict::bad(Stage::L8);
    if (oblig_draws + 3 * max_draw_packets < target) return Verdict::bad(Stage::L8);
    if (oblig_wins > wins_total) return Verdict::bad(Stage::L8);
    if (max_wins < wins_total) return Verdict::bad(Stage::L8);
    if (oblig_losses > wins_total) return Verdict::bad(Stage::L8);
    if (max_losses < wins_total) return Verdict::bad(Stage::L8);

    Allocation a = allocate_uniform(s, b);
    if (!a.feasible) return Verdict::bad(Stage::L8);
    // The sorted draw sequence is forced only when the last partial round
    // could not have gone to teams with different scores.
    if (a.had_partial && !a.partial_unambiguous) return Verdict::undecided();
    if (!is_graphical(a.draws)) return Verdict::bad(Stage::L8);
    return Verdict::undecided();
}

}  // namespace detail

Verdict l5_draw_unique(const ScoreSequence& s) {
    return detail::l5_impl(s, draw_bounds(s));
}

Verdict l6_balanced(const std::vector<int>& wins, const std::vector<int>& losses) {
    if (wins.size() != losses.size())
        throw std::invalid_argument("l6_balanced: length mismatch");
    const long long ws = std::accumulate(wins.begin(), wins.end(), 0LL);
    const long long ls = std::accumulate(losses.begin(), losses.end(), 0LL);
    if (ws != ls) throw std::invalid_argument("l6_balanced: win and loss totals differ");
    const int n = static_cast<int>(wins.size());
    if (n == 0) return Verdict::undecided();
    const int max_w = *std::max_element(wins.begin(), wins.end());
    const int max_l = *std::max_element(losses.begin(), losses.end());
    int losers = 0, winners = 0;
    for (int i = 0; i < n; ++i) {
        if (losses[i] > 0) ++losers;
        if (wins[i] > 0) ++winners;
    }
    for (int i = 0; i < n; ++i) {
        if (wins[i] == max_w && max_w > losers - (losses[i] > 0 ? 1 : 0))
            return Verdict::bad(Stage::L6);
        if (losses[i] == max_l && max_l > winners - (wins[i] > 0 ? 1 : 0))
            return Verdict::bad(Stage::L6);
    }
    return Verdict::undecided();
}

UniformDrawResult l7_sport_uniform(const ScoreSequence& s) {
    return detail::l7_impl(s, draw_bounds(s));
}

Verdict l8_draw_sorted_unique(const ScoreSequence& s) {
    return detail::l8_impl(s, draw_bounds(s));
}

Verdict linear_cascade(const ScoreSequence& s) {
    return linear_cascade_traced(s, [](Stage) {});
}

}  // namespace footseq
