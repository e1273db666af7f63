#include "footseq/oracle.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "footseq/filters_const.hpp"
#include "footseq/filters_linear.hpp"
#include "footseq/filters_quad.hpp"
#include "footseq/pipeline.hpp"

namespace footseq {

namespace {

class Backtracker {
public:
    Backtracker(const std::vector<int>& scores, bool symmetry)
        : n_(static_cast<int>(scores.size())),
          target_(scores),
          residual_(scores),
          remaining_(scores.size(), n_ - 1),
          matrix_(n_),
          symmetry_(symmetry) {
        for (int v : scores) total_residual_ += v;
        matches_left_ = static_cast<long long>(n_) * (n_ - 1) / 2;
    }

    bool solve() { return place(0, 1); }
    ResultMatrix matrix() const { return matrix_; }

private:
    bool feasible(int t) const {
        const int r = residual_[t], m = remaining_[t];
        return r >= 0 && r <= 3 * m && r != 3 * m - 1;
    }

    // Every unplayed match contributes 2 or 3 points to the open demand.
    bool globally_feasible() const {
        return total_residual_ >= 2 * matches_left_ &&
               total_residual_ <= 3 * matches_left_;
    }

    bool place(int i, int j) {
        if (i == n_ - 1) return true;
        const int ni = (j == n_ - 1) ? i + 1 : i;
        const int nj = (j == n_ - 1) ? i + 2 : j + 1;
        --remaining_[i];
        --remaining_[j];
        --matches_left_;
        static constexpr int kPoints[3][2] = {{0, 3}, {1, 1}, {3, 0}};
        for (const auto& p : kPoints) {
            // Between adjacent equal scores a win for the lower index is a
            // relabeling of an outcome the search visits anyway.
            if (symmetry_ && p[0] == 3 && j == i + 1 && target_[i] == target_[j]) continue;
            const int spent = p[0] + p[1];
            residual_[i] -= p[0];
            residual_[j] -= p[1];
            total_residual_ -= spent;
            if (feasible(i) && feasible(j) && globally_feasible()) {
                matrix_.set_pair(i, j, p[0], p[1]);
                if (place(ni, nj)) return true;
            }
            residual_[i] += p[0];
            residual_[j] += p[1];
            total_residual_ += spent;
        }
        ++remaining_[i];
        ++remaining_[j];
        ++matches_left_;
        return false;
    }

    int n_;
    const std::vector<int>& target_;
    std::vector<int> residual_;
    std::vector<int> remaining_;
    ResultMatrix matrix_;
    bool symmetry_;
    long long total_residual_ = 0;
    long long matches_left_ = 0;
};

}  // namespace

Verdict backtrack_decide(const ScoreSequence& s, const BacktrackOptions& options) {
    const int n = s.team_count();
    if (n == 1) {
        if (s[0] == 0) return Verdict::good(Stage::BT, ResultMatrix(1));
        return Verdict::bad(Stage::BT);
    }
    Backtracker bt(s.scores(), options.symmetry_pruning);
    if (bt.solve()) return Verdict::good(Stage::BT, bt.matrix());
    return Verdict::bad(Stage::BT);
}

GoodStore::GoodStore(int n, std::vector<std::vector<int>> sorted_sequences)
    : n_(n), sequences_(std::move(sorted_sequences)) {
    rebuild_index();
}

GoodStore GoodStore::base_n2() { return GoodStore(2, {{0, 3}, {1, 1}}); }

void GoodStore::rebuild_index() {
    const int maxv = n_ >= 1 ? max_points(n_) : 0;
    prefix_index_.assign(static_cast<std::size_t>(maxv) + 2, sequences_.size());
    std::size_t row = 0;
    for (int v = 0; v <= maxv + 1; ++v) {
        while (row < sequences_.size() && sequences_[row][0] < v) ++row;
        prefix_index_[v] = row;
    }
}

bool GoodStore::contains(const std::vector<int>& s) const {
    return std::binary_search(sequences_.begin(), sequences_.end(), s);
}

std::size_t GoodStore::first_row_with_min(int v) const {
    if (v < 0) return 0;
    if (v >= static_cast<int>(prefix_index_.size())) return sequences_.size();
    return prefix_index_[v];
}

void GoodStore::write(std::ostream& out) const {
    out << "footseq-store v1 n=" << n_ << " count=" << sequences_.size() << "\n";
    for (const auto& row : sequences_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ' ';
            out << row[i];
        }
        out << "\n";
    }
}

GoodStore GoodStore::read(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("store: missing header");
    int n = 0;
    unsigned long long parsed = 0;
    if (std::sscanf(header.c_str(), "footseq-store v1 n=%d count=%llu", &n, &parsed) != 2)
        throw std::runtime_error("store: malformed header: " + header);
    const std::uint64_t count = parsed;
    std::vector<std::vector<int>> rows;
    rows.reserve(count);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> row;
        int v;
        while (ls >> v) row.push_back(v);
        if (static_cast<int>(row.size()) != n)
            throw std::runtime_error("store: row length mismatch");
        if (!rows.empty() && !(rows.back() < row))
            throw std::runtime_error("store: rows not in lexicographic order");
        rows.push_back(std::move(row));
    }
    if (rows.size() != count) throw std::runtime_error("store: row count mismatch");
    return GoodStore(n, std::move(rows));
}

namespace {

// Backtracking bijection search: match every tail entry to a distinct store
// entry with difference in {0,1,3}; the deleted team's points must come out
// to s_1 (a gain of 0 for the other team means the deleted team won, etc.).
bool match_tail(const std::vector<int>& tail, const std::vector<int>& ancestor, int deleted) {
    const int m = static_cast<int>(tail.size());
    long long tail_sum = 0, anc_sum = 0;
    for (int v : tail) tail_sum += v;
    for (int v : ancestor) anc_sum += v;
    const long long diff_sum = tail_sum - anc_sum;
    if (diff_sum < 0 || diff_sum > 3LL * m) return false;
    // With x0/x1/x3 matches of difference 0/1/3: 3*x3 + x1 = diff_sum and
    // 3*x0 + x1 = deleted, so their difference must be divisible by 3.
    if ((diff_sum - deleted) % 3 != 0) return false;

    std::vector<char> used(static_cast<std::size_t>(m), 0);
    // Match tail entries from the largest down; try larger differences first
    // so the deleted team's remaining demand shrinks fast.
    std::function<bool(int, int)> rec = [&](int idx, int got) -> bool {
        if (got > deleted) return false;
        if (idx < 0) return got == deleted;
        if (got + 3 * (idx + 1) < deleted) return false;
        const int t = tail[idx];
        for (int diff : {3, 1, 0}) {
            const int want = t - diff;
            if (want < 0) continue;
            // Find one unused occurrence of `want` (duplicates are
            // interchangeable, so only the first is tried).
            auto it = std::lower_bound(ancestor.begin(), ancestor.end(), want);
            for (; it != ancestor.end() && *it == want; ++it) {
                const auto pos = static_cast<std::size_t>(it - ancestor.begin());
                if (!used[pos]) {
                    used[pos] = 1;
                    const int gain = diff == 0 ? 3 : (diff == 1 ? 1 : 0);
                    if (rec(idx - 1, got + gain)) return true;
                    used[pos] = 0;
                    break;
                }
            }
        }
        return false;
    };
    return rec(m - 1, 0);
}

}  // namespace

bool incremental_decide(const ScoreSequence& s, const GoodStore& store) {
    const int n = s.team_count();
    if (store.n() != n - 1)
        throw std::invalid_argument("incremental_decide: store is not for n-1 teams");
    if (n < 2) return n == 1 && s[0] == 0;
    const std::vector<int> tail(s.scores().begin() + 1, s.scores().end());
    const int deleted = s[0];

    // The smallest ancestor entry lies within 3 of the smallest tail entry;
    // all four offsets can occur once crossings are allowed.
    const int lo = std::max(0, tail[0] - 3);
    for (int first = lo; first <= tail[0]; ++first) {
        std::size_t row = store.first_row_with_min(first);
        const auto& rows = store.sequences();
        for (; row < rows.size() && rows[row][0] == first; ++row) {
            if (match_tail(tail, rows[row], deleted)) return true;
        }
    }
    return false;
}

GoodStore build_store(int n, StoreDecider decider, const std::string& cache_dir) {
    if (n < 2) throw std::invalid_argument("build_store: n must be at least 2");

    auto cache_path = [&](int k) {
        return std::filesystem::path(cache_dir) /
               ("good-" + std::to_string(k) + ".store");
    };
    if (!cache_dir.empty()) {
        std::ifstream in(cache_path(n));
        if (in) {
            GoodStore st = GoodStore::read(in);
            if (st.n() == n) return st;
        }
    }

    GoodStore result;
    if (n == 2) {
        result = GoodStore::base_n2();
    } else if (decider == StoreDecider::Pipeline) {
        PipelineConfig cfg;
        cfg.n = n;
        EnumerateResult er = enumerate_sequences(cfg, /*emit_store=*/true);
        result = std::move(*er.store);
    } else {
        GoodStore prev = build_store(n - 1, decider, cache_dir);
        std::vector<std::vector<int>> rows;
        RegularGenerator gen(n);
        do {
            const ScoreSequence s = ScoreSequence::trusted(gen.current());
            if (constant_cascade(s).is_bad()) continue;
            if (linear_cascade(s).is_bad()) continue;
            if (quad_cascade(s).verdict.is_bad()) continue;
            if (incremental_decide(s, prev)) rows.push_back(gen.current());
        } while (gen.advance());
        result = GoodStore(n, std::move(rows));
    }

    if (!cache_dir.empty()) {
        std::filesystem::create_directories(cache_dir);
        std::ofstream out(cache_path(n), std::ios::trunc);
        result.write(out);
    }
    return result;
}

}  // namespace footseq
