#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace footseq {

using BigInt = boost::multiprecision::cpp_int;

// Maximal number of points a single team can collect among n teams.
inline constexpr int max_points(int n) { return 3 * (n - 1); }

// Identifier of the procedure that decided a sequence.
enum class Stage : std::uint8_t {
    None,
    C1, C2, C3, C4, C5, C6, C7, C8, C9,
    L1, L2, L3, L4, L5, L6, L7, L8,
    Q1, Q2, Q3,
    R1, R2, R3,
    BT, INC,
};

const char* stage_name(Stage s);

// A nondecreasing sequence of per-team point totals. The canonical order is
// nondecreasing; from_values() accepts arbitrary order and keeps the sorting
// permutation so certificates can be reported in the caller's order.
class ScoreSequence {
public:
    ScoreSequence() = default;

    // Sorts and validates. Throws std::invalid_argument naming the offending
    // position (in the caller's order) on out-of-range entries.
    static ScoreSequence from_values(std::vector<int> values);

    // Validates sortedness and range; identity permutation.
    static ScoreSequence from_sorted(std::vector<int> sorted);

    // No checks; for hot enumeration paths where the input is known-regular.
    static ScoreSequence trusted(std::vector<int> sorted);

    int team_count() const { return static_cast<int>(scores_.size()); }
    const std::vector<int>& scores() const { return scores_; }
    int operator[](int i) const { return scores_[static_cast<std::size_t>(i)]; }
    long long total() const;

    // input_order()[k] = position of the k-th sorted entry in the original
    // input. Empty when the sequence was born sorted.
    const std::vector<int>& input_order() const { return input_order_; }

    bool operator==(const ScoreSequence& other) const { return scores_ == other.scores_; }

private:
    std::vector<int> scores_;
    std::vector<int> input_order_;
};

// n x n match result grid. Entry (i,j) holds the points team i took from the
// match against team j: 0, 1, or 3. The diagonal is unused.
class ResultMatrix {
public:
    static constexpr std::int8_t kUnknown = -1;

    ResultMatrix() : n_(0) {}
    explicit ResultMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, kUnknown) {}

    int size() const { return n_; }
    int at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }
    void set(int i, int j, int points) {
        cells_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::int8_t>(points);
    }
    void set_pair(int i, int j, int points_i, int points_j) {
        set(i, j, points_i);
        set(j, i, points_j);
    }

    bool complete() const;
    std::vector<int> row_points() const;

    // Reorders rows/columns: row i of the result is row perm[i] of this.
    ResultMatrix permuted(const std::vector<int>& perm) const;

private:
    int n_;
    std::vector<std::int8_t> cells_;
};

struct Verdict {
    enum class Kind : std::uint8_t { Bad, Good, Undecided };

    Kind kind = Kind::Undecided;
    Stage stage = Stage::None;
    std::optional<ResultMatrix> certificate;

    static Verdict bad(Stage s) { return Verdict{Kind::Bad, s, std::nullopt}; }
    static Verdict good(Stage s, ResultMatrix m) { return Verdict{Kind::Good, s, std::move(m)}; }
    static Verdict undecided() { return Verdict{}; }

    bool is_bad() const { return kind == Kind::Bad; }
    bool is_good() const { return kind == Kind::Good; }
    bool is_undecided() const { return kind == Kind::Undecided; }
};

// Per-stage acceptance counters for one enumeration run. The counter chain
// follows cascade order and is nonincreasing; the final entry equals the
// number of football sequences found.
struct StageStats {
    int n = 0;
    std::vector<std::pair<std::string, std::uint64_t>> counters;
    std::uint64_t football_count = 0;
    std::uint64_t reconstructed_count = 0;   // decided Good by R1/R2/R3
    std::uint64_t oracle_decided_count = 0;  // survivors settled by the oracle

    void merge(const StageStats& other);
};

// Number of nondecreasing integer sequences of length m with entries in
// [l, u]: binomial(u - l + m, m). Exact. Throws std::invalid_argument when
// u < l or m < 1.
BigInt count_regular(long long l, long long u, long long m);

// True iff every off-diagonal pair is {3,0} or {1,1} and the multiset of row
// sums equals the multiset of s. Throws std::invalid_argument when the matrix
// is incomplete or sizes differ.
bool validate_result_matrix(const ResultMatrix& m, const ScoreSequence& s);

// Streams all (l, u, m)-regular sequences in lexicographic order via an
// explicit successor function, so enumeration can resume from any sequence.
class RegularGenerator {
public:
    // Full range for n teams: entries in [0, 3(n-1)].
    explicit RegularGenerator(int n);
    // Resume from a given sequence (inclusive). Entries must lie in range.
    RegularGenerator(int n, std::vector<int> start);

    bool valid() const { return valid_; }
    const std::vector<int>& current() const { return current_; }

    // Advances to the lexicographic successor. Returns false at the end.
    bool advance();

private:
    int n_;
    int upper_;
    bool valid_;
    std::vector<int> current_;
};

}  // namespace footseq
