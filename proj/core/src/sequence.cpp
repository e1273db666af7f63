#include "footseq/sequence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace footseq {

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::None: return "-";
        case Stage::C1: return "C1";
        case Stage::C2: return "C2";
        case Stage::C3: return "C3";
        case Stage::C4: return "C4";
        case Stage::C5: return "C5";
        case Stage::C6: return "C6";
        case Stage::C7: return "C7";
        case Stage::C8: return "C8";
        case Stage::C9: return "C9";
        case Stage::L1: return "L1";
        case Stage::L2: return "L2";
        case Stage::L3: return "L3";
        case Stage::L4: return "L4";
        case Stage::L5: return "L5";
        case Stage::L6: return "L6";
        case Stage::L7: return "L7";
        case Stage::L8: return "L8";
        case Stage::Q1: return "Q1";
        case Stage::Q2: return "Q2";
        case Stage::Q3: return "Q3";
        case Stage::R1: return "R1";
        case Stage::R2: return "R2";
        case Stage::R3: return "R3";
        case Stage::BT: return "BT";
        case Stage::INC: return "INC";
    }
    return "?";
}

ScoreSequence ScoreSequence::from_values(std::vector<int> values) {
    const int n = static_cast<int>(values.size());
    if (n < 1) throw std::invalid_argument("score sequence must have at least one team");
    const int hi = max_points(n);
    for (int i = 0; i < n; ++i) {
        if (values[i] < 0 || values[i] > hi) {
            throw std::invalid_argument("score out of range [0," + std::to_string(hi) +
                                        "] at position " + std::to_string(i + 1));
        }
    }
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    ScoreSequence out;
    out.scores_.resize(values.size());
    out.input_order_ = order;
    for (std::size_t k = 0; k < order.size(); ++k) out.scores_[k] = values[order[k]];
    return out;
}

ScoreSequence ScoreSequence::from_sorted(std::vector<int> sorted) {
    const int n = static_cast<int>(sorted.size());
    if (n < 1) throw std::invalid_argument("score sequence must have at least one team");
    const int hi = max_points(n);
    for (int i = 0; i < n; ++i) {
        if (sorted[i] < 0 || sorted[i] > hi) {
            throw std::invalid_argument("score out of range [0," + std::to_string(hi) +
                                        "] at position " + std::to_string(i + 1));
        }
        if (i > 0 && sorted[i] < sorted[i - 1]) {
            throw std::invalid_argument("sequence not nondecreasing at position " +
                                        std::to_string(i + 1));
        }
    }
    ScoreSequence out;
    out.scores_ = std::move(sorted);
    return out;
}

ScoreSequence ScoreSequence::trusted(std::vector<int> sorted) {
    ScoreSequence out;
    out.scores_ = std::move(sorted);
    return out;
}

long long ScoreSequence::total() const {
    long long t = 0;
    for (int v : scores_) t += v;
    return t;
}

bool ResultMatrix::complete() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && at(i, j) == kUnknown) return false;
    return true;
}

std::vector<int> ResultMatrix::row_points() const {
    std::vector<int> sums(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && at(i, j) != kUnknown) sums[i] += at(i, j);
    return sums;
}

ResultMatrix ResultMatrix::permuted(const std::vector<int>& perm) const {
    ResultMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j) out.set(perm[i], perm[j], at(i, j));
    return out;
}

void StageStats::merge(const StageStats& other) {
    if (counters.empty()) {
        *this = other;
        return;
    }
    for (std::size_t i = 0; i < counters.size() && i < other.counters.size(); ++i)
        counters[i].second += other.counters[i].second;
    football_count += other.football_count;
    reconstructed_count += other.reconstructed_count;
    oracle_decided_count += other.oracle_decided_count;
}

BigInt count_regular(long long l, long long u, long long m) {
    if (u < l) throw std::invalid_argument("count_regular: upper bound below lower bound");
    if (m < 1) throw std::invalid_argument("count_regular: length must be positive");
    // binomial(u - l + m, m)
    const long long top = u - l + m;
    BigInt result = 1;
    for (long long i = 1; i <= m; ++i) {
        result *= (top - m + i);
        result /= i;
    }
    return result;
}

bool validate_result_matrix(const ResultMatrix& m, const ScoreSequence& s) {
    if (m.size() != s.team_count())
        throw std::invalid_argument("validate_result_matrix: size mismatch");
    if (!m.complete())
        throw std::invalid_argument("validate_result_matrix: matrix has unknown entries");
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = m.at(i, j), b = m.at(j, i);
            const bool decisive = (a == 3 && b == 0) || (a == 0 && b == 3);
            const bool draw = (a == 1 && b == 1);
            if (!decisive && !draw) return false;
        }
    }
    std::vector<int> sums = m.row_points();
    std::sort(sums.begin(), sums.end());
    return sums == s.scores();
}

RegularGenerator::RegularGenerator(int n) : n_(n), upper_(max_points(n)), valid_(n >= 1) {
    if (n < 1) throw std::invalid_argument("generate_regular: need at least one team");
    current_.assign(static_cast<std::size_t>(n), 0);
}

RegularGenerator::RegularGenerator(int n, std::vector<int> start)
    : n_(n), upper_(max_points(n)), valid_(true), current_(std::move(start)) {
    if (n < 1) throw std::invalid_argument("generate_regular: need at least one team");
    if (static_cast<int>(current_.size()) != n)
        throw std::invalid_argument("generate_regular: start length mismatch");
    for (int i = 0; i < n; ++i) {
        if (current_[i] < 0 || current_[i] > upper_ || (i > 0 && current_[i] < current_[i - 1]))
            throw std::invalid_argument("generate_regular: start sequence not regular");
    }
}

bool RegularGenerator::advance() {
    if (!valid_) return false;
    int i = n_ - 1;
    while (i >= 0 && current_[i] == upper_) --i;
    if (i < 0) {
        valid_ = false;
        return false;
    }
    const int v = current_[i] + 1;
    for (int j = i; j < n_; ++j) current_[j] = v;
    return true;
}

}  // namespace footseq
