#pragma once

#include <optional>
#include <string>
#include <vector>

#include "footseq/oracle.hpp"
#include "footseq/sequence.hpp"

namespace footseq {

enum class OracleMode { Backtrack, Incremental };
enum class ReportFormat { Csv, Json, Text };

struct PipelineConfig {
    int n = 0;
    bool constant_stage = true;
    bool linear_stage = true;
    bool quad_stage = true;
    bool reconstruct_stage = true;
    OracleMode oracle = OracleMode::Backtrack;  // the oracle always runs
    int partitions = 1;                         // 0 = hardware concurrency
    std::string store_dir;                      // cache for good stores
    ReportFormat format = ReportFormat::Text;
};

// Runs the enabled stages in order and returns the first decisive verdict.
// Good verdicts always carry a certificate.
Verdict decide(const ScoreSequence& s, const PipelineConfig& cfg);
Verdict decide(const ScoreSequence& s);

struct EnumerateResult {
    StageStats stats;
    std::optional<GoodStore> store;
};

// Streams every regular sequence for cfg.n through the pipeline, counting
// acceptances after each stage. Partitions split the lexicographic range;
// results are merged deterministically.
EnumerateResult enumerate_sequences(const PipelineConfig& cfg, bool emit_store = false);

// Convenience: the number of football sequences for n teams.
std::uint64_t football_count(const PipelineConfig& cfg);

// Deterministic rendering of enumeration statistics, including an errata
// section comparing against the published reference tables.
std::string emit_report(const std::vector<StageStats>& stats, ReportFormat format);

// Reference table values (0 where unpublished) for comparisons and tests.
struct ReferenceRow {
    int n;
    std::uint64_t regular;
    std::uint64_t c[9];      // after C1..C9
    std::uint64_t linear[5]; // after L1, L2, L3+L4, L5+L6, L7+L8
    std::uint64_t quad;      // after Q2+Q3
    std::uint64_t football;
};
const std::vector<ReferenceRow>& reference_rows();

}  // namespace footseq
