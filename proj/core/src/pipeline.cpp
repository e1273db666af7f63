#include "footseq/pipeline.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "footseq/filters_const.hpp"
#include "footseq/filters_linear.hpp"
#include "footseq/filters_quad.hpp"
#include "footseq/reconstruct.hpp"

namespace footseq {

namespace {

// Counter layout: regular, C1..C9, L1..L8, Q, football.
constexpr int kRegular = 0;
constexpr int kC1 = 1;
constexpr int kL1 = 10;
constexpr int kQ = 18;
constexpr int kFootball = 19;
constexpr int kNumCounters = 20;

const char* counter_name(int idx) {
    static const char* kNames[kNumCounters] = {
        "regular", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9",
        "L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8", "Q", "football"};
    return kNames[idx];
}

struct Tally {
    std::array<std::uint64_t, kNumCounters> counts{};
    std::uint64_t reconstructed = 0;
    std::uint64_t oracle_decided = 0;
    std::vector<std::vector<int>> good;

    void merge(const Tally& other) {
        for (int i = 0; i < kNumCounters; ++i) counts[i] += other.counts[i];
        reconstructed += other.reconstructed;
        oracle_decided += other.oracle_decided;
        good.insert(good.end(), other.good.begin(), other.good.end());
    }
};

// Classifies one sequence, bumping per-stage counters. collect_good controls
// whether good sequences are copied into the tally.
void process_sequence(const std::vector<int>& raw, const PipelineConfig& cfg,
                      const GoodStore* prev_store, bool collect_good, Tally& tally) {
    ++tally.counts[kRegular];
    const ScoreSequence s = ScoreSequence::trusted(raw);

    if (cfg.constant_stage) {
        static const ConstFilterId kIds[] = {
            ConstFilterId::C1, ConstFilterId::C2, ConstFilterId::C3,
            ConstFilterId::C4, ConstFilterId::C5, ConstFilterId::C6,
            ConstFilterId::C7, ConstFilterId::C8, ConstFilterId::C9,
        };
        for (int i = 0; i < 9; ++i) {
            if (constant_test(kIds[i], s).is_bad()) return;
            ++tally.counts[kC1 + i];
        }
    } else {
        for (int i = 0; i < 9; ++i) ++tally.counts[kC1 + i];
    }

    if (cfg.linear_stage) {
        int passed = 0;
        Verdict v = linear_cascade_traced(s, [&](Stage) {
            ++tally.counts[kL1 + passed];
            ++passed;
        });
        if (v.is_bad()) return;
    } else {
        for (int i = 0; i < 8; ++i) ++tally.counts[kL1 + i];
    }

    QuadOutcome quad{Verdict::undecided(), make_window(s)};
    if (cfg.quad_stage) {
        quad = quad_cascade(s);
        if (quad.verdict.is_bad()) return;
    }
    ++tally.counts[kQ];

    if (cfg.reconstruct_stage) {
        Verdict v = reconstruct_pipeline(s, quad);
        if (v.is_good()) {
            ++tally.counts[kFootball];
            ++tally.reconstructed;
            if (collect_good) tally.good.push_back(raw);
            return;
        }
    }

    ++tally.oracle_decided;
    bool good = false;
    if (cfg.oracle == OracleMode::Backtrack || prev_store == nullptr)
        good = backtrack_decide(s).is_good();
    else
        good = incremental_decide(s, *prev_store);
    if (good) {
        ++tally.counts[kFootball];
        if (collect_good) tally.good.push_back(raw);
    }
}

struct Chunk {
    std::vector<int> start;
    std::optional<std::pair<int, int>> end_pair;  // first excluded (s1, s2)
};

// Splits the lexicographic enumeration into `parts` contiguous ranges of
// (s1, s2) prefixes with roughly equal numbers of sequences.
std::vector<Chunk> make_chunks(int n, int parts) {
    std::vector<Chunk> chunks;
    if (n < 2 || parts <= 1) {
        chunks.push_back({std::vector<int>(static_cast<std::size_t>(n), 0), std::nullopt});
        return chunks;
    }
    const int hi = max_points(n);
    struct PairWeight {
        int a, b;
        unsigned long long w;
    };
    std::vector<PairWeight> pairs;
    unsigned long long total = 0;
    for (int a = 0; a <= hi; ++a) {
        for (int b = a; b <= hi; ++b) {
            unsigned long long w = 1;
            if (n > 2)
                w = count_regular(b, hi, n - 2).convert_to<unsigned long long>();
            pairs.push_back({a, b, w});
            total += w;
        }
    }
    const unsigned long long goal = total / static_cast<unsigned long long>(parts) + 1;
    std::size_t idx = 0;
    while (idx < pairs.size()) {
        const auto [a0, b0, w0] = pairs[idx];
        std::vector<int> start(static_cast<std::size_t>(n), b0);
        start[0] = a0;
        unsigned long long acc = 0;
        while (idx < pairs.size() && (acc == 0 || acc + pairs[idx].w <= goal)) {
            acc += pairs[idx].w;
            ++idx;
        }
        Chunk c;
        c.start = std::move(start);
        if (idx < pairs.size()) c.end_pair = std::make_pair(pairs[idx].a, pairs[idx].b);
        chunks.push_back(std::move(c));
    }
    return chunks;
}

void run_chunk(const Chunk& chunk, const PipelineConfig& cfg, const GoodStore* prev_store,
               bool collect_good, Tally& tally) {
    RegularGenerator gen(cfg.n, chunk.start);
    do {
        const auto& cur = gen.current();
        if (chunk.end_pair && cfg.n >= 2) {
            if (std::make_pair(cur[0], cur[1]) >= *chunk.end_pair) break;
        }
        process_sequence(cur, cfg, prev_store, collect_good, tally);
    } while (gen.advance());
}

}  // namespace

Verdict decide(const ScoreSequence& s, const PipelineConfig& cfg) {
    if (cfg.constant_stage)
        if (Verdict v = constant_cascade(s); v.is_bad()) return v;
    if (cfg.linear_stage)
        if (Verdict v = linear_cascade(s); v.is_bad()) return v;
    QuadOutcome quad{Verdict::undecided(), make_window(s)};
    if (cfg.quad_stage) {
        quad = quad_cascade(s);
        if (quad.verdict.is_bad()) return quad.verdict;
    }
    if (cfg.reconstruct_stage)
        if (Verdict v = reconstruct_pipeline(s, quad); v.is_good()) return v;
    if (cfg.oracle == OracleMode::Incremental && s.team_count() >= 3) {
        const GoodStore prev =
            build_store(s.team_count() - 1, StoreDecider::PureIncremental, cfg.store_dir);
        if (!incremental_decide(s, prev)) return Verdict::bad(Stage::INC);
        Verdict bt = backtrack_decide(s);  // materialize a certificate
        return Verdict::good(Stage::INC, std::move(*bt.certificate));
    }
    return backtrack_decide(s);
}

Verdict decide(const ScoreSequence& s) {
    PipelineConfig cfg;
    cfg.n = s.team_count();
    return decide(s, cfg);
}

EnumerateResult enumerate_sequences(const PipelineConfig& cfg, bool emit_store) {
    const int n = cfg.n;
    if (n < 1) throw std::invalid_argument("enumerate: n must be positive");

    std::optional<GoodStore> prev_store;
    if (cfg.oracle == OracleMode::Incremental && n >= 3)
        prev_store = build_store(n - 1, StoreDecider::PureIncremental, cfg.store_dir);

    int parts = cfg.partitions;
    if (parts <= 0) parts = static_cast<int>(std::thread::hardware_concurrency());
    if (parts < 1) parts = 1;

    const std::vector<Chunk> chunks = make_chunks(n, parts);
    std::vector<Tally> tallies(chunks.size());
    const GoodStore* store_ptr = prev_store ? &*prev_store : nullptr;

    if (chunks.size() == 1) {
        run_chunk(chunks[0], cfg, store_ptr, emit_store, tallies[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(chunks.size());
        for (std::size_t i = 0; i < chunks.size(); ++i) {
            threads.emplace_back([&, i] {
                run_chunk(chunks[i], cfg, store_ptr, emit_store, tallies[i]);
            });
        }
        for (auto& t : threads) t.join();
    }

    Tally merged;
    for (const Tally& t : tallies) merged.merge(t);  // chunk order = lex order

    EnumerateResult result;
    result.stats.n = n;
    for (int i = 0; i < kNumCounters; ++i)
        result.stats.counters.emplace_back(counter_name(i), merged.counts[i]);
    result.stats.football_count = merged.counts[kFootball];
    result.stats.reconstructed_count = merged.reconstructed;
    result.stats.oracle_decided_count = merged.oracle_decided;
    if (emit_store) result.store = GoodStore(n, std::move(merged.good));
    return result;
}

std::uint64_t football_count(const PipelineConfig& cfg) {
    return enumerate_sequences(cfg).stats.football_count;
}

}  // namespace footseq
