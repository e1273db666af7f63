#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "footseq/filters_const.hpp"
#include "footseq/filters_linear.hpp"
#include "footseq/filters_quad.hpp"
#include "footseq/oracle.hpp"
#include "footseq/pipeline.hpp"
#include "footseq/reconstruct.hpp"
#include "footseq/theory.hpp"

namespace {

using footseq::ReportFormat;
using footseq::Stage;

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    if (name == "text") return ReportFormat::Text;
    throw std::invalid_argument("--format must be csv, json or text");
}

// Reports and stores go through a temporary file so a failed write never
// leaves a truncated result behind.
void write_atomically(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

int cmd_decide(const std::vector<long long>& raw) {
    std::vector<int> values(raw.begin(), raw.end());
    footseq::ScoreSequence s;
    try {
        s = footseq::ScoreSequence::from_values(values);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    const footseq::Verdict v = footseq::decide(s);
    nlohmann::json out;
    out["verdict"] = v.is_good() ? "good" : "bad";
    out["stage"] = footseq::stage_name(v.stage);
    if (v.is_good()) {
        const footseq::ResultMatrix m = v.certificate->permuted(s.input_order());
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < m.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int j = 0; j < m.size(); ++j) {
                if (i == j)
                    row.push_back(nullptr);
                else
                    row.push_back(m.at(i, j));
            }
            rows.push_back(std::move(row));
        }
        out["certificate"] = std::move(rows);
    } else {
        out["certificate"] = nullptr;
    }
    std::cout << out.dump() << "\n";
    return v.is_good() ? 0 : 1;
}

int run_verify(int max_n) {
    using namespace footseq;
    std::uint64_t violations = 0;
    std::optional<GoodStore> prev;
    for (int n = 1; n <= max_n; ++n) {
        std::uint64_t checked = 0;
        RegularGenerator gen(n);
        do {
            const ScoreSequence s = ScoreSequence::trusted(gen.current());
            const Verdict truth = backtrack_decide(s);
            const bool good = truth.is_good();
            auto complain = [&](const char* what) {
                std::cerr << "violation: " << what << " on";
                for (int v : s.scores()) std::cerr << ' ' << v;
                std::cerr << "\n";
                ++violations;
            };
            if (good && !validate_result_matrix(*truth.certificate, s))
                complain("oracle certificate invalid");
            if (good && constant_cascade(s).is_bad()) complain("constant cascade rejects good");
            if (good && linear_cascade(s).is_bad()) complain("linear cascade rejects good");
            QuadOutcome q = quad_cascade(s);
            if (good && q.verdict.is_bad()) complain("quad cascade rejects good");
            Verdict rec = reconstruct_pipeline(s, q);
            if (rec.is_good()) {
                if (!good)
                    complain("reconstruction claims good on bad input");
                else if (!validate_result_matrix(*rec.certificate, s))
                    complain("reconstruction certificate invalid");
            }
            if (prev && prev->n() == n - 1 && incremental_decide(s, *prev) != good)
                complain("incremental disagrees with backtracking");
            ++checked;
        } while (gen.advance());
        std::cout << "n=" << n << ": " << checked << " sequences checked\n";
        if (n >= 2) prev = build_store(n, StoreDecider::PureIncremental);
    }
    if (violations) {
        std::cout << violations << " violations\n";
        return 1;
    }
    std::cout << "all checks passed\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision and enumeration toolkit for football score sequences"};
    app.require_subcommand(1);

    auto* decide_cmd = app.add_subcommand(
        "decide", "Decide one sequence; prints a JSON verdict with certificate");
    std::vector<long long> decide_scores;
    decide_cmd->add_option("scores", decide_scores, "per-team point totals")->required();

    auto* count_cmd = app.add_subcommand("count", "Print the number of football sequences");
    int count_n = 0;
    std::string count_oracle = "backtrack";
    int count_partitions = 0;
    std::string count_store_dir;
    count_cmd->add_option("--n", count_n, "number of teams")->required();
    count_cmd->add_option("--oracle", count_oracle, "backtrack|incremental");
    count_cmd->add_option("--partitions", count_partitions, "parallel partitions (0 = auto)");
    count_cmd->add_option("--store-dir", count_store_dir, "good-store cache directory");

    auto* enum_cmd =
        app.add_subcommand("enumerate", "Enumerate all sequences, write per-stage report");
    int enum_n = 0;
    std::string enum_report;
    std::string enum_format = "csv";
    bool enum_emit_store = false;
    int enum_partitions = 0;
    std::string enum_store_dir = ".";
    enum_cmd->add_option("--n", enum_n, "number of teams")->required();
    enum_cmd->add_option("--report", enum_report, "report output path")->required();
    enum_cmd->add_option("--format", enum_format, "csv|json|text");
    enum_cmd->add_flag("--emit-store", enum_emit_store, "also write the good-sequence store");
    enum_cmd->add_option("--partitions", enum_partitions, "parallel partitions (0 = auto)");
    enum_cmd->add_option("--store-dir", enum_store_dir, "directory for --emit-store output");

    auto* tables_cmd =
        app.add_subcommand("tables", "Reproduce the reference tables with errata notes");
    int tables_max_n = 0;
    std::string tables_report;
    std::string tables_format = "text";
    int tables_partitions = 0;
    tables_cmd->add_option("--max-n", tables_max_n, "largest team count")->required();
    tables_cmd->add_option("--report", tables_report, "report output path")->required();
    tables_cmd->add_option("--format", tables_format, "csv|json|text");
    tables_cmd->add_option("--partitions", tables_partitions, "parallel partitions (0 = auto)");

    auto* ratios_cmd =
        app.add_subcommand("ratios", "Exact filter efficiency and growth ratios");
    std::string ratios_filter;
    long long ratios_n_raw = -1;
    bool ratios_limit = false;
    ratios_cmd->add_option("--filter", ratios_filter, "C1..C9|ALL|GROWTH")->required();
    ratios_cmd->add_option("--n", ratios_n_raw, "finite team count");
    ratios_cmd->add_flag("--limit", ratios_limit, "asymptotic limit");

    auto* verify_cmd = app.add_subcommand(
        "verify", "Exhaustive soundness and equivalence sweep against the oracle");
    int verify_max_n = 6;
    verify_cmd->add_option("--max-n", verify_max_n, "largest team count to sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*decide_cmd) return cmd_decide(decide_scores);

        if (*count_cmd) {
            footseq::PipelineConfig cfg;
            cfg.n = count_n;
            cfg.partitions = count_partitions;
            cfg.store_dir = count_store_dir;
            if (count_oracle == "incremental")
                cfg.oracle = footseq::OracleMode::Incremental;
            else if (count_oracle != "backtrack")
                throw std::invalid_argument("--oracle must be backtrack or incremental");
            std::cout << footseq::football_count(cfg) << "\n";
            return 0;
        }

        if (*enum_cmd) {
            footseq::PipelineConfig cfg;
            cfg.n = enum_n;
            cfg.partitions = enum_partitions;
            cfg.format = parse_format(enum_format);
            footseq::EnumerateResult r = footseq::enumerate_sequences(cfg, enum_emit_store);
            write_atomically(enum_report, footseq::emit_report({r.stats}, cfg.format));
            if (enum_emit_store) {
                std::ostringstream os;
                r.store->write(os);
                std::filesystem::create_directories(enum_store_dir);
                write_atomically((std::filesystem::path(enum_store_dir) /
                                  ("good-" + std::to_string(enum_n) + ".store"))
                                     .string(),
                                 os.str());
            }
            std::cout << "F(" << enum_n << ") = " << r.stats.football_count << "\n";
            return 0;
        }

        if (*tables_cmd) {
            std::vector<footseq::StageStats> rows;
            for (int n = 1; n <= tables_max_n; ++n) {
                footseq::PipelineConfig cfg;
                cfg.n = n;
                cfg.partitions = tables_partitions;
                rows.push_back(footseq::enumerate_sequences(cfg).stats);
                std::cerr << "n=" << n << " done, F=" << rows.back().football_count << "\n";
            }
            write_atomically(tables_report,
                             footseq::emit_report(rows, parse_format(tables_format)));
            return 0;
        }

        if (*ratios_cmd) {
            std::optional<long long> maybe_n;
            if (ratios_n_raw >= 0) maybe_n = ratios_n_raw;
            if (ratios_limit) maybe_n = std::nullopt;
            if (!ratios_limit && ratios_n_raw < 0)
                throw std::invalid_argument("ratios: pass --n N or --limit");
            footseq::Rational value;
            if (ratios_filter == "ALL") {
                value = footseq::cumulative_filter_efficiency(maybe_n);
            } else if (ratios_filter == "GROWTH") {
                value = footseq::regular_growth_ratio(maybe_n);
            } else {
                static const std::pair<const char*, Stage> kIds[] = {
                    {"C1", Stage::C1}, {"C2", Stage::C2}, {"C3", Stage::C3},
                    {"C4", Stage::C4}, {"C5", Stage::C5}, {"C6", Stage::C6},
                    {"C7", Stage::C7}, {"C8", Stage::C8}, {"C9", Stage::C9}};
                Stage id = Stage::None;
                for (const auto& [name, stage] : kIds)
                    if (ratios_filter == name) id = stage;
                if (id == Stage::None)
                    throw std::invalid_argument("unknown filter id: " + ratios_filter);
                value = footseq::filter_efficiency(id, maybe_n);
            }
            std::cout << ratios_filter;
            if (maybe_n)
                std::cout << " n=" << *maybe_n;
            else
                std::cout << " limit";
            std::cout << ": " << boost::multiprecision::numerator(value) << "/"
                      << boost::multiprecision::denominator(value) << " = "
                      << footseq::to_decimal(value, 6) << "\n";
            return 0;
        }

        if (*verify_cmd) return run_verify(verify_max_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
