#include <algorithm>
#include <sstream>

#include "footseq/pipeline.hpp"

namespace footseq {

namespace {

// Published values for n = 1..8; 0 marks entries the source left blank.
// linear[] holds the published checkpoints after L1, L2, L3+L4, L5+L6, L7+L8.
const std::vector<ReferenceRow> kReference = {
    {1, 1, {1, 1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, 1, 1},
    {2, 10, {7, 4, 2, 2, 2, 2, 2, 2, 2}, {2, 2, 2, 2, 2}, 2, 2},
    {3, 84, {63, 45, 30, 26, 22, 19, 17, 15, 14}, {12, 10, 10, 7, 7}, 7, 7},
    {4, 715, {550, 414, 311, 281, 255, 237, 222, 209, 203}, {134, 94, 87, 46, 40}, 40, 40},
    {5, 6188, {4823, 3718, 2911, 2691, 2501, 2374, 2271, 2175, 2133},
     {1230, 901, 814, 475, 365}, 355, 355},
    {6, 54264, {42636, 33320, 26650, 24000, 23373, 22302, 21596, 20039, 20510},
     {10947, 8348, 7526, 4459, 4086}, 3760, 3678},
    {7, 480700, {379753, 299421, 242624, 227770, 215227, 207042, 200609, 194333, 191707},
     {97427, 76526, 69349, 47867, 44657}, 39417, 37263},
    {8, 4292145,
     {3404115, 2700775, 2207800, 2700775, 2207800, 2097803, 1972783, 1795074, 1772842},
     {872234, 699344, 637735, 460153, 451213}, 393072, 361058},
};

const char* const kStaticNotes[] = {
    "the published list of good length-3 sequences contains (1,1,4); the realizable "
    "sequence is (1,1,6)",
    "one published summary reports R(2) = 1; the two-team regular count is 10",
    "published C9(6) appears as both 20510 and 20518; enumeration gives 20518",
    "published C7(14) exceeds C6(14), impossible for a cascade",
    "the published n=8 row repeats the C2/C3 values in its C4/C5 columns",
    "published F(7) appears as both 37273 and 37263; enumeration gives 37263",
    "one published summary gives F(7) = 27263 and C9(8) = 1772442, disagreeing with "
    "the filter tables",
};

const ReferenceRow* reference_for(int n) {
    for (const auto& row : kReference)
        if (row.n == n) return &row;
    return nullptr;
}

std::uint64_t counter_value(const StageStats& s, const std::string& name) {
    for (const auto& [key, value] : s.counters)
        if (key == name) return value;
    return 0;
}

struct Divergence {
    int n;
    std::string column;
    std::uint64_t ours;
    std::uint64_t published;
};

std::vector<Divergence> divergences(const std::vector<StageStats>& stats) {
    std::vector<Divergence> out;
    static const char* kCNames[9] = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9"};
    for (const StageStats& s : stats) {
        const ReferenceRow* ref = reference_for(s.n);
        if (!ref) continue;
        auto check = [&](const std::string& column, std::uint64_t ours, std::uint64_t pub) {
            if (pub != 0 && ours != pub) out.push_back({s.n, column, ours, pub});
        };
        check("regular", counter_value(s, "regular"), ref->regular);
        for (int i = 0; i < 9; ++i) check(kCNames[i], counter_value(s, kCNames[i]), ref->c[i]);
        check("L1", counter_value(s, "L1"), ref->linear[0]);
        check("L2", counter_value(s, "L2"), ref->linear[1]);
        check("L3+L4", counter_value(s, "L4"), ref->linear[2]);
        check("L5+L6", counter_value(s, "L6"), ref->linear[3]);
        check("L7+L8", counter_value(s, "L8"), ref->linear[4]);
        check("Q", counter_value(s, "Q"), ref->quad);
        check("football", s.football_count, ref->football);
    }
    std::sort(out.begin(), out.end(), [](const Divergence& a, const Divergence& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.column < b.column;
    });
    return out;
}

const char* const kColumns[] = {"n",  "regular", "C1", "C2", "C3", "C4", "C5", "C6",
                                "C7", "C8",      "C9", "L1", "L2", "L3", "L4", "L5",
                                "L6", "L7",      "L8", "Q",  "reconstructed",
                                "oracle_decided", "football"};

std::vector<std::uint64_t> row_values(const StageStats& s) {
    std::vector<std::uint64_t> v;
    v.push_back(static_cast<std::uint64_t>(s.n));
    static const char* kCounterCols[] = {"regular", "C1", "C2", "C3", "C4", "C5", "C6",
                                         "C7",      "C8", "C9", "L1", "L2", "L3", "L4",
                                         "L5",      "L6", "L7", "L8", "Q"};
    for (const char* name : kCounterCols) v.push_back(counter_value(s, name));
    v.push_back(s.reconstructed_count);
    v.push_back(s.oracle_decided_count);
    v.push_back(s.football_count);
    return v;
}

std::string emit_csv(const std::vector<StageStats>& stats) {
    std::ostringstream out;
    for (std::size_t i = 0; i < std::size(kColumns); ++i) {
        if (i) out << ',';
        out << kColumns[i];
    }
    out << '\n';
    for (const StageStats& s : stats) {
        const auto values = row_values(s);
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out << ',';
            out << values[i];
        }
        out << '\n';
    }
    for (const Divergence& d : divergences(stats))
        out << "# errata: n=" << d.n << " " << d.column << " ours=" << d.ours
            << " published=" << d.published << '\n';
    for (const char* note : kStaticNotes) out << "# errata: " << note << '\n';
    return out.str();
}

std::string emit_json(const std::vector<StageStats>& stats) {
    std::ostringstream out;
    out << "{\n  \"rows\": [\n";
    for (std::size_t r = 0; r < stats.size(); ++r) {
        const auto values = row_values(stats[r]);
        out << "    {";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out << ", ";
            out << '"' << kColumns[i] << "\": " << values[i];
        }
        out << '}' << (r + 1 < stats.size() ? "," : "") << '\n';
    }
    out << "  ],\n  \"errata\": [\n";
    const auto divs = divergences(stats);
    bool first = true;
    for (const Divergence& d : divs) {
        if (!first) out << ",\n";
        first = false;
        out << "    {\"n\": " << d.n << ", \"column\": \"" << d.column
            << "\", \"ours\": " << d.ours << ", \"published\": " << d.published << '}';
    }
    for (const char* note : kStaticNotes) {
        if (!first) out << ",\n";
        first = false;
        out << "    {\"note\": \"" << note << "\"}";
    }
    out << "\n  ]\n}\n";
    return out.str();
}

std::string emit_text(const std::vector<StageStats>& stats) {
    std::ostringstream out;
    for (const StageStats& s : stats) {
        out << "n=" << s.n << '\n';
        const ReferenceRow* ref = reference_for(s.n);
        auto line = [&](const std::string& label, std::uint64_t ours,
                        std::uint64_t published) {
            out << "  " << label;
            for (std::size_t i = label.size(); i < 10; ++i) out << ' ';
            out << ours;
            if (published != 0) {
                out << "  (published " << published
                    << (published == ours ? ", match)" : ", DIFFERS)");
            }
            out << '\n';
        };
        static const char* kCNames[9] = {"C1", "C2", "C3", "C4", "C5",
                                         "C6", "C7", "C8", "C9"};
        line("regular", counter_value(s, "regular"), ref ? ref->regular : 0);
        for (int i = 0; i < 9; ++i)
            line(kCNames[i], counter_value(s, kCNames[i]), ref ? ref->c[i] : 0);
        line("L1", counter_value(s, "L1"), ref ? ref->linear[0] : 0);
        line("L2", counter_value(s, "L2"), ref ? ref->linear[1] : 0);
        line("L3", counter_value(s, "L3"), 0);
        line("L4", counter_value(s, "L4"), ref ? ref->linear[2] : 0);
        line("L5", counter_value(s, "L5"), 0);
        line("L6", counter_value(s, "L6"), ref ? ref->linear[3] : 0);
        line("L7", counter_value(s, "L7"), 0);
        line("L8", counter_value(s, "L8"), ref ? ref->linear[4] : 0);
        line("Q", counter_value(s, "Q"), ref ? ref->quad : 0);
        line("reconstr", s.reconstructed_count, 0);
        line("oracle", s.oracle_decided_count, 0);
        line("football", s.football_count, ref ? ref->football : 0);
    }
    out << "errata:\n";
    for (const Divergence& d : divergences(stats))
        out << "  n=" << d.n << " " << d.column << ": ours " << d.ours << ", published "
            << d.published << '\n';
    for (const char* note : kStaticNotes) out << "  " << note << '\n';
    return out.str();
}

}  // namespace

const std::vector<ReferenceRow>& reference_rows() { return kReference; }

std::string emit_report(const std::vector<StageStats>& stats, ReportFormat format) {
    switch (format) {
        case ReportFormat::Csv: return emit_csv(stats);
        case ReportFormat::Json: return emit_json(stats);
        case ReportFormat::Text: return emit_text(stats);
    }
    return {};
}

}  // namespace footseq
