#pragma once

// JSON and text renderings of parameters, traces and metrics, plus the
// published nonlinearity rows used by `compare`.

#include "chaos.hpp"
#include "errors.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace sboxtsp {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Parameters: hex fields are authoritative, decimal fields are mirrors.

inline json to_json(const ChaosParams& p) {
    return {{"x0_hex", p.x0_hex()},
            {"p_hex", p.p_hex()},
            {"x0", double_to_decimal(p.x0())},
            {"p", double_to_decimal(p.p())}};
}

inline ChaosParams params_from_json(const json& j) {
    try {
        return ChaosParams::from_hex(j.at("x0_hex").get<std::string>(),
                                     j.at("p_hex").get<std::string>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("params JSON: ") + e.what());
    }
}

inline json sbox_to_json(const SBox& s) {
    return json(std::vector<int>(s.begin(), s.end()));
}

inline json to_json(const WeightMatrix& w) {
    json rows = json::array();
    for (const auto& row : w.rows()) {
        rows.push_back(std::vector<int>(row.begin(), row.end()));
    }
    return rows;
}

inline json to_json(const SubGraphRecord& r) {
    return {{"index", r.index},
            {"positions", std::vector<int>(r.graph.positions.begin(), r.graph.positions.end())},
            {"nodes", std::vector<int>(r.graph.nodes.begin(), r.graph.nodes.end())},
            {"weights", to_json(r.graph.weights)},
            {"tour", std::vector<int>(r.tour.order().begin(), r.tour.order().end())},
            {"cost", r.cost},
            {"stream_begin", r.stream_begin},
            {"stream_end", r.stream_end}};
}

/// S-box snapshots after each window are included only when `with_snapshots`.
inline json to_json(const GenerationTrace& t, bool with_snapshots = false) {
    json records = json::array();
    for (std::size_t k = 0; k < t.records.size(); ++k) {
        json r = to_json(t.records[k]);
        if (with_snapshots && k < t.snapshots.size()) {
            r["sbox_after"] = sbox_to_json(t.snapshots[k]);
        }
        records.push_back(std::move(r));
    }
    return {{"params", to_json(t.params)},
            {"burn_in", t.burn_in},
            {"initial_draws", t.initial_draws},
            {"total_iterations", t.total_iterations},
            {"initial_sbox", sbox_to_json(t.initial_sbox)},
            {"subgraphs", std::move(records)},
            {"final_sbox", sbox_to_json(t.final_sbox)}};
}

inline json to_json(const MetricsReport& r) {
    json sac = json::array();
    for (const auto& row : r.sac) {
        sac.push_back(std::vector<double>(row.begin(), row.end()));
    }
    return {{"bijective", r.bijective},
            {"nl", std::vector<int>(r.nl.begin(), r.nl.end())},
            {"nl_min", r.nl_min},
            {"nl_max", r.nl_max},
            {"nl_mean", r.nl_mean},
            {"sac", std::move(sac)},
            {"sac_avg", r.sac_avg},
            {"du", r.du},
            {"ddt_max_location", {{"dx", r.ddt_max_location.first}, {"dy", r.ddt_max_location.second}}}};
}

// ---------------------------------------------------------------------------
// Text

inline std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

/// Up to four decimals with trailing zeros dropped: 107.5, 103, 105.25.
inline std::string compact4(double v) {
    std::string s = fixed4(v);
    while (s.back() == '0') {
        s.pop_back();
    }
    if (s.back() == '.') {
        s.pop_back();
    }
    return s;
}

/// One nonlinearity row: label, n1..n8, min, max, mean.
struct NonlinearityRow {
    std::string label;
    std::array<int, kSBoxBits> nl{};
    int min = 0;
    int max = 0;
    double mean = 0.0;
    std::string mean_text;  // as displayed
};

inline NonlinearityRow nonlinearity_row(std::string label, const MetricsReport& r) {
    return {std::move(label), r.nl, r.nl_min, r.nl_max, r.nl_mean, compact4(r.nl_mean)};
}

/// Published rows for other chaos-based S-boxes, reproduced as printed.
inline const std::vector<NonlinearityRow>& literature_rows() {
    static const std::vector<NonlinearityRow> rows = {
        {"Ahmad et al.", {108, 106, 106, 106, 106, 110, 106, 108}, 106, 110, 107.0, "107"},
        {"Ozkaynak et al.", {104, 100, 106, 102, 104, 102, 104, 104}, 100, 104, 103.3, "103.3"},
        {"Khan et al.", {108, 102, 100, 104, 104, 102, 98, 106}, 98, 108, 103.0, "103"},
        {"Gondal et al.", {98, 100, 106, 104, 106, 100, 106, 104}, 98, 106, 103.0, "103"},
        {"Belazi et al.", {102, 106, 104, 106, 108, 106, 106, 104}, 102, 108, 105.25, "105.25"},
    };
    return rows;
}

inline std::string format_nonlinearity_header(std::size_t label_width) {
    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(label_width), "S-box");
    out += buf;
    for (std::size_t j = 1; j <= kSBoxBits; ++j) {
        std::snprintf(buf, sizeof buf, " %4s", ("n" + std::to_string(j)).c_str());
        out += buf;
    }
    out += "  min  max   mean\n";
    return out;
}

inline std::string format_nonlinearity_row(const NonlinearityRow& row, std::size_t label_width) {
    std::string out;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-*s", static_cast<int>(label_width), row.label.c_str());
    out += buf;
    for (int v : row.nl) {
        std::snprintf(buf, sizeof buf, " %4d", v);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, " %4d %4d %6s\n", row.min, row.max, row.mean_text.c_str());
    out += buf;
    return out;
}

/// Human-readable report: nonlinearity row (n1..n8 = output bits 0..7),
/// SAC matrix and average, differential uniformity.
inline std::string format_report(const MetricsReport& r, std::string_view label = "S-box") {
    std::string out;
    out += std::string("bijective: ") + (r.bijective ? "yes" : "no") + "\n\n";
    auto row = nonlinearity_row(std::string(label), r);
    row.mean_text = fixed4(r.nl_mean);
    const std::size_t width = std::max<std::size_t>(row.label.size(), 8);
    out += format_nonlinearity_header(width);
    out += format_nonlinearity_row(row, width);
    out += "\nSAC dependence matrix (row = flipped input bit, column = output bit):\n";
    for (const auto& sac_row : r.sac) {
        for (std::size_t j = 0; j < sac_row.size(); ++j) {
            out += (j ? " " : "  ") + fixed4(sac_row[j]);
        }
        out += '\n';
    }
    out += "SAC average: " + fixed4(r.sac_avg) + "\n";
    char buf[96];
    std::snprintf(buf, sizeof buf, "differential uniformity: %d (dx=0x%02x, dy=0x%02x)\n", r.du,
                  r.ddt_max_location.first, r.ddt_max_location.second);
    out += buf;
    return out;
}

/// The analyzed row alongside the published rows, best mean first. Ties keep
/// the analyzed row ahead of the published ones.
inline std::vector<NonlinearityRow> comparison_rows(const MetricsReport& r,
                                                    std::string label = "Analyzed") {
    std::vector<NonlinearityRow> rows;
    rows.push_back(nonlinearity_row(std::move(label), r));
    const auto& lit = literature_rows();
    rows.insert(rows.end(), lit.begin(), lit.end());
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.mean > b.mean; });
    return rows;
}

inline std::string format_comparison(const std::vector<NonlinearityRow>& rows) {
    std::size_t width = 8;
    for (const auto& row : rows) {
        width = std::max(width, row.label.size());
    }
    std::string out = format_nonlinearity_header(width);
    for (const auto& row : rows) {
        out += format_nonlinearity_row(row, width);
    }
    return out;
}

} // namespace sboxtsp
