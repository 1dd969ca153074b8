#pragma once

// Batch generation over many chaos parameters, scored and ranked.

#include "chaos.hpp"
#include "metrics.hpp"
#include "pipeline.hpp"
#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace sboxtsp {

/// Radical inverse of `index` in `base` (van der Corput).
inline double radical_inverse(std::uint64_t index, std::uint64_t base) noexcept {
    double inv = 1.0 / static_cast<double>(base);
    double f = inv;
    double r = 0.0;
    while (index > 0) {
        r += f * static_cast<double>(index % base);
        index /= base;
        f *= inv;
    }
    return r;
}

/// Deterministic low-discrepancy parameter grid: point i (1-based) takes the
/// 2-D Halton pair (bases 2 and 3), mapped affinely into [0.01, 0.99].
inline std::vector<ChaosParams> halton_grid(std::size_t count) {
    std::vector<ChaosParams> grid;
    grid.reserve(count);
    for (std::uint64_t i = 1; i <= count; ++i) {
        grid.emplace_back(0.01 + 0.98 * radical_inverse(i, 2), 0.01 + 0.98 * radical_inverse(i, 3));
    }
    return grid;
}

struct SweepEntry {
    ChaosParams params;
    std::optional<MetricsReport> metrics;  // empty when generation failed
    std::string error;
    SBox sbox{};
};

/// Success first, ordered by (nl_min desc, nl_mean desc, du asc, params hex);
/// failures last in input order.
inline void rank_sweep(std::vector<SweepEntry>& entries) {
    std::stable_sort(entries.begin(), entries.end(), [](const SweepEntry& a, const SweepEntry& b) {
        if (a.metrics.has_value() != b.metrics.has_value()) {
            return a.metrics.has_value();
        }
        if (!a.metrics) {
            return false;
        }
        const auto& ma = *a.metrics;
        const auto& mb = *b.metrics;
        return std::make_tuple(-ma.nl_min, -ma.nl_mean, ma.du, a.params.x0_hex(), a.params.p_hex()) <
               std::make_tuple(-mb.nl_min, -mb.nl_mean, mb.du, b.params.x0_hex(), b.params.p_hex());
    });
}

inline SweepEntry evaluate_params(const ChaosParams& params) {
    SweepEntry e{.params = params, .metrics = std::nullopt, .error = {}};
    try {
        auto result = generate_sbox(params);
        e.sbox = result.sbox;
        e.metrics = analyze(result.sbox);
    } catch (const std::exception& ex) {
        e.error = ex.what();
    }
    return e;
}

/// Evaluates every parameter pair (on up to `jobs` threads) and ranks them.
/// The result does not depend on `jobs`.
inline std::vector<SweepEntry> run_sweep(const std::vector<ChaosParams>& params,
                                         unsigned jobs = 1) {
    std::vector<std::optional<SweepEntry>> slots(params.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < params.size(); i = next++) {
            slots[i] = evaluate_params(params[i]);
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(params.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    std::vector<SweepEntry> entries;
    entries.reserve(params.size());
    for (auto& s : slots) {
        entries.push_back(std::move(*s));
    }
    rank_sweep(entries);
    return entries;
}

/// One JSON object per line (the SweepResult file format).
inline json to_json(const SweepEntry& e, std::size_t rank) {
    json j = {{"rank", rank}, {"params", to_json(e.params)}};
    if (e.metrics) {
        j["status"] = "ok";
        j["bijective"] = e.metrics->bijective;
        j["nl"] = std::vector<int>(e.metrics->nl.begin(), e.metrics->nl.end());
        j["nl_min"] = e.metrics->nl_min;
        j["nl_mean"] = e.metrics->nl_mean;
        j["sac_avg"] = e.metrics->sac_avg;
        j["du"] = e.metrics->du;
    } else {
        j["status"] = "failed";
        j["error"] = e.error;
    }
    return j;
}

} // namespace sboxtsp
