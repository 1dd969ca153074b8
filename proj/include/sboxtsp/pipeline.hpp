#pragma once

// S-box synthesis: a chaotic coupon-collector permutation is reordered window
// by window along minimum-cost Hamiltonian cycles whose edge weights are drawn
// from the same chaotic trajectory.
//
// Stream consumption order (one trajectory throughout):
//   burn-in, initial S-box draws, 32 x 28 weights for the linear windows
//   (ascending), 28 weights for the middle window, 28 for the last window.

#include "chaos.hpp"
#include "errors.hpp"
#include "sbox.hpp"
#include "tsp.hpp"

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sboxtsp {

inline constexpr std::uint64_t kInitialDrawCap = 10'000'000;
inline constexpr std::size_t kLinearSubGraphs = kSBoxSize / kGraphNodes;  // 32
inline constexpr std::size_t kMiddleWindowStart = kSBoxSize / 2 - kGraphNodes / 2;  // 124
inline constexpr std::size_t kLastWindowStart = kSBoxSize - kGraphNodes;  // 248
inline constexpr std::size_t kTotalSubGraphs = kLinearSubGraphs + 2;  // 34

/// Eight S-box positions and the values they held when the graph was built.
/// Node k corresponds to positions[k].
struct SubGraph {
    std::array<std::uint16_t, kGraphNodes> positions{};
    std::array<std::uint8_t, kGraphNodes> nodes{};
    WeightMatrix weights;

    friend bool operator==(const SubGraph&, const SubGraph&) = default;
};

/// Contiguous window [first, first + 8).
inline SubGraph make_window(const SBox& s, std::size_t first) {
    if (first + kGraphNodes > kSBoxSize) {
        throw ValidationError("sub-graph window exceeds the S-box");
    }
    SubGraph g;
    for (std::size_t k = 0; k < kGraphNodes; ++k) {
        g.positions[k] = static_cast<std::uint16_t>(first + k);
        g.nodes[k] = s[first + k];
    }
    return g;
}

/// Collects bytes from the stream, skipping repeats, until all 256 values
/// have appeared. The stream should already be burned in.
inline SBox gen_initial_sbox(ChaosStream& stream, std::uint64_t draw_cap = kInitialDrawCap) {
    SBox s{};
    std::bitset<kSBoxSize> seen;
    std::size_t filled = 0;
    for (std::uint64_t draws = 0; filled < kSBoxSize; ++draws) {
        if (draws == draw_cap) {
            throw IterationCapError("collected only " + std::to_string(filled) +
                                    " distinct bytes in " + std::to_string(draw_cap) +
                                    " draws (degenerate or periodic trajectory)");
        }
        const auto t = stream.next_byte();
        if (!seen.test(t)) {
            seen.set(t);
            s[filled++] = t;
        }
    }
    return s;
}

/// Splits positions 0..255 into 32 consecutive windows of 8, weights zeroed.
inline std::array<SubGraph, kLinearSubGraphs> decompose_linear(const SBox& s) {
    std::array<SubGraph, kLinearSubGraphs> graphs;
    for (std::size_t k = 0; k < kLinearSubGraphs; ++k) {
        graphs[k] = make_window(s, k * kGraphNodes);
    }
    return graphs;
}

/// Draws one weight per edge (i,j), i < j, in lexicographic order of (i,j).
inline SubGraph assign_weights(ChaosStream& stream, SubGraph g) {
    for (std::size_t i = 0; i < kGraphNodes; ++i) {
        for (std::size_t j = i + 1; j < kGraphNodes; ++j) {
            g.weights.set(i, j, stream.next_weight());
        }
    }
    return g;
}

/// Writes the window's values back in tour order: positions[k] receives
/// nodes[t[k]]. Every other entry is left as is.
inline SBox apply_tour(SBox s, const SubGraph& g, const Tour& t) {
    for (std::size_t k = 0; k < kGraphNodes; ++k) {
        s[g.positions[k]] = g.nodes[t[k]];
    }
    return s;
}

/// Everything one window pass decided, for audit and replay.
struct SubGraphRecord {
    std::size_t index = 0;  // 0..31 linear, 32 middle, 33 last
    SubGraph graph;
    Tour tour;
    int cost = 0;
    std::uint64_t stream_begin = 0;  // stream iteration count before weights
    std::uint64_t stream_end = 0;

    friend bool operator==(const SubGraphRecord&, const SubGraphRecord&) = default;
};

struct WindowPass {
    SBox sbox;
    SubGraphRecord record;
};

/// Builds the window at `first` from the current S-box, weights it, solves
/// the tour and applies it.
inline WindowPass run_window(const SBox& s, ChaosStream& stream, std::size_t first,
                             std::size_t index) {
    SubGraphRecord rec;
    rec.index = index;
    rec.stream_begin = stream.iterations();
    rec.graph = assign_weights(stream, make_window(s, first));
    rec.stream_end = stream.iterations();
    rec.tour = solve_tsp(rec.graph.weights);
    rec.cost = tour_cost(rec.graph.weights, rec.tour);
    SBox next = apply_tour(s, rec.graph, rec.tour);
    if (!is_bijective(next)) {
        throw std::logic_error("window pass broke bijectivity");
    }
    return {next, std::move(rec)};
}

/// The 33rd sub-graph: the central eight positions 124..131.
inline SBox middle_pass(const SBox& s, ChaosStream& stream) {
    return run_window(s, stream, kMiddleWindowStart, kLinearSubGraphs).sbox;
}

/// The 34th sub-graph: the last eight positions 248..255.
inline SBox final_pass(const SBox& s, ChaosStream& stream) {
    return run_window(s, stream, kLastWindowStart, kLinearSubGraphs + 1).sbox;
}

struct GenerationTrace {
    ChaosParams params;
    std::uint64_t burn_in = kDefaultBurnIn;
    std::uint64_t initial_draws = 0;  // bytes drawn to fill the initial S-box
    SBox initial_sbox{};
    std::vector<SubGraphRecord> records;  // exactly 34
    std::vector<SBox> snapshots;  // S-box after each record
    SBox final_sbox{};
    std::uint64_t total_iterations = 0;

    friend bool operator==(const GenerationTrace&, const GenerationTrace&) = default;
};

struct GenerationResult {
    SBox sbox;
    GenerationTrace trace;
};

inline GenerationResult generate_sbox(const ChaosParams& params,
                                      std::uint64_t burn_in = kDefaultBurnIn) {
    ChaosStream stream(params);
    stream.burn_in(burn_in);

    GenerationTrace trace{.params = params, .burn_in = burn_in, .records = {}, .snapshots = {}};
    const auto before_initial = stream.iterations();
    SBox s = gen_initial_sbox(stream);
    trace.initial_draws = stream.iterations() - before_initial;
    trace.initial_sbox = s;
    trace.records.reserve(kTotalSubGraphs);
    trace.snapshots.reserve(kTotalSubGraphs);

    auto run = [&](std::size_t first, std::size_t index) {
        auto pass = run_window(s, stream, first, index);
        s = pass.sbox;
        trace.records.push_back(std::move(pass.record));
        trace.snapshots.push_back(s);
    };

    // Window contents are taken from the evolving S-box; the linear windows
    // are disjoint, so this equals decomposing the initial S-box up front.
    for (std::size_t k = 0; k < kLinearSubGraphs; ++k) {
        run(k * kGraphNodes, k);
    }
    run(kMiddleWindowStart, kLinearSubGraphs);
    run(kLastWindowStart, kLinearSubGraphs + 1);

    trace.final_sbox = s;
    trace.total_iterations = stream.iterations();
    return {s, std::move(trace)};
}

} // namespace sboxtsp
