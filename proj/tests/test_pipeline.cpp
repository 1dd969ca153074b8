#include "oracles.hpp"

#include <sboxtsp/pipeline.hpp>

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace sboxtsp;

TEST_CASE("initial S-box is a permutation and matches a reference script", "[pipeline][oracle]") {
    ChaosStream stream(ChaosParams(0.3, 0.499));
    stream.burn_in();
    const auto s = gen_initial_sbox(stream);
    CHECK(is_bijective(s));

    long draws = 0;
    const auto ref = oracle::initial_sbox(0.3, 0.499, &draws);
    CHECK(std::vector<int>(s.begin(), s.end()) == ref);
    CHECK(stream.iterations() == 1000 + static_cast<std::uint64_t>(draws));
}

TEST_CASE("initial S-box is deterministic", "[pipeline]") {
    ChaosStream a(ChaosParams(0.77, 0.13));
    ChaosStream b(ChaosParams(0.77, 0.13));
    a.burn_in();
    b.burn_in();
    CHECK(gen_initial_sbox(a) == gen_initial_sbox(b));
}

TEST_CASE("degenerate trajectory hits the draw cap", "[pipeline]") {
    // With p = 0.5 the map doubles exactly, collapses onto the boundary within
    // ~55 steps and then cycles through the repair value.
    ChaosStream stream(ChaosParams(0.3, 0.5));
    stream.burn_in();
    CHECK_THROWS_AS(gen_initial_sbox(stream, 100000), IterationCapError);
    CHECK_THROWS_AS(generate_sbox(ChaosParams(0.3, 0.5)), IterationCapError);
}

TEST_CASE("decompose_linear partitions 0..255", "[pipeline]") {
    const auto s = identity_sbox();
    const auto graphs = decompose_linear(s);
    CHECK(graphs.front().positions == std::array<std::uint16_t, 8>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(graphs.back().positions ==
          std::array<std::uint16_t, 8>{248, 249, 250, 251, 252, 253, 254, 255});
    std::set<int> covered;
    for (const auto& g : graphs) {
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(covered.insert(g.positions[k]).second);
            CHECK(g.nodes[k] == s[g.positions[k]]);
        }
        CHECK(g.weights == WeightMatrix{});
    }
    CHECK(covered.size() == 256);
}

TEST_CASE("assign_weights draws 28 weights in lexicographic edge order", "[pipeline]") {
    const ChaosParams params(0.42, 0.31);
    ChaosStream stream(params);
    ChaosStream mirror(params);
    const auto g = assign_weights(stream, make_window(identity_sbox(), 0));
    CHECK(stream.iterations() == 28);
    CHECK(g.weights.complete());
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(g.weights(i, i) == 0);
        for (std::size_t j = i + 1; j < 8; ++j) {
            CHECK(g.weights(i, j) == g.weights(j, i));
            CHECK(g.weights(i, j) == mirror.next_weight());
        }
    }
}

TEST_CASE("apply_tour permutes only the window", "[pipeline]") {
    std::mt19937_64 rng(3);
    const auto s = oracle::random_permutation(rng);
    const auto g = make_window(s, 40);

    CHECK(apply_tour(s, g, Tour{}) == s);

    const Tour t({0, 5, 2, 7, 3, 1, 4, 6});
    const auto out = apply_tour(s, g, t);
    CHECK(is_bijective(out));
    for (std::size_t x = 0; x < 256; ++x) {
        if (x < 40 || x >= 48) {
            REQUIRE(out[x] == s[x]);
        }
    }
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(out[40 + k] == s[40 + t[k]]);
    }
    std::multiset<int> before(s.begin() + 40, s.begin() + 48);
    std::multiset<int> after(out.begin() + 40, out.begin() + 48);
    CHECK(before == after);
}

TEST_CASE("middle and final passes touch only their windows", "[pipeline]") {
    std::mt19937_64 rng(4);
    const auto s = oracle::random_permutation(rng);

    ChaosStream stream(ChaosParams(0.55, 0.21));
    const auto mid = middle_pass(s, stream);
    CHECK(stream.iterations() == 28);
    CHECK(is_bijective(mid));
    for (std::size_t x = 0; x < 256; ++x) {
        if (x < 124 || x > 131) {
            REQUIRE(mid[x] == s[x]);
        }
    }

    const auto last = final_pass(mid, stream);
    CHECK(stream.iterations() == 56);
    CHECK(is_bijective(last));
    for (std::size_t x = 0; x < 248; ++x) {
        REQUIRE(last[x] == mid[x]);
    }
}

TEST_CASE("generate_sbox end to end", "[pipeline]") {
    const ChaosParams params(0.3, 0.499);
    const auto [sbox, trace] = generate_sbox(params);

    CHECK(is_bijective(sbox));
    CHECK(trace.final_sbox == sbox);
    REQUIRE(trace.records.size() == kTotalSubGraphs);
    REQUIRE(trace.snapshots.size() == kTotalSubGraphs);
    CHECK(trace.total_iterations == 1000 + trace.initial_draws + 34 * 28);

    SBox prev = trace.initial_sbox;
    for (std::size_t k = 0; k < trace.records.size(); ++k) {
        const auto& rec = trace.records[k];
        CHECK(rec.index == k);
        CHECK(rec.stream_end - rec.stream_begin == 28);
        const std::size_t first = k < 32 ? 8 * k : (k == 32 ? 124 : 248);
        CHECK(rec.graph.positions[0] == first);
        CHECK(rec.cost == tour_cost(rec.graph.weights, rec.tour));

        const auto& snap = trace.snapshots[k];
        REQUIRE(is_bijective(snap));
        for (std::size_t x = 0; x < 256; ++x) {
            if (x < first || x >= first + 8) {
                REQUIRE(snap[x] == prev[x]);
            }
        }
        CHECK(snap == apply_tour(prev, rec.graph, rec.tour));
        prev = snap;
    }

    // weight draws continue one trajectory
    for (std::size_t k = 1; k < trace.records.size(); ++k) {
        CHECK(trace.records[k].stream_begin == trace.records[k - 1].stream_end);
    }
    CHECK(trace.records.front().stream_begin == 1000 + trace.initial_draws);

    const auto again = generate_sbox(ChaosParams::from_hex(params.x0_hex(), params.p_hex()));
    CHECK(again.sbox == sbox);
    CHECK(again.trace == trace);
}

TEST_CASE("generation over many seeds stays bijective", "[pipeline][property]") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int i = 0; i < 20; ++i) {
        const ChaosParams params(u(rng), u(rng));
        const auto result = generate_sbox(params);
        REQUIRE(is_bijective(result.sbox));
        REQUIRE(result.trace.records.size() == 34);
    }
}
