#include "oracles.hpp"

#include <sboxtsp/tsp.hpp>

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

using namespace sboxtsp;

namespace {

WeightMatrix uniform(int v) {
    WeightMatrix w;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            w.set(i, j, v);
        }
    }
    return w;
}

} // namespace

TEST_CASE("tour_cost of uniform matrices", "[tsp]") {
    CHECK(tour_cost(uniform(5), Tour{}) == 40);
    CHECK(tour_cost(uniform(1), Tour{}) == 8);
    CHECK(tour_cost(uniform(5), Tour({0, 3, 1, 6, 2, 7, 5, 4})) == 40);
}

TEST_CASE("tour_cost equals a hand summation", "[tsp]") {
    std::mt19937_64 rng(11);
    const auto w = oracle::random_weights(rng);
    const Tour t({0, 4, 2, 7, 1, 3, 6, 5});
    const int manual = w(0, 4) + w(4, 2) + w(2, 7) + w(7, 1) + w(1, 3) + w(3, 6) + w(6, 5) + w(5, 0);
    CHECK(tour_cost(w, t) == manual);
}

TEST_CASE("uniform weights resolve to the identity ring", "[tsp]") {
    CHECK(solve_tsp(uniform(17)) == Tour{});
}

TEST_CASE("distance-along-a-line matrix closes into the ring", "[tsp][oracle]") {
    WeightMatrix w;
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = i + 1; j < 8; ++j) {
            w.set(i, j, static_cast<int>(j - i));
        }
    }
    w.set(0, 7, 1);
    const auto t = solve_tsp(w);
    const auto ref = oracle::brute_force_tsp(w);
    CHECK(t == Tour{});
    CHECK(tour_cost(w, t) == 8);
    CHECK(ref.cost == 8);
    CHECK(ref.order == Tour{}.order());
}

TEST_CASE("solve_tsp matches brute force on random matrices", "[tsp][oracle][property]") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        // narrow weight ranges force many ties
        const int hi = (trial % 3 == 0) ? 3 : 255;
        const auto w = oracle::random_weights(rng, 1, hi);
        const auto t = solve_tsp(w);
        const auto ref = oracle::brute_force_tsp(w);
        REQUIRE(tour_cost(w, t) == ref.cost);
        REQUIRE(t.order() == ref.order);
    }
}

TEST_CASE("solve_tsp output is canonical and stable", "[tsp][property]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto w = oracle::random_weights(rng, 1, 4);
        const auto t = solve_tsp(w);
        REQUIRE(t[0] == 0);
        REQUIRE(t[1] < t[7]);
        REQUIRE(solve_tsp(w) == t);
    }
}

TEST_CASE("cost is invariant under reversal", "[tsp][property]") {
    std::mt19937_64 rng(6);
    std::array<std::uint8_t, 8> perm{0, 1, 2, 3, 4, 5, 6, 7};
    for (int trial = 0; trial < 200; ++trial) {
        const auto w = oracle::random_weights(rng);
        std::shuffle(perm.begin() + 1, perm.end(), rng);
        const auto t = Tour::canonical(perm);
        REQUIRE(cycle_cost(w, t.reversed()) == tour_cost(w, t));
        REQUIRE(cycle_cost(w, perm) == tour_cost(w, t));
    }
}

TEST_CASE("Tour rejects non-canonical or invalid orders", "[tsp]") {
    CHECK_THROWS_AS(Tour({1, 0, 2, 3, 4, 5, 6, 7}), ValidationError);
    CHECK_THROWS_AS(Tour({0, 7, 2, 3, 4, 5, 6, 1}), ValidationError);
    CHECK_THROWS_AS(Tour({0, 1, 1, 3, 4, 5, 6, 7}), ValidationError);
    CHECK_THROWS_AS(Tour({0, 1, 2, 3, 4, 5, 6, 8}), ValidationError);
    CHECK(Tour::canonical({3, 4, 5, 6, 7, 0, 1, 2}) == Tour{});
    CHECK(Tour::canonical({0, 7, 6, 5, 4, 3, 2, 1}) == Tour{});
}

TEST_CASE("WeightMatrix enforces its invariants", "[tsp]") {
    WeightMatrix w;
    CHECK_FALSE(w.complete());
    CHECK_THROWS_AS(w.set(0, 0, 5), ValidationError);
    CHECK_THROWS_AS(w.set(0, 1, 0), ValidationError);
    CHECK_THROWS_AS(w.set(0, 1, 256), ValidationError);
    CHECK_THROWS_AS(w.set(0, 8, 3), ValidationError);
    w.set(2, 5, 9);
    CHECK(w(5, 2) == 9);
    CHECK(uniform(3).complete());

    auto rows = uniform(3).rows();
    rows[1][2] = 4;
    CHECK_THROWS_AS(WeightMatrix::from_rows(rows), ValidationError);
    CHECK(WeightMatrix::from_rows(uniform(3).rows()) == uniform(3));
}
