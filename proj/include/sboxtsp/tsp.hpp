#pragma once

// Exact minimum-cost Hamiltonian cycle on 8-node complete graphs.

#include "errors.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>

namespace sboxtsp {

inline constexpr std::size_t kGraphNodes = 8;
inline constexpr std::size_t kGraphEdges = kGraphNodes * (kGraphNodes - 1) / 2;

/// Symmetric 8x8 edge weights with a zero diagonal. A default-constructed
/// matrix is all zero ("unassigned"); assigned edges carry weights in [1,255].
class WeightMatrix {
public:
    using Row = std::array<int, kGraphNodes>;

    WeightMatrix() = default;

    /// Builds from a full matrix; throws ValidationError if it is not a
    /// symmetric, zero-diagonal matrix with off-diagonal entries in [1,255].
    static WeightMatrix from_rows(const std::array<Row, kGraphNodes>& rows) {
        WeightMatrix m;
        for (std::size_t i = 0; i < kGraphNodes; ++i) {
            if (rows[i][i] != 0) {
                throw ValidationError("weight matrix diagonal must be zero");
            }
            for (std::size_t j = i + 1; j < kGraphNodes; ++j) {
                if (rows[i][j] != rows[j][i]) {
                    throw ValidationError("weight matrix must be symmetric");
                }
                m.set(i, j, rows[i][j]);
            }
        }
        return m;
    }

    void set(std::size_t i, std::size_t j, int weight) {
        if (i >= kGraphNodes || j >= kGraphNodes || i == j) {
            throw ValidationError("weight matrix index out of range or on the diagonal");
        }
        if (weight < 1 || weight > 255) {
            throw ValidationError("edge weight must lie in [1,255], got " + std::to_string(weight));
        }
        w_[i][j] = weight;
        w_[j][i] = weight;
    }

    int operator()(std::size_t i, std::size_t j) const noexcept { return w_[i][j]; }

    const std::array<Row, kGraphNodes>& rows() const noexcept { return w_; }

    /// True once every off-diagonal edge has been assigned.
    bool complete() const noexcept {
        for (std::size_t i = 0; i < kGraphNodes; ++i) {
            for (std::size_t j = 0; j < kGraphNodes; ++j) {
                if ((i == j) != (w_[i][j] == 0)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    std::array<Row, kGraphNodes> w_{};
};

/// Hamiltonian cycle over nodes 0..7 in canonical form: starts at node 0 and
/// order[1] < order[7], so each undirected cycle has exactly one representation.
class Tour {
public:
    using Order = std::array<std::uint8_t, kGraphNodes>;

    /// The ring 0,1,...,7.
    Tour() noexcept { std::iota(order_.begin(), order_.end(), std::uint8_t{0}); }

    /// Throws ValidationError unless `order` is a canonical permutation.
    explicit Tour(const Order& order) : order_(order) {
        if (!is_permutation(order)) {
            throw ValidationError("tour must be a permutation of 0..7");
        }
        if (order[0] != 0 || order[1] > order[kGraphNodes - 1]) {
            throw ValidationError("tour is not canonical (need order[0]=0, order[1]<order[7])");
        }
    }

    /// Rotates and, if needed, reverses any cycle into canonical form.
    static Tour canonical(const Order& cycle) {
        if (!is_permutation(cycle)) {
            throw ValidationError("tour must be a permutation of 0..7");
        }
        const auto start = static_cast<std::size_t>(
            std::find(cycle.begin(), cycle.end(), std::uint8_t{0}) - cycle.begin());
        Order rotated{};
        for (std::size_t k = 0; k < kGraphNodes; ++k) {
            rotated[k] = cycle[(start + k) % kGraphNodes];
        }
        if (rotated[1] > rotated[kGraphNodes - 1]) {
            std::reverse(rotated.begin() + 1, rotated.end());
        }
        return Tour(rotated);
    }

    const Order& order() const noexcept { return order_; }
    std::uint8_t operator[](std::size_t k) const noexcept { return order_[k]; }

    /// The same cycle traversed backwards (not canonical in general).
    Order reversed() const noexcept {
        Order r = order_;
        std::reverse(r.begin() + 1, r.end());
        return r;
    }

    friend bool operator==(const Tour&, const Tour&) = default;
    friend auto operator<=>(const Tour&, const Tour&) = default;

private:
    static bool is_permutation(const Order& order) noexcept {
        std::array<bool, kGraphNodes> seen{};
        for (auto v : order) {
            if (v >= kGraphNodes || seen[v]) {
                return false;
            }
            seen[v] = true;
        }
        return true;
    }

    Order order_;
};

/// Sum of the 8 edge weights along a closed cycle (any node order).
inline int cycle_cost(const WeightMatrix& w, const Tour::Order& order) noexcept {
    int cost = 0;
    for (std::size_t k = 0; k < kGraphNodes; ++k) {
        cost += w(order[k], order[(k + 1) % kGraphNodes]);
    }
    return cost;
}

inline int tour_cost(const WeightMatrix& w, const Tour& t) noexcept {
    return cycle_cost(w, t.order());
}

/// Minimum-cost canonical tour. Candidates are visited in lexicographic order
/// and only a strictly cheaper one replaces the incumbent, so ties resolve to
/// the lexicographically smallest canonical order.
inline Tour solve_tsp(const WeightMatrix& w) {
    Tour::Order order{};
    std::iota(order.begin(), order.end(), std::uint8_t{0});
    Tour::Order best = order;
    int best_cost = cycle_cost(w, order);
    do {
        if (order[1] > order[kGraphNodes - 1]) {
            continue;
        }
        const int cost = cycle_cost(w, order);
        if (cost < best_cost) {
            best_cost = cost;
            best = order;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return Tour(best);
}

} // namespace sboxtsp
