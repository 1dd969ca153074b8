#pragma once

// Cryptographic scoring of 8x8 S-boxes: bijectivity, Walsh-spectrum
// nonlinearity per coordinate function, the strict avalanche dependence
// matrix, and differential uniformity from the difference distribution table.
//
// Bit order is LSB-first everywhere: coordinate j is bit j of the output,
// SAC row i flips input bit i, SAC column j observes output bit j.

#include "sbox.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>

namespace sboxtsp {

/// Truth table of a Boolean function on 8 bits; entries are 0 or 1.
using BooleanFunctionTable = std::array<std::uint8_t, kSBoxSize>;

/// Walsh coefficients indexed by mask w.
using WalshSpectrum = std::array<int, kSBoxSize>;

using SacMatrix = std::array<std::array<double, kSBoxBits>, kSBoxBits>;

using DifferenceTable = std::array<std::array<std::uint16_t, kSBoxSize>, kSBoxSize>;

inline BooleanFunctionTable coordinate_function(const SBox& s, std::size_t j) {
    if (j >= kSBoxBits) {
        throw std::out_of_range("coordinate index must be in [0,7]");
    }
    BooleanFunctionTable f{};
    for (std::size_t x = 0; x < kSBoxSize; ++x) {
        f[x] = static_cast<std::uint8_t>((s[x] >> j) & 1U);
    }
    return f;
}

/// In-place fast Walsh-Hadamard butterfly.
inline void fwht(std::span<int, kSBoxSize> a) noexcept {
    for (std::size_t h = 1; h < kSBoxSize; h <<= 1) {
        for (std::size_t i = 0; i < kSBoxSize; i += h << 1) {
            for (std::size_t k = i; k < i + h; ++k) {
                const int u = a[k];
                const int v = a[k + h];
                a[k] = u + v;
                a[k + h] = u - v;
            }
        }
    }
}

/// coeffs[w] = sum_x (-1)^(f(x) xor <x,w>), computed by FWHT on (-1)^f(x).
inline WalshSpectrum walsh_spectrum(const BooleanFunctionTable& f) noexcept {
    WalshSpectrum c{};
    for (std::size_t x = 0; x < kSBoxSize; ++x) {
        c[x] = f[x] ? -1 : 1;
    }
    fwht(c);
    return c;
}

inline int max_abs_walsh(const WalshSpectrum& c) noexcept {
    int m = 0;
    for (int v : c) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

/// 2^(n-1) * (1 - 2^-n * max|W|) = 128 - max|W| / 2 for n = 8.
inline int nonlinearity(const BooleanFunctionTable& f) {
    const int peak = max_abs_walsh(walsh_spectrum(f));
    if (peak % 2 != 0) {
        throw std::logic_error("Walsh coefficient of odd magnitude");
    }
    const int nl = 128 - peak / 2;
    if (2 * nl != 256 - peak) {
        throw std::logic_error("nonlinearity divisibility check failed");
    }
    return nl;
}

inline std::array<int, kSBoxBits> coordinate_nonlinearities(const SBox& s) {
    std::array<int, kSBoxBits> nl{};
    for (std::size_t j = 0; j < kSBoxBits; ++j) {
        nl[j] = nonlinearity(coordinate_function(s, j));
    }
    return nl;
}

/// Integer counts behind the SAC matrix: counts[i][j] = #{x : bit j of
/// S(x) xor S(x xor 2^i) is set}.
inline std::array<std::array<int, kSBoxBits>, kSBoxBits> sac_counts(const SBox& s) noexcept {
    std::array<std::array<int, kSBoxBits>, kSBoxBits> counts{};
    for (std::size_t i = 0; i < kSBoxBits; ++i) {
        for (std::size_t x = 0; x < kSBoxSize; ++x) {
            const unsigned d = s[x] ^ s[x ^ (std::size_t{1} << i)];
            for (std::size_t j = 0; j < kSBoxBits; ++j) {
                counts[i][j] += static_cast<int>((d >> j) & 1U);
            }
        }
    }
    return counts;
}

inline SacMatrix sac_matrix(const SBox& s) noexcept {
    const auto counts = sac_counts(s);
    SacMatrix m{};
    for (std::size_t i = 0; i < kSBoxBits; ++i) {
        for (std::size_t j = 0; j < kSBoxBits; ++j) {
            m[i][j] = counts[i][j] / static_cast<double>(kSBoxSize);
        }
    }
    return m;
}

inline double sac_average(const SBox& s) noexcept {
    const auto counts = sac_counts(s);
    long total = 0;
    for (const auto& row : counts) {
        total = std::accumulate(row.begin(), row.end(), total);
    }
    return static_cast<double>(total) / (kSBoxSize * kSBoxBits * kSBoxBits);
}

/// ddt[dx][dy] = #{x : S(x) xor S(x xor dx) = dy}. 128 KiB, so heap-allocated.
inline std::unique_ptr<DifferenceTable> difference_distribution_table(const SBox& s) {
    auto ddt = std::make_unique<DifferenceTable>();
    for (auto& row : *ddt) {
        row.fill(0);
    }
    for (std::size_t dx = 0; dx < kSBoxSize; ++dx) {
        for (std::size_t x = 0; x < kSBoxSize; ++x) {
            ++(*ddt)[dx][s[x] ^ s[x ^ dx]];
        }
    }
    return ddt;
}

struct DifferentialPeak {
    int count = 0;
    std::uint8_t dx = 0;
    std::uint8_t dy = 0;
};

/// Largest DDT entry over dx != 0 (all dy); first location in row-major order.
inline DifferentialPeak differential_peak(const DifferenceTable& ddt) noexcept {
    DifferentialPeak best;
    for (std::size_t dx = 1; dx < kSBoxSize; ++dx) {
        for (std::size_t dy = 0; dy < kSBoxSize; ++dy) {
            if (ddt[dx][dy] > best.count) {
                best = {ddt[dx][dy], static_cast<std::uint8_t>(dx), static_cast<std::uint8_t>(dy)};
            }
        }
    }
    return best;
}

inline int differential_uniformity(const SBox& s) {
    return differential_peak(*difference_distribution_table(s)).count;
}

struct MetricsReport {
    bool bijective = false;
    std::array<int, kSBoxBits> nl{};
    int nl_min = 0;
    int nl_max = 0;
    double nl_mean = 0.0;
    SacMatrix sac{};
    double sac_avg = 0.0;
    int du = 0;
    std::pair<std::uint8_t, std::uint8_t> ddt_max_location{};
};

inline MetricsReport analyze(const SBox& s) {
    MetricsReport r;
    r.bijective = is_bijective(s);
    r.nl = coordinate_nonlinearities(s);
    const auto [lo, hi] = std::minmax_element(r.nl.begin(), r.nl.end());
    r.nl_min = *lo;
    r.nl_max = *hi;
    r.nl_mean = std::accumulate(r.nl.begin(), r.nl.end(), 0) / static_cast<double>(kSBoxBits);
    r.sac = sac_matrix(s);
    r.sac_avg = sac_average(s);
    const auto peak = differential_peak(*difference_distribution_table(s));
    r.du = peak.count;
    r.ddt_max_location = {peak.dx, peak.dy};
    return r;
}

} // namespace sboxtsp
