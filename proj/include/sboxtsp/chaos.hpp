#pragma once

// Piece-wise linear chaotic map (PWLCM) and the byte/weight extraction
// rules used to drive S-box generation.
//
// Floating-point contract: all state arithmetic is IEEE-754 binary64 with
// round-to-nearest-even and no contraction (build with -ffp-contract=off).
// floor(x * 1e10) is taken on the double product and then converted to a
// 64-bit integer before any modulus.

#include "errors.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sboxtsp {

/// Value substituted when a step lands on 0 or 1.
inline constexpr double kBoundaryRepair = 0.5 - 1e-12;

/// Transient iterations discarded before any output is used.
inline constexpr std::uint64_t kDefaultBurnIn = 1000;

inline constexpr double kExtractScale = 1e10;

constexpr bool in_open_unit(double v) noexcept { return v > 0.0 && v < 1.0; }

/// One application of the map. Throws std::domain_error outside (0,1).
inline double pwlcm_step(double x, double p) {
    if (!in_open_unit(x) || !in_open_unit(p)) {
        throw std::domain_error("pwlcm_step: x and p must lie in (0,1)");
    }
    double next = (x <= p) ? x / p : (1.0 - x) / (1.0 - p);
    if (!in_open_unit(next)) {
        next = kBoundaryRepair;
    }
    return next;
}

/// floor(x * 1e10) as an exact integer.
inline std::uint64_t scaled_floor(double x) noexcept {
    return static_cast<std::uint64_t>(std::floor(x * kExtractScale));
}

inline std::uint8_t extract_byte(double x) noexcept {
    return static_cast<std::uint8_t>(scaled_floor(x) % 256U);
}

/// Edge weight in [1,255]: (floor(x * 1e10) mod 255) + 1.
inline std::uint8_t extract_weight(double x) noexcept {
    return static_cast<std::uint8_t>(scaled_floor(x) % 255U + 1U);
}

// ---------------------------------------------------------------------------
// Bit-exact double <-> hex text

inline std::string double_to_hex(double v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(v)));
    return std::string(buf, 16);
}

inline double double_from_hex(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) {
        text.remove_prefix(2);
    }
    if (text.size() != 16) {
        throw ParseError("expected 16 hex digits, got '" + std::string(text) + "'");
    }
    std::uint64_t bits = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), bits, 16);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError("invalid hex digits in '" + std::string(text) + "'");
    }
    return std::bit_cast<double>(bits);
}

/// Locale-independent decimal parse ('.' is always the separator).
inline double double_from_decimal(std::string_view text) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("invalid decimal number '" + std::string(text) + "'");
    }
    return v;
}

/// Shortest round-trip decimal rendering.
inline std::string double_to_decimal(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

// ---------------------------------------------------------------------------

/// Initial condition and control parameter, both strictly inside (0,1).
class ChaosParams {
public:
    ChaosParams(double x0, double p) : x0_(x0), p_(p) {
        if (!in_open_unit(x0) || !in_open_unit(p)) {
            throw ValidationError("chaos parameters must satisfy 0 < x0 < 1 and 0 < p < 1 (got x0=" +
                                  double_to_decimal(x0) + ", p=" + double_to_decimal(p) + ")");
        }
    }

    static ChaosParams from_hex(std::string_view x0_hex, std::string_view p_hex) {
        return {double_from_hex(x0_hex), double_from_hex(p_hex)};
    }

    double x0() const noexcept { return x0_; }
    double p() const noexcept { return p_; }
    std::string x0_hex() const { return double_to_hex(x0_); }
    std::string p_hex() const { return double_to_hex(p_); }

    /// Bitwise equality; NaN cannot occur because construction rejects it.
    friend bool operator==(const ChaosParams&, const ChaosParams&) = default;

private:
    double x0_;
    double p_;
};

/// A single evolving trajectory of the map. Not safe to step concurrently.
class ChaosStream {
public:
    explicit ChaosStream(ChaosParams params) noexcept : params_(params), x_(params.x0()) {}

    const ChaosParams& params() const noexcept { return params_; }
    double state() const noexcept { return x_; }
    std::uint64_t iterations() const noexcept { return n_; }

    double step() {
        x_ = pwlcm_step(x_, params_.p());
        ++n_;
        return x_;
    }

    /// Advances `count` steps, discarding every intermediate value.
    ChaosStream& burn_in(std::uint64_t count = kDefaultBurnIn) {
        for (std::uint64_t i = 0; i < count; ++i) {
            step();
        }
        return *this;
    }

    /// Step, then extract a byte from the new state.
    std::uint8_t next_byte() { return extract_byte(step()); }

    /// Step, then extract an edge weight in [1,255] from the new state.
    std::uint8_t next_weight() { return extract_weight(step()); }

    friend bool operator==(const ChaosStream&, const ChaosStream&) = default;

private:
    ChaosParams params_;
    double x_;
    std::uint64_t n_ = 0;
};

} // namespace sboxtsp
