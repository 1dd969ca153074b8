#pragma once

#include "errors.hpp"

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <string_view>

namespace sboxtsp {

inline constexpr std::size_t kSBoxSize = 256;
inline constexpr std::size_t kSBoxBits = 8;

/// An 8x8 substitution table indexed by input byte. Bijectivity is not
/// enforced here so that arbitrary tables can be analyzed; generation code
/// checks it explicitly.
using SBox = std::array<std::uint8_t, kSBoxSize>;

inline SBox identity_sbox() noexcept {
    SBox s{};
    std::iota(s.begin(), s.end(), std::uint8_t{0});
    return s;
}

inline bool is_bijective(std::span<const std::uint8_t, kSBoxSize> s) noexcept {
    std::bitset<kSBoxSize> seen;
    for (auto v : s) {
        if (seen.test(v)) {
            return false;
        }
        seen.set(v);
    }
    return true;
}

// ---------------------------------------------------------------------------
// Text grid: 16 rows of 16 whitespace-separated values, row-major. Lines whose
// first non-blank character is '#' are comments; blank lines are ignored.

enum class GridRadix { decimal, hex };

namespace detail {

inline int parse_cell(std::string_view tok, GridRadix radix) {
    if (radix == GridRadix::hex && (tok.starts_with("0x") || tok.starts_with("0X"))) {
        tok.remove_prefix(2);
    }
    if (tok.empty() || tok.size() > 3) {
        return -1;
    }
    int v = 0;
    for (char c : tok) {
        int d = -1;
        if (c >= '0' && c <= '9') {
            d = c - '0';
        } else if (radix == GridRadix::hex && c >= 'a' && c <= 'f') {
            d = c - 'a' + 10;
        } else if (radix == GridRadix::hex && c >= 'A' && c <= 'F') {
            d = c - 'A' + 10;
        }
        if (d < 0) {
            return -1;
        }
        v = v * (radix == GridRadix::hex ? 16 : 10) + d;
    }
    return v <= 255 ? v : -1;
}

} // namespace detail

inline SBox parse_grid(std::string_view text, GridRadix radix = GridRadix::decimal) {
    SBox s{};
    std::size_t count = 0;
    std::size_t row = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        if (row == 16) {
            throw ParseError("line " + std::to_string(line_no) + ": more than 16 data rows");
        }
        std::istringstream cells(line);
        std::string tok;
        std::size_t col = 0;
        while (cells >> tok) {
            const int v = detail::parse_cell(tok, radix);
            if (v < 0) {
                throw ParseError("line " + std::to_string(line_no) + ": invalid value '" + tok + "'");
            }
            if (col == 16) {
                throw ParseError("line " + std::to_string(line_no) + ": more than 16 values");
            }
            s[count++] = static_cast<std::uint8_t>(v);
            ++col;
        }
        if (col != 16) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 16 values, got " +
                             std::to_string(col));
        }
        ++row;
    }
    if (count != kSBoxSize) {
        throw ParseError("expected 256 values, got " + std::to_string(count));
    }
    return s;
}

inline std::string format_grid(std::span<const std::uint8_t, kSBoxSize> s,
                               GridRadix radix = GridRadix::decimal) {
    std::string out;
    out.reserve(16 * 16 * 4);
    char cell[8];
    for (std::size_t r = 0; r < 16; ++r) {
        for (std::size_t c = 0; c < 16; ++c) {
            const unsigned v = s[r * 16 + c];
            if (radix == GridRadix::hex) {
                std::snprintf(cell, sizeof cell, "%02x", v);
            } else {
                std::snprintf(cell, sizeof cell, "%3u", v);
            }
            if (c != 0) {
                out += ' ';
            }
            out += cell;
        }
        out += '\n';
    }
    return out;
}

} // namespace sboxtsp
