#pragma once

#include <stdexcept>
#include <string>

namespace sboxtsp {

/// Malformed textual input (S-box grids, hex doubles, JSON).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a domain constraint.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The chaotic trajectory failed to collect all 256 byte values.
class IterationCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sboxtsp
