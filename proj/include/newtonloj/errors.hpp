#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace newtonloj {

// Malformed polynomial input. position is a 0-based character offset.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// An operation was called outside its domain (zero polynomial, axis-parallel
// segment where a slope is required, unmet hypotheses, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Numerical failure inside the branch oracle.
class OracleError : public std::runtime_error {
public:
    enum class Kind {
        LeadingCoefficientVanishes,
        RootSolverFailed,
        AmbiguousBranch,
        ResidualTooLarge,
        PrecisionExhausted,
    };

    OracleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace newtonloj
