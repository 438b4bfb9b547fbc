#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cages {

// Error taxonomy shared by all modules. Everything derives from std
// exception types so callers can catch coarsely or precisely.

struct NotAPrimePower : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct TooLarge : std::length_error {
    using std::length_error::length_error;
};

struct InvalidVertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct VertexNotFound : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Raised when an operation needs coordinate labels or a field context that
// the graph does not carry (e.g. graphs loaded from foreign files).
struct MissingContext : std::logic_error {
    using std::logic_error::logic_error;
};

struct MapNotTotal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MapNotInjective : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadDistance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadXi : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadQ : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A removal-set check failed: either an internal closed-form cross-check or
// the perfect-domination verification itself.
struct PdsViolation : std::logic_error {
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

}  // namespace cages
