#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rieszprob {

/// Malformed input text (rational syntax, spec file structure).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A domain-type invariant is violated at construction time
/// (weights not summing to 1, overlapping partition blocks, ...).
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values over different sample spaces were combined.
struct SpaceMismatchError : std::invalid_argument {
    SpaceMismatchError() : std::invalid_argument("operands belong to different sample spaces") {}
};

/// An element with a zero coordinate was asked for its multiplicative
/// inverse. Carries the first offending coordinate as witness.
struct NotInvertibleError : std::runtime_error {
    std::size_t index;
    std::string label;

    NotInvertibleError(std::size_t idx, std::string lbl)
        : std::runtime_error("element is not invertible: zero coordinate at outcome '" + lbl +
                             "' (index " + std::to_string(idx) + ")"),
          index(idx),
          label(std::move(lbl)) {}
};

/// Classical conditioning on an event of probability zero.
struct ConditioningOnNullError : std::runtime_error {
    ConditioningOnNullError() : std::runtime_error("conditioning event has probability zero") {}
};

}  // namespace rieszprob
