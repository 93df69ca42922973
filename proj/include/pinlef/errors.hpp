#pragma once

#include <stdexcept>
#include <string>

namespace pinlef {

/// Malformed caller input: dimension mismatch, out-of-range residue, bad model parameters.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A domain invariant does not hold for otherwise well-formed data
/// (one-sided vanishing cycle, ill-defined enhancement, ...).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pinlef
