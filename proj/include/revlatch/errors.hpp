#pragma once

#include <stdexcept>
#include <string>

namespace revlatch {

/// Malformed input: bad expression syntax, arity mismatch, unknown symbol,
/// invalid netlist document. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a hard resource bound (gate arity, search size).
/// Maps to CLI exit code 3.
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace revlatch
