#pragma once

#include <stdexcept>

namespace revpal {

// Bad argument values: out-of-range parameters, malformed input, unknown ids.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Alphabet violations: a letter outside the expected alphabet, or an
// operation that is only defined on binary words applied to a wider one.
class AlphabetError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// A requested construction would exceed the configured length cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A decomposition cannot be laid out over the target word at all.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace revpal
