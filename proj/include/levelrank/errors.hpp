#pragma once

#include <stdexcept>
#include <string>

namespace levelrank {

/// Malformed textual input (partition shorthand, affine permutation notation, JSON).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its domain: m = 0, a non-core where a core
/// is required, runner-count mismatch, non-coprime (l, m), and so on.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration would exceed its configured bound.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verifier observed data contradicting a block-bijection theorem. This always
/// indicates a bug somewhere in the pipeline.
class TheoremViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace levelrank
