#pragma once

#include <stdexcept>
#include <string>

namespace tqft {

// Malformed input: bad JSON, wrong dimensions, unknown preset names.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structure failed an algebraic requirement (singular pairing, missing unit,
// TQFT operation on a non-commutative algebra).
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size guard refused the request. Guards can be raised by the caller.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series coefficient was requested beyond the precision that is known.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The Laurent fit did not reproduce the surplus coefficients.
class PolynomialityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tqft
