#pragma once

#include <stdexcept>
#include <string>

namespace mmatch {

// Root of every error the library raises. The CLI maps the concrete types
// to exit codes (input 2, hypothesis 3, cap 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text, out-of-range parameters, unknown family ids.
class InputError : public Error {
 public:
  using Error::Error;
};

// The vertex count of a graph exceeds the enumeration cap in force.
class CapExceeded : public Error {
 public:
  CapExceeded(int order, int cap)
      : Error("graph has " + std::to_string(order) +
              " vertices, enumeration cap is " + std::to_string(cap)),
        order_(order),
        cap_(cap) {}

  int order() const noexcept { return order_; }
  int cap() const noexcept { return cap_; }

 private:
  int order_;
  int cap_;
};

// A precondition of the dominant-root limit formula does not hold.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class NonUniqueDominantRoot : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

class ComplexDominantRoot : public HypothesisError {
 public:
  using HypothesisError::HypothesisError;
};

}  // namespace mmatch
