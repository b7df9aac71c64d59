#pragma once

#include <stdexcept>
#include <string>

namespace dsmt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (range caps, malformed constraints,
// mixed lattices, invalid mass vectors).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Dempster's orthogonal sum does not exist: all conjunctive mass lands on the
// empty set.
class FullContradiction : public Error {
 public:
  explicit FullContradiction(double conflict)
      : Error("full contradiction between sources (k12 = " + std::to_string(conflict) +
              "); Dempster's rule is undefined, use the DSm rule instead"),
        conflict_(conflict) {}

  double conflict() const noexcept { return conflict_; }

 private:
  double conflict_;
};

// A belief matrix that is not unit lower triangular was handed to the
// forward-substitution inverse.
class NotTriangular : public Error {
 public:
  using Error::Error;
};

}  // namespace dsmt
