#pragma once

#include <stdexcept>
#include <string>

namespace mevac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value violates a domain-type invariant (non-finite, non-positive, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// 1 + n*beta <= 0: the boosted constants have a vanishing or negative denominator.
class DegenerateBoost : public Error {
 public:
  using Error::Error;
};

/// A beta grid that cannot support a log-log fit.
class DegenerateGrid : public Error {
 public:
  using Error::Error;
};

/// No wavevector survived the cutoff filter.
class EmptyModeSet : public Error {
 public:
  using Error::Error;
};

/// Ratio requested against a vanishing denominator.
class DivisionDegenerate : public Error {
 public:
  using Error::Error;
};

/// Finite-difference probe outside its admissible range.
class DegenerateProbe : public Error {
 public:
  using Error::Error;
};

}  // namespace mevac
