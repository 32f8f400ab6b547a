#pragma once

#include <stdexcept>
#include <string>

namespace apmads {

/// Malformed argument (non-finite coordinate, out-of-range probability, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested standard deviation outside (0, sigma_max].
class InvalidSigma : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The cache holds no feasible evaluated point.
class NoIncumbent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A p-value was requested for a point with no feasible history.
class UndefinedComparison : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownProblem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace apmads
