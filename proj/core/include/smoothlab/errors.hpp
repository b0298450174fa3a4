#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smoothlab {

/// Adaptive integration exhausted its panel budget; carries the best estimate.
class AccuracyNotReached : public std::runtime_error {
public:
  AccuracyNotReached(const std::string& what, double best)
      : std::runtime_error(what), best_estimate(best) {}
  double best_estimate;
};

/// An integrand returned a non-finite value; carries the offending node.
class EvaluationError : public std::runtime_error {
public:
  EvaluationError(const std::string& what, double at)
      : std::runtime_error(what), node(at) {}
  double node;
};

/// Iterative solver stopped making progress; carries the best iterate found.
class SolverStall : public std::runtime_error {
public:
  SolverStall(const std::string& what, std::vector<double> coeffs, double value)
      : std::runtime_error(what), best_coeffs(std::move(coeffs)), best_value(value) {}
  std::vector<double> best_coeffs;
  double best_value;
};

class NonIntegrableWeight : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class AliasingRisk : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ClassParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class DegreeTruncationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class InsufficientData : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedOracle : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace smoothlab
