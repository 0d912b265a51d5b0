#pragma once

#include <stdexcept>
#include <string>

namespace mhg {

/// A gamma or Pochhammer argument hit a nonpositive integer, or a series
/// parameter makes a reachable denominator vanish.
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

/// Invalid parameter combination (negative alpha, bad grid, ...).
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A partition is not contained in the required box or superpartition.
struct ContainmentError : std::invalid_argument {
  explicit ContainmentError(const std::string& what) : std::invalid_argument(what) {}
};

/// Pairwise exact division by (x_i - x_j) left a remainder: the input
/// polynomial was not symmetric in the pair.
struct SymmetryError : std::domain_error {
  explicit SymmetryError(const std::string& what) : std::domain_error(what) {}
};

/// An exact operation received an input that was silently truncated.
struct ExactnessError : std::logic_error {
  explicit ExactnessError(const std::string& what) : std::logic_error(what) {}
};

/// A recursion denominator vanished for the given parameter value.
struct SingularParameterError : std::domain_error {
  explicit SingularParameterError(const std::string& what) : std::domain_error(what) {}
};

/// Truncated-kernel accuracy is insufficient at a sampled point.
struct AccuracyError : std::runtime_error {
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

/// Command-line / suite configuration error (exit code 2).
struct UsageError : std::invalid_argument {
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace mhg
