#pragma once

#include <stdexcept>
#include <string>

namespace fishnets {

enum class ErrorCategory {
  Shape,
  Config,
  InvalidInput,
  EmptyAggregation,
  IllConditioned,
  Divergence,
  Infeasible,
  UndefinedMetric,
  Numeric,
  Io,
  NoResults,
  Usage,
};

const char* to_string(ErrorCategory c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(std::string(to_string(category)) + ": " + message),
        category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class IllConditionedError : public Error {
 public:
  IllConditionedError(double condition_estimate, const std::string& message)
      : Error(ErrorCategory::IllConditioned, message),
        condition_estimate_(condition_estimate) {}

  double condition_estimate() const noexcept { return condition_estimate_; }

 private:
  double condition_estimate_;
};

[[noreturn]] inline void raise(ErrorCategory category, const std::string& message) {
  throw Error(category, message);
}

inline const char* to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Shape: return "shape";
    case ErrorCategory::Config: return "config";
    case ErrorCategory::InvalidInput: return "invalid-input";
    case ErrorCategory::EmptyAggregation: return "empty-aggregation";
    case ErrorCategory::IllConditioned: return "ill-conditioned";
    case ErrorCategory::Divergence: return "divergence";
    case ErrorCategory::Infeasible: return "infeasible";
    case ErrorCategory::UndefinedMetric: return "undefined-metric";
    case ErrorCategory::Numeric: return "numeric";
    case ErrorCategory::Io: return "io";
    case ErrorCategory::NoResults: return "no-results";
    case ErrorCategory::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace fishnets
