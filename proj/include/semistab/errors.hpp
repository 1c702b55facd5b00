#pragma once

#include <stdexcept>
#include <string>

namespace semistab {

/// Search exceeded its configured node/step budget. Soundness over
/// availability: callers never get a silently truncated answer.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotSharpError : std::runtime_error {
  explicit NotSharpError(const std::string& what) : std::runtime_error(what) {}
};

/// Bounded congruence closure ran out of degree budget before saturating.
struct WordProblemUndecided : std::runtime_error {
  explicit WordProblemUndecided(const std::string& what) : std::runtime_error(what) {}
};

struct NotIntegralError : std::runtime_error {
  explicit NotIntegralError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAUnitError : std::runtime_error {
  explicit NotAUnitError(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

struct SupportOverlapError : std::invalid_argument {
  explicit SupportOverlapError(const std::string& what) : std::invalid_argument(what) {}
};

struct ElementNotInMonoidError : std::runtime_error {
  explicit ElementNotInMonoidError(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration budgets. Exceeding a cap raises ResourceLimitError.
struct SearchLimits {
  std::uint64_t max_nodes = 1'000'000;  // completion / enumeration nodes
  int word_degree_cap = 16;             // bounded congruence closure
};

inline SearchLimits& default_limits() {
  static SearchLimits limits;
  return limits;
}

}  // namespace semistab
