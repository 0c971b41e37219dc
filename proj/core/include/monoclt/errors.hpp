#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoclt {

// Error categories map onto CLI exit codes: validation -> 3,
// resource -> 2, numeric -> 4.
enum class ErrorCategory { validation, resource, numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}
  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

struct NonPositiveWeight : Error {
  explicit NonPositiveWeight(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct MassNotOne : Error {
  explicit MassNotOne(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct NonPositiveScale : Error {
  explicit NonPositiveScale(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct NonPositiveR : Error {
  explicit NonPositiveR(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct InvalidSpec : Error {
  explicit InvalidSpec(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct RealAxisInput : Error {
  explicit RealAxisInput(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct NonPositiveY : Error {
  explicit NonPositiveY(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct UnsortedGrid : Error {
  explicit UnsortedGrid(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct GridMismatch : Error {
  explicit GridMismatch(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct YOutOfRange : Error {
  explicit YOutOfRange(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct NotStandardized : Error {
  explicit NotStandardized(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct TooFewPoints : Error {
  explicit TooFewPoints(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct NonPositiveDistance : Error {
  explicit NonPositiveDistance(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct NegativeT : Error {
  explicit NegativeT(const std::string& msg)
      : Error(ErrorCategory::validation, msg) {}
};

struct AtomBudgetExceeded : Error {
  explicit AtomBudgetExceeded(const std::string& msg)
      : Error(ErrorCategory::resource, msg) {}
};

struct BracketFailure : Error {
  explicit BracketFailure(const std::string& msg)
      : Error(ErrorCategory::numeric, msg) {}
};

struct EpsilonTooLarge : Error {
  EpsilonTooLarge(const std::string& msg, double x_node)
      : Error(ErrorCategory::numeric, msg), node(x_node) {}
  double node;  // x-coordinate of the offending quadrature node
};

struct PoleHit : Error {
  PoleHit(const std::string& msg, std::size_t at_index)
      : Error(ErrorCategory::numeric, msg), index(at_index) {}
  std::size_t index;  // orbit index at which the pole was hit
};

struct NumericFailure : Error {
  explicit NumericFailure(const std::string& msg)
      : Error(ErrorCategory::numeric, msg) {}
};

}  // namespace monoclt
