#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hnpoly {

// Bad input data or violated precondition. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A dense enumeration would exceed the configured budget.
class BudgetError : public ValidationError {
public:
  BudgetError(const std::string& what, std::uint64_t required)
      : ValidationError(what), required_budget(required) {}
  std::uint64_t required_budget;
};

// One counterexample to a caller-asserted hypothesis on a pair (m, n).
struct PairViolation {
  std::string kind;
  std::int64_t m = 0;
  std::int64_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

class HypothesisViolationError : public ValidationError {
public:
  HypothesisViolationError(const std::string& what, std::vector<PairViolation> v)
      : ValidationError(what), violations(std::move(v)) {}
  std::vector<PairViolation> violations;
};

}  // namespace hnpoly
