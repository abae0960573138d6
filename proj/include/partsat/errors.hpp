#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace partsat {

/// Base class of all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed DIMACS or matrix-grid input.
struct ParseError : Error {
  using Error::Error;
};

/// An exhaustive-enumeration operation was asked to handle more variables
/// than its configured limit.
struct LimitExceeded : Error {
  using Error::Error;
};

/// decide() would have to check more than `budget` candidate assignments
/// (the degeneracy factor 2^n_eq dominates).
struct BudgetExceeded : Error {
  BudgetExceeded(std::int64_t n_eq_, std::uint64_t budget_)
      : Error("candidate budget exceeded: 2^" + std::to_string(n_eq_) +
              " achievers > budget " + std::to_string(budget_)),
        n_eq(n_eq_), budget(budget_) {}
  std::int64_t n_eq;
  std::uint64_t budget;
};

/// A generator exhausted its retry bound without producing a valid instance.
struct GenerationError : Error {
  using Error::Error;
};

} // namespace partsat
