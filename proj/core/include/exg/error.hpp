#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exg {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid Dynkin type or unknown group/subgroup/class name.
struct InvalidTypeError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of an operation
// (t < 2, r < 2, the (2,2) prime pair, centralizer smaller than a torus, ...).
struct DomainError : Error {
  using Error::Error;
};

// A lookup hit a (group, label, characteristic) combination with no curated row.
// Lookups never guess; callers that can fall back must do so explicitly.
struct NotCuratedError : Error {
  using Error::Error;
};

// An exhaustive enumeration was refused because it exceeds the configured budget.
struct BudgetError : Error {
  BudgetError(std::uint64_t required, std::uint64_t budget, const std::string& what_arg)
      : Error(what_arg), required(required), budget(budget) {}
  std::uint64_t required;
  std::uint64_t budget;
};

// Inputs that contradict each other (e.g. a fixed-space dimension coming out negative).
struct InconsistencyError : Error {
  using Error::Error;
};

}  // namespace exg
