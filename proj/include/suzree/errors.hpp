#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace suzree {

/// Input outside the mathematical domain of an operation.
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// The cycle-finding loop ran out of iterations on some cofactor.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(mpz_class cofactor, std::uint64_t budget)
      : std::runtime_error("factorization budget of " + std::to_string(budget) +
                           " iterations exceeded on cofactor " + cofactor.get_str()),
        cofactor_(std::move(cofactor)),
        budget_(budget) {}

  const mpz_class& cofactor() const noexcept { return cofactor_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  mpz_class cofactor_;
  std::uint64_t budget_;
};

/// A value that must lie in Z[sqrt(v)] did not. Always an arithmetic bug.
struct ProjectionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Loaded class-adjacency data contradicts a structural constraint.
struct DataValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace suzree
