#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace diffseq {

// Thrown when a fractional-part request cannot be answered because the
// enclosing interval contains an integer: the exact value may or may not
// be that integer, and only an exact criterion can decide.
class StraddlesInteger : public std::runtime_error {
 public:
  StraddlesInteger(mpz_class floor_lo, mpz_class floor_hi)
      : std::runtime_error("interval straddles the integer " + floor_hi.get_str()),
        floor_lo_(std::move(floor_lo)),
        floor_hi_(std::move(floor_hi)) {}

  const mpz_class& floor_lo() const { return floor_lo_; }
  const mpz_class& floor_hi() const { return floor_hi_; }

 private:
  mpz_class floor_lo_;
  mpz_class floor_hi_;
};

// Conditional gap bound requires (2^{1/n} - 1) * j < 1.
class HypothesisViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Brute-force search ranges exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace diffseq
