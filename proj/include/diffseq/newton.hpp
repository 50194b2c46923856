#pragma once

#include <vector>

#include "diffseq/exact.hpp"
#include "diffseq/polynomial.hpp"

namespace diffseq {

// The alternating binomial sum sum_{i=0}^{n} C(n,i) (-1)^i P(x - k*i),
// i.e. the nth forward difference with step k of the grid ending at x.
// For degree(P) = n this is the constant leading(P) * k^n * n! for every x;
// for degree(P) < n it is zero. Throws std::invalid_argument when k = 0.
Rational binomial_nth_difference(const Polynomial& p, const Rational& x, const Rational& k,
                                 unsigned n);

struct NewtonSample {
  Rational x;
  Rational value;
  bool pass;
};

struct NewtonReport {
  unsigned order = 0;
  Rational expected;  // leading(P) * k^n * n!
  std::vector<NewtonSample> samples;
  bool all_pass = true;
};

// Checks binomial_nth_difference(P, x, k, degree(P)) == leading * k^n * n!
// at every sample point. Requires degree(P) >= 1 and k != 0.
NewtonReport verify_newton_theorem(const Polynomial& p, const Rational& k,
                                   const std::vector<Rational>& x_samples);

}  // namespace diffseq
