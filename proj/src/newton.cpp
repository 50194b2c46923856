#include "diffseq/newton.hpp"

#include <stdexcept>

namespace diffseq {

Rational binomial_nth_difference(const Polynomial& p, const Rational& x, const Rational& k,
                                 unsigned n) {
  if (k == 0) throw std::invalid_argument("binomial_nth_difference: zero step");
  if (n < 1) throw std::invalid_argument("binomial_nth_difference: order must be >= 1");
  const auto& row = binomial_row(n);
  Rational sum(0);
  Rational node = x;
  for (unsigned i = 0; i <= n; ++i) {
    Rational term = Rational(row[i]) * p.eval(node);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    node -= k;
  }
  return sum;
}

NewtonReport verify_newton_theorem(const Polynomial& p, const Rational& k,
                                   const std::vector<Rational>& x_samples) {
  const unsigned n = p.degree();
  if (n < 1 || p.is_zero()) {
    throw std::invalid_argument("verify_newton_theorem: degree must be >= 1");
  }
  if (k == 0) throw std::invalid_argument("verify_newton_theorem: zero step");
  NewtonReport report;
  report.order = n;
  report.expected = p.leading() * pow_rational(k, n) * Rational(factorial(n));
  for (const Rational& x : x_samples) {
    Rational value = binomial_nth_difference(p, x, k, n);
    const bool pass = value == report.expected;
    report.all_pass = report.all_pass && pass;
    report.samples.push_back(NewtonSample{x, std::move(value), pass});
  }
  return report;
}

}  // namespace diffseq
