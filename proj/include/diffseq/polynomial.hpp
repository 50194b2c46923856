#pragma once

#include <string>
#include <vector>

#include "diffseq/exact.hpp"

namespace diffseq {

// Dense univariate polynomial over the rationals, stored leading-first:
// coefficients()[0] * x^degree + ... + coefficients()[degree].
// The zero polynomial is the single coefficient 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{Rational(0)} {}
  explicit Polynomial(std::vector<Rational> leading_first);

  // Monomial c * x^degree.
  static Polynomial monomial(Rational c, unsigned degree);

  // Terms like "2x^3 + 7x - 1", "x^2", "-3/2x^4 + x". Coefficients are
  // integers or fractions; '*' between coefficient and x is optional.
  static Polynomial parse(const std::string& text);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const Rational& leading() const { return coeffs_.front(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational eval(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial derivative(unsigned order) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace diffseq
