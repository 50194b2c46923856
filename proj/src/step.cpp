#include "diffseq/step.hpp"

#include <stdexcept>

namespace diffseq {

StepValue step(const Branch& branch, std::int64_t p, unsigned bits) {
  if (p < 0) throw std::invalid_argument("step: p must be >= 0");
  const unsigned n = static_cast<unsigned>(branch.power);
  RealInterval z_next = nth_root_interval(branch_value_pow(branch, p + 1), n, bits);
  RealInterval z_cur = nth_root_interval(branch_value_pow(branch, p), n, bits);
  StepValue out;
  out.p = p;
  out.interval = z_next - z_cur;
  // Once 1 < Step < 2 is certified the floor is 1 and the fractional part
  // is just the interval shifted down.
  if (out.interval.lo() > Dyadic(1) && out.interval.hi() < Dyadic(2)) {
    out.frac = out.interval - Dyadic(1);
  }
  return out;
}

RealInterval step_limit(const Rational& alpha, int n, unsigned bits) {
  if (n < 2) throw std::domain_error("step_limit: power must be >= 2");
  if (alpha <= 0 || alpha > 1) throw std::domain_error("step_limit: alpha must be in (0, 1]");
  const Rational inner = Rational(1) + pow_rational(Rational(1) / (Rational(1) + alpha),
                                                    static_cast<long>(n));
  return nth_root_interval(inner, static_cast<unsigned>(n), bits);
}

RealInterval step_upper_root(int n, std::int64_t coeff, unsigned bits) {
  if (n < 2) throw std::domain_error("step_upper_root: power must be >= 2");
  if (coeff < 1) throw std::domain_error("step_upper_root: coefficient must be >= 1");
  return nth_root_interval(Integer(static_cast<long>(coeff + 1)), static_cast<unsigned>(n), bits);
}

}  // namespace diffseq
