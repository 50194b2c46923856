#include "diffseq/gaps.hpp"

#include <stdexcept>

#include "diffseq/step.hpp"

namespace diffseq {

std::int64_t min_gap(int n, std::int64_t coeff, const PrecisionPolicy& policy) {
  if (n < 2) throw std::domain_error("min_gap: power must be >= 2");
  if (coeff < 1) throw std::domain_error("min_gap: coefficient must be >= 1");
  const Integer radicand(static_cast<long>(coeff + 1));
  auto [root, exact] = integer_nth_root(radicand, static_cast<unsigned>(n));
  if (exact) {
    // (coeff+1)^{1/n} = root exactly; 1/(root-1) is rational.
    if (root <= 1) throw std::domain_error("min_gap: degenerate root");
    Rational g = Rational(1) / Rational(root - 1);
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), g.get_num().get_mpz_t(), g.get_den().get_mpz_t());
    return c.get_si();
  }
  unsigned bits = policy.start_bits;
  for (;;) {
    RealInterval denom = step_upper_root(n, coeff, bits) - Dyadic(1);
    if (denom.lo().sign() > 0) {
      RealInterval reciprocal_gap = reciprocal(denom, bits);
      Integer ceil_lo = reciprocal_gap.lo().ceil();
      Integer ceil_hi = reciprocal_gap.hi().ceil();
      // The root is irrational here, so no endpoint can be an exact integer;
      // equal ceilings certify the result.
      if (ceil_lo == ceil_hi) return ceil_lo.get_si();
    }
    if (bits >= policy.max_bits) {
      throw std::runtime_error("min_gap: precision cap reached at an integer boundary");
    }
    bits = std::min(bits * 2, policy.max_bits);
  }
}

std::int64_t fermat_y_bound(int n, const PrecisionPolicy& policy) {
  if (n < 3) throw std::domain_error("fermat_y_bound: power must be >= 3");
  // 2 is not a perfect nth power for n >= 2, so 1/(2^{1/n}-1) is irrational
  // and the largest integer strictly below it is ceil - 1.
  return min_gap(n, 1, policy) - 1;
}

std::int64_t conditional_gap_bound(int n, std::int64_t j, const PrecisionPolicy& policy) {
  if (n < 2) throw std::domain_error("conditional_gap_bound: power must be >= 2");
  if (j < 1) throw std::domain_error("conditional_gap_bound: j must be >= 1");
  unsigned bits = policy.start_bits;
  Verdict v = Verdict::Undecided;
  while (v == Verdict::Undecided) {
    RealInterval scaled =
        (step_upper_root(n, 1, bits) - Dyadic(1)) * RealInterval::point(Dyadic(j), bits);
    v = compare_static(scaled, RealInterval::point(Dyadic(1), bits));
    if (v == Verdict::Undecided) {
      if (bits >= policy.max_bits) break;
      bits = std::min(bits * 2, policy.max_bits);
    }
  }
  if (v != Verdict::Less) {
    throw HypothesisViolation("conditional_gap_bound: (2^{1/n} - 1) * j >= 1 for j = " +
                              std::to_string(j));
  }
  return min_gap(n, 1, policy) - j;
}

}  // namespace diffseq
