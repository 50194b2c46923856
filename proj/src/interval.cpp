#include "diffseq/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffseq {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Less: return "less";
    case Verdict::Greater: return "greater";
    case Verdict::Equal: return "equal";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

RealInterval::RealInterval(Dyadic lo, Dyadic hi, unsigned precision_bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), precision_bits_(precision_bits) {
  if (lo_ > hi_) throw std::invalid_argument("RealInterval: lo > hi");
}

RealInterval RealInterval::point(Dyadic value, unsigned precision_bits) {
  return RealInterval(value, value, precision_bits);
}

bool RealInterval::contains(const Rational& value) const {
  return lo_.to_rational() <= value && value <= hi_.to_rational();
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  return RealInterval(a.lo_ + b.lo_, a.hi_ + b.hi_, std::min(a.precision_bits_, b.precision_bits_));
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  return RealInterval(a.lo_ - b.hi_, a.hi_ - b.lo_, std::min(a.precision_bits_, b.precision_bits_));
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  // Dyadic products are exact, so min/max of the four corners is an exact
  // enclosure.
  Dyadic c1 = a.lo_ * b.lo_;
  Dyadic c2 = a.lo_ * b.hi_;
  Dyadic c3 = a.hi_ * b.lo_;
  Dyadic c4 = a.hi_ * b.hi_;
  Dyadic lo = std::min({c1, c2, c3, c4});
  Dyadic hi = std::max({c1, c2, c3, c4});
  return RealInterval(std::move(lo), std::move(hi), std::min(a.precision_bits_, b.precision_bits_));
}

RealInterval operator+(const RealInterval& a, const Dyadic& s) {
  return RealInterval(a.lo_ + s, a.hi_ + s, a.precision_bits_);
}

RealInterval operator-(const RealInterval& a, const Dyadic& s) {
  return RealInterval(a.lo_ - s, a.hi_ - s, a.precision_bits_);
}

RealInterval reciprocal(const RealInterval& a, unsigned bits) {
  if (a.lo().sign() <= 0 && a.hi().sign() >= 0) {
    throw std::domain_error("reciprocal: interval contains zero");
  }
  Dyadic one(1);
  Dyadic lo = Dyadic::div(one, a.hi(), bits, RoundMode::Down);
  Dyadic hi = Dyadic::div(one, a.lo(), bits, RoundMode::Up);
  return RealInterval(std::move(lo), std::move(hi), bits);
}

RealInterval rational_interval(const Rational& value, unsigned bits) {
  const Dyadic num((Integer(value.get_num())));
  const Dyadic den((Integer(value.get_den())));
  Dyadic lo = Dyadic::div(num, den, bits, RoundMode::Down);
  Dyadic hi = Dyadic::div(num, den, bits, RoundMode::Up);
  return RealInterval(std::move(lo), std::move(hi), bits);
}

RealInterval nth_root_interval(const Integer& value, unsigned n, unsigned bits) {
  if (n < 1) throw std::domain_error("nth_root_interval: n must be >= 1");
  if (value < 0) throw std::domain_error("nth_root_interval: negative radicand");
  if (bits < 2) bits = 2;
  auto [root, exact] = integer_nth_root(value, n);
  if (exact) return RealInterval::point(Dyadic(root), bits);
  // floor((value * 2^{n*s})^{1/n}) * 2^{-s} brackets the root from below
  // with width exactly 2^{-s}.
  const long s = static_cast<long>(bits) - 1;
  Integer scaled = value;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(n) * s);
  Integer lo_mant;
  mpz_root(lo_mant.get_mpz_t(), scaled.get_mpz_t(), n);
  return RealInterval(Dyadic(lo_mant, -s), Dyadic(lo_mant + 1, -s), bits);
}

RealInterval nth_root_interval(const Rational& value, unsigned n, unsigned bits) {
  if (n < 1) throw std::domain_error("nth_root_interval: n must be >= 1");
  if (value < 0) throw std::domain_error("nth_root_interval: negative radicand");
  if (value.get_den() == 1) return nth_root_interval(Integer(value.get_num()), n, bits);
  if (bits < 2) bits = 2;
  const long s = static_cast<long>(bits) - 1;
  // lo = floor((num * 2^{n*s} / den)^{1/n}) * 2^{-s}. Flooring the inner
  // quotient first keeps lo^n <= value; (lo_mant+1)^n overshoots the
  // un-floored quotient, so hi^n >= value.
  Integer num = value.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(n) * s);
  Integer quotient;
  mpz_fdiv_q(quotient.get_mpz_t(), num.get_mpz_t(), value.get_den().get_mpz_t());
  Integer lo_mant;
  mpz_root(lo_mant.get_mpz_t(), quotient.get_mpz_t(), n);
  Dyadic lo(lo_mant, -s);
  if (pow_rational(lo.to_rational(), n) == value) return RealInterval::point(lo, bits);
  return RealInterval(std::move(lo), Dyadic(lo_mant + 1, -s), bits);
}

namespace {

Verdict decide(const RealInterval& a, const RealInterval& b) {
  if (a.hi() < b.lo()) return Verdict::Less;
  if (b.hi() < a.lo()) return Verdict::Greater;
  if (a.is_point() && b.is_point() && a.lo() == b.lo()) return Verdict::Equal;
  return Verdict::Undecided;
}

}  // namespace

Verdict compare_static(const RealInterval& a, const RealInterval& b) { return decide(a, b); }

Verdict compare(RealInterval a, RealInterval b, const Refiner& refine_a,
                const Refiner& refine_b, const PrecisionPolicy& policy) {
  Verdict v = decide(a, b);
  unsigned bits = std::max({policy.start_bits, a.precision_bits(), b.precision_bits()});
  while (v == Verdict::Undecided && bits < policy.max_bits) {
    bits = std::min(bits * 2, policy.max_bits);
    if (refine_a) a = refine_a(bits);
    if (refine_b) b = refine_b(bits);
    v = decide(a, b);
    if (!refine_a && !refine_b) break;
  }
  return v;
}

FracParts fractional_part(const RealInterval& a) {
  Integer floor_lo = a.lo().floor();
  Integer floor_hi = a.hi().floor();
  if (floor_lo != floor_hi) throw StraddlesInteger(floor_lo, floor_hi);
  Dyadic offset(floor_lo);
  return FracParts{RealInterval(a.lo() - offset, a.hi() - offset, a.precision_bits()),
                   std::move(floor_lo)};
}

FracParts fractional_part(const RealInterval& a, const Refiner& refine,
                          const PrecisionPolicy& policy) {
  RealInterval cur = a;
  unsigned bits = std::max(policy.start_bits, a.precision_bits());
  for (;;) {
    try {
      return fractional_part(cur);
    } catch (const StraddlesInteger&) {
      if (!refine || bits >= policy.max_bits) throw;
      bits = std::min(bits * 2, policy.max_bits);
      cur = refine(bits);
    }
  }
}

}  // namespace diffseq
