#pragma once

#include <random>

#include "diffseq/exact.hpp"
#include "diffseq/interval.hpp"

namespace testutil {

using diffseq::Integer;
using diffseq::Rational;

// Independent decimal-scaled oracle: floor(value^{1/n} * 10^digits) computed
// with nothing but integer root extraction. Deliberately avoids the dyadic
// interval code path it is used to check.
inline Integer decimal_root_floor(const Integer& value, unsigned n, unsigned digits) {
  Integer pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
  Integer scaled;
  mpz_pow_ui(scaled.get_mpz_t(), pow10.get_mpz_t(), n);
  scaled *= value;
  Integer root;
  mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), n);
  return root;
}

inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// [t, t+1] / 10^digits as exact rational bounds on value^{1/n}.
inline std::pair<Rational, Rational> decimal_root_bounds(const Integer& value, unsigned n,
                                                         unsigned digits) {
  Integer t = decimal_root_floor(value, n, digits);
  Integer pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
  return {ratio(t, pow10), ratio(t + 1, pow10)};
}

inline bool interval_contains(const diffseq::RealInterval& iv, const Rational& q) {
  return iv.lo().to_rational() <= q && q <= iv.hi().to_rational();
}

struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  long integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(engine);
  }

  Rational rational(long max_abs_num = 1000000, long max_den = 1000000) {
    return ratio(Integer(integer(-max_abs_num, max_abs_num)), Integer(integer(1, max_den)));
  }

  Rational nonzero_rational(long max_abs_num = 1000000, long max_den = 1000000) {
    for (;;) {
      Rational q = rational(max_abs_num, max_den);
      if (q != 0) return q;
    }
  }
};

}  // namespace testutil
