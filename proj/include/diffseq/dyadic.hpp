#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "diffseq/exact.hpp"

namespace diffseq {

enum class RoundMode { Down, Up };  // toward -inf / toward +inf

// Exact binary rational mant * 2^exp2, normalized so the mantissa is odd
// (or zero). Addition, subtraction and multiplication are exact; only
// division rounds, and it rounds in a caller-chosen direction. This is what
// makes the interval layer's enclosures sound.
class Dyadic {
 public:
  Dyadic() : mant_(0), exp2_(0) {}
  Dyadic(long value) : mant_(value), exp2_(0) { normalize(); }
  explicit Dyadic(Integer value) : mant_(std::move(value)), exp2_(0) { normalize(); }
  Dyadic(Integer mant, long exp2) : mant_(std::move(mant)), exp2_(exp2) { normalize(); }

  // Exact for every finite double.
  static Dyadic from_double(double value);

  const Integer& mantissa() const { return mant_; }
  long exponent() const { return exp2_; }

  bool is_zero() const { return mant_ == 0; }
  int sign() const { return mpz_sgn(mant_.get_mpz_t()); }
  bool is_integer() const { return exp2_ >= 0 || mant_ == 0; }

  Dyadic operator-() const { return Dyadic(-mant_, exp2_); }
  Dyadic abs() const { return sign() < 0 ? -*this : *this; }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  Dyadic mul_pow2(long e) const { return is_zero() ? *this : Dyadic(mant_, exp2_ + e); }

  // Exact three-way comparison of the represented values.
  static int cmp(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

  Integer floor() const;
  Integer ceil() const;

  Rational to_rational() const;
  double to_double() const;  // nearest double, for display only

  // a/b rounded in the given direction; the result carries at least
  // `bits` significant bits, so the directed error is < 2^{1-bits}*|a/b|.
  static Dyadic div(const Dyadic& a, const Dyadic& b, unsigned bits, RoundMode mode);

  // Fixed-point decimal with `digits` fractional digits, rounded in the
  // given direction. Deterministic: same value, same string.
  std::string to_decimal(unsigned digits, RoundMode mode) const;

 private:
  void normalize();

  Integer mant_;
  long exp2_;
};

}  // namespace diffseq
