#include "diffseq/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace diffseq {

void Dyadic::normalize() {
  if (mant_ == 0) {
    exp2_ = 0;
    return;
  }
  const mp_bitcnt_t low = mpz_scan1(mant_.get_mpz_t(), 0);
  if (low > 0) {
    mpz_fdiv_q_2exp(mant_.get_mpz_t(), mant_.get_mpz_t(), low);
    exp2_ += static_cast<long>(low);
  }
}

Dyadic Dyadic::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("Dyadic::from_double: non-finite value");
  if (value == 0.0) return Dyadic();
  // mpq_set_d is exact: the denominator is a power of two.
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  const long den_bits = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 2)) - 1;
  return Dyadic(q.get_num(), -den_bits);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long e = std::min(a.exp2_, b.exp2_);
  Integer am = a.mant_;
  Integer bm = b.mant_;
  if (a.exp2_ > e) mpz_mul_2exp(am.get_mpz_t(), am.get_mpz_t(), static_cast<mp_bitcnt_t>(a.exp2_ - e));
  if (b.exp2_ > e) mpz_mul_2exp(bm.get_mpz_t(), bm.get_mpz_t(), static_cast<mp_bitcnt_t>(b.exp2_ - e));
  return Dyadic(am + bm, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mant_ * b.mant_, a.exp2_ + b.exp2_);
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  const Dyadic d = a - b;
  return d.sign();
}

Integer Dyadic::floor() const {
  Integer r;
  if (exp2_ >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp2_));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp2_));
  }
  return r;
}

Integer Dyadic::ceil() const {
  Integer r;
  if (exp2_ >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(exp2_));
  } else {
    mpz_cdiv_q_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp2_));
  }
  return r;
}

Rational Dyadic::to_rational() const {
  Rational q(mant_);
  if (exp2_ >= 0) {
    mpz_mul_2exp(q.get_num().get_mpz_t(), q.get_num().get_mpz_t(), static_cast<mp_bitcnt_t>(exp2_));
  } else {
    mpz_mul_2exp(q.get_den().get_mpz_t(), q.get_den().get_mpz_t(), static_cast<mp_bitcnt_t>(-exp2_));
  }
  q.canonicalize();
  return q;
}

double Dyadic::to_double() const { return to_rational().get_d(); }

Dyadic Dyadic::div(const Dyadic& a, const Dyadic& b, unsigned bits, RoundMode mode) {
  if (b.is_zero()) throw std::domain_error("Dyadic::div: division by zero");
  if (a.is_zero()) return Dyadic();
  // Shift the numerator until the integer quotient carries >= bits+1
  // significant bits; fdiv/cdiv then give the directed result.
  const long size_a = static_cast<long>(mpz_sizeinbase(a.mant_.get_mpz_t(), 2));
  const long size_b = static_cast<long>(mpz_sizeinbase(b.mant_.get_mpz_t(), 2));
  long shift = static_cast<long>(bits) + size_b - size_a + 1;
  if (shift < 0) shift = 0;
  Integer num = a.mant_;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  Integer q;
  if (mode == RoundMode::Down) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mant_.get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mant_.get_mpz_t());
  }
  return Dyadic(q, a.exp2_ - b.exp2_ - shift);
}

std::string Dyadic::to_decimal(unsigned digits, RoundMode mode) const {
  Integer scaled = mant_;
  Integer pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, digits);
  scaled *= pow10;
  if (exp2_ >= 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(exp2_));
  } else if (mode == RoundMode::Down) {
    mpz_fdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp2_));
  } else {
    mpz_cdiv_q_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(-exp2_));
  }
  const bool negative = scaled < 0;
  Integer mag = negative ? Integer(-scaled) : scaled;
  std::string body = mag.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  std::string out;
  if (negative) out.push_back('-');
  out.append(body, 0, body.size() - digits);
  if (digits > 0) {
    out.push_back('.');
    out.append(body, body.size() - digits, digits);
  }
  return out;
}

}  // namespace diffseq
