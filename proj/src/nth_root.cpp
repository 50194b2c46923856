#include <map>
#include <mutex>
#include <stdexcept>

#include "diffseq/exact.hpp"

namespace diffseq {

const std::vector<Integer>& binomial_row(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Pascal recurrence row by row, exact integer additions only.
  unsigned from = 0;
  std::vector<Integer> row{Integer(1)};
  if (!cache.empty()) {
    auto last = std::prev(cache.end());
    if (last->first < n) {
      from = last->first;
      row = last->second;
    }
  }
  for (unsigned m = from + 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1);
    next[0] = 1;
    next[m] = 1;
    for (unsigned k = 1; k < m; ++k) next[k] = row[k - 1] + row[k];
    row = std::move(next);
  }
  return cache.emplace(n, std::move(row)).first->second;
}

const Integer& binomial(unsigned n, unsigned k) {
  if (k > n) throw std::out_of_range("binomial: k > n");
  return binomial_row(n)[k];
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer pow_integer(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw std::domain_error("pow_rational: zero to negative power");
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), mag);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), mag);
  if (e < 0) mpq_inv(r.get_mpq_t(), r.get_mpq_t());
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::pair<Integer, bool> integer_nth_root(const Integer& value, unsigned n) {
  if (n < 1) throw std::domain_error("integer_nth_root: n must be >= 1");
  if (value < 0) throw std::domain_error("integer_nth_root: negative radicand");
  Integer root;
  Integer rem;
  mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), value.get_mpz_t(), n);
  return {std::move(root), rem == 0};
}

}  // namespace diffseq
