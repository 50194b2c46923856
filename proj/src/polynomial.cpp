#include "diffseq/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace diffseq {

Polynomial::Polynomial(std::vector<Rational> leading_first) : coeffs_(std::move(leading_first)) {
  if (coeffs_.empty()) coeffs_.push_back(Rational(0));
  // Trim leading zeros so leading() != 0 unless the polynomial is zero.
  std::size_t first = 0;
  while (first + 1 < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first > 0) coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(first));
}

Polynomial Polynomial::monomial(Rational c, unsigned degree) {
  std::vector<Rational> coeffs(degree + 1, Rational(0));
  coeffs[0] = std::move(c);
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = coeffs_[0];
  for (std::size_t i = 1; i < coeffs_.size(); ++i) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() == 0) return Polynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  const unsigned n = degree();
  for (unsigned i = 0; i < n; ++i) out[i] = coeffs_[i] * Rational(static_cast<long>(n - i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative(unsigned order) const {
  Polynomial p = *this;
  for (unsigned i = 0; i < order; ++i) p = p.derivative();
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const unsigned deg = std::max(a.degree(), b.degree());
  std::vector<Rational> out(deg + 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    out[deg - a.degree() + i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
    out[deg - b.degree() + i] += b.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  if (s == 0) return Polynomial();
  std::vector<Rational> out = p.coeffs_;
  for (auto& c : out) c *= s;
  return Polynomial(std::move(out));
}

namespace {

struct Term {
  Rational coeff;
  unsigned power = 0;
};

// One term: [sign] [rational-coefficient] ['*'] ['x' ['^' power]]
Term parse_term(const std::string& term) {
  Term out;
  std::size_t pos = 0;
  Rational sign(1);
  while (pos < term.size() && (term[pos] == '+' || term[pos] == '-')) {
    if (term[pos] == '-') sign = -sign;
    ++pos;
  }
  std::size_t num_end = pos;
  while (num_end < term.size() && (std::isdigit(static_cast<unsigned char>(term[num_end])) ||
                                   term[num_end] == '/')) {
    ++num_end;
  }
  Rational coeff(1);
  if (num_end > pos) coeff = parse_rational(term.substr(pos, num_end - pos));
  pos = num_end;
  if (pos < term.size() && term[pos] == '*') ++pos;
  if (pos == term.size()) {
    out.coeff = sign * coeff;
    return out;
  }
  if (term[pos] != 'x' && term[pos] != 'X') {
    throw std::invalid_argument("bad polynomial term: '" + term + "'");
  }
  ++pos;
  out.power = 1;
  if (pos < term.size()) {
    if (term[pos] != '^') throw std::invalid_argument("bad polynomial term: '" + term + "'");
    ++pos;
    out.power = static_cast<unsigned>(std::stoul(term.substr(pos)));
    pos = term.size();
  }
  out.coeff = sign * coeff;
  return out;
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  if (compact.empty()) throw std::invalid_argument("empty polynomial spec");
  std::map<unsigned, Rational> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= compact.size(); ++i) {
    if (i == compact.size() || ((compact[i] == '+' || compact[i] == '-') && compact[i - 1] != '^' &&
                                compact[i - 1] != '/' && compact[i - 1] != '*')) {
      Term t = parse_term(compact.substr(start, i - start));
      terms[t.power] += t.coeff;
      start = i;
    }
  }
  const unsigned deg = terms.rbegin()->first;
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  for (const auto& [power, coeff] : terms) coeffs[deg - power] = coeff;
  return Polynomial(std::move(coeffs));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const unsigned deg = degree();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const unsigned power = deg - static_cast<unsigned>(i);
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (mag != 1 || power == 0) out += format_rational(mag);
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

}  // namespace diffseq
