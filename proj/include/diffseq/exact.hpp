#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace diffseq {

using Integer = mpz_class;
using Rational = mpq_class;

// Row n of Pascal's triangle, C(n,0) .. C(n,n), exact and cached per n.
// Thread-safe; the returned reference stays valid for the process lifetime.
const std::vector<Integer>& binomial_row(unsigned n);

const Integer& binomial(unsigned n, unsigned k);

Integer factorial(unsigned n);

Integer pow_integer(const Integer& base, unsigned long e);

Rational pow_rational(const Rational& base, long e);

// Parses "n", "-n", or "n/d" (d > 0 after canonicalization).
Rational parse_rational(const std::string& text);

// "n" when the value is integral, "n/d" otherwise.
std::string format_rational(const Rational& q);

// floor(N^{1/n}) and whether the root is exact, for N >= 0, n >= 1.
std::pair<Integer, bool> integer_nth_root(const Integer& value, unsigned n);

}  // namespace diffseq
