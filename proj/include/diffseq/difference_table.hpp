#pragma once

#include <vector>

#include "diffseq/exact.hpp"
#include "diffseq/polynomial.hpp"

namespace diffseq {

// Forward difference triangle: rows[0] is the input sequence u_k, and
// rows[m+1][j] = rows[m][j+1] - rows[m][j], so row m holds the mth
// differences and has (len(rows[0]) - m) entries.
struct DifferenceTable {
  std::vector<std::vector<Rational>> rows;
  Rational step = Rational(1);  // grid spacing when sampled from a polynomial
};

// Throws std::invalid_argument when max_order >= seq.size().
DifferenceTable difference_table(const std::vector<Rational>& seq, unsigned max_order);

// Samples u_j = P(x0 + j*step) for j = 0..count-1.
std::vector<Rational> sample_polynomial(const Polynomial& p, const Rational& x0,
                                        const Rational& step, unsigned count);

}  // namespace diffseq
