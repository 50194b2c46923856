#include "diffseq/difference_table.hpp"

#include <stdexcept>

namespace diffseq {

DifferenceTable difference_table(const std::vector<Rational>& seq, unsigned max_order) {
  if (seq.empty()) throw std::invalid_argument("difference_table: empty sequence");
  if (max_order >= seq.size()) {
    throw std::invalid_argument("difference_table: order " + std::to_string(max_order) +
                                " needs more than " + std::to_string(seq.size()) + " samples");
  }
  DifferenceTable table;
  table.rows.reserve(max_order + 1);
  table.rows.push_back(seq);
  for (unsigned m = 1; m <= max_order; ++m) {
    const auto& prev = table.rows.back();
    std::vector<Rational> row(prev.size() - 1);
    for (std::size_t j = 0; j + 1 < prev.size(); ++j) row[j] = prev[j + 1] - prev[j];
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<Rational> sample_polynomial(const Polynomial& p, const Rational& x0,
                                        const Rational& step, unsigned count) {
  std::vector<Rational> out;
  out.reserve(count);
  Rational x = x0;
  for (unsigned j = 0; j < count; ++j) {
    out.push_back(p.eval(x));
    x += step;
  }
  return out;
}

}  // namespace diffseq
