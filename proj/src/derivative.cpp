#include "diffseq/derivative.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diffseq/dyadic.hpp"
#include "diffseq/exact.hpp"

namespace diffseq {

void SampleGrid::validate() const {
  if (k == 0.0) throw std::invalid_argument("SampleGrid: zero step");
  if (!std::isfinite(x) || !std::isfinite(x0) || !std::isfinite(k)) {
    throw std::invalid_argument("SampleGrid: non-finite geometry");
  }
  if (n < 1) throw std::invalid_argument("SampleGrid: order must be >= 1");
  if (values.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("SampleGrid: need exactly n+1 samples");
  }
  double lo = std::min(x0, x);
  double hi = std::max(x0, x);
  const double last = x + n * k;
  lo = std::min(lo, last);
  hi = std::max(hi, last);
  if (!(lo > domain_lo && hi < domain_hi)) {
    throw std::invalid_argument("SampleGrid: hull of nodes and x0 leaves the declared interval");
  }
}

SampleGrid SampleGrid::sample(const std::function<double(double)>& f, double x, double x0,
                              double k, int n) {
  SampleGrid grid;
  grid.x = x;
  grid.x0 = x0;
  grid.k = k;
  grid.n = n;
  grid.values.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) grid.values.push_back(f(x + i * k));
  grid.validate();
  return grid;
}

double estimate_nth_derivative(const SampleGrid& grid) {
  grid.validate();
  const unsigned n = static_cast<unsigned>(grid.n);
  const auto& row = binomial_row(n);
  Dyadic sum;
  for (unsigned i = 0; i <= n; ++i) {
    Dyadic term = Dyadic(row[i]) * Dyadic::from_double(grid.values[i]);
    sum = (i % 2 == 0) ? sum + term : sum - term;
  }
  Dyadic denom = Dyadic::from_double(-grid.k);
  Dyadic denom_pow(1);
  for (unsigned i = 0; i < n; ++i) denom_pow *= denom;
  if (sum.is_zero()) return 0.0;
  return Dyadic::div(sum, denom_pow, 96, RoundMode::Down).to_double();
}

double remainder_bound(const SampleGrid& grid, const RemainderData& rem) {
  grid.validate();
  if (rem.sup_next_derivative < 0.0 || !std::isfinite(rem.sup_next_derivative)) {
    throw std::invalid_argument("remainder_bound: M must be finite and >= 0");
  }
  if (rem.sup_next_derivative == 0.0) return 0.0;
  const unsigned n = static_cast<unsigned>(grid.n);
  const auto& row = binomial_row(n);
  const Dyadic dx = Dyadic::from_double(grid.x) - Dyadic::from_double(grid.x0);
  const Dyadic dk = Dyadic::from_double(grid.k);
  Dyadic sum;
  for (unsigned i = 0; i <= n; ++i) {
    Dyadic node = (dx + Dyadic(static_cast<long>(i)) * dk).abs();
    Dyadic node_pow(1);
    for (unsigned e = 0; e <= n; ++e) node_pow *= node;
    sum += Dyadic(row[i]) * node_pow;
  }
  if (sum.is_zero()) return 0.0;
  Dyadic k_abs = dk.abs();
  Dyadic denom(factorial(n + 1));
  for (unsigned i = 0; i < n; ++i) denom *= k_abs;
  Dyadic bound = Dyadic::from_double(rem.sup_next_derivative) *
                 Dyadic::div(sum, denom, 96, RoundMode::Up);
  // One upward nudge absorbs the final rounding to double.
  double out = bound.to_double();
  return std::nextafter(out, std::numeric_limits<double>::infinity());
}

DerivativeEstimate estimate_with_bound(const SampleGrid& grid, const RemainderData& rem) {
  return DerivativeEstimate{estimate_nth_derivative(grid), remainder_bound(grid, rem), grid.n};
}

std::vector<ConvergenceRow> convergence_study(const std::function<double(double)>& f, double x0,
                                              int n, const std::vector<double>& k_schedule,
                                              const RemainderData& rem) {
  std::vector<ConvergenceRow> rows(k_schedule.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < k_schedule.size(); ++i) {
    SampleGrid grid = SampleGrid::sample(f, x0, x0, k_schedule[i], n);
    rows[i] = ConvergenceRow{k_schedule[i], estimate_nth_derivative(grid),
                             remainder_bound(grid, rem)};
  }
  return rows;
}

}  // namespace diffseq
