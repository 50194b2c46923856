#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace diffseq {

// Equally spaced samples values[i] = f(x + i*k), i = 0..n, feeding the
// nth-derivative estimate at x0. The grid carries the user-declared
// analyticity interval (domain_lo, domain_hi); validation requires the hull
// of {x0} and all nodes to lie inside it, since the mean-value points of the
// remainder live in that hull.
struct SampleGrid {
  double x = 0.0;
  double x0 = 0.0;
  double k = 0.0;
  int n = 1;
  std::vector<double> values;
  double domain_lo = -std::numeric_limits<double>::infinity();
  double domain_hi = std::numeric_limits<double>::infinity();

  void validate() const;

  static SampleGrid sample(const std::function<double(double)>& f, double x, double x0, double k,
                           int n);
};

// Caller-declared bound M >= sup |f^{(n+1)}| over the hull of {x0} and the
// grid nodes. There is no automatic estimation: a silently guessed M would
// invalidate the bound.
struct RemainderData {
  double sup_next_derivative = 0.0;
};

struct DerivativeEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  int n = 1;
};

// (1/(-k)^n) * sum_{i=0}^{n} C(n,i) (-1)^i values[i].
//
// The alternating sum is accumulated exactly over the dyadic lifts of the
// double samples; only the final division rounds (<= 2^-50 relative, well
// below the sampling noise the remainder bound absorbs). For polynomials of
// degree <= n with exactly representable samples the result is the analytic
// nth derivative up to one rounding to double.
double estimate_nth_derivative(const SampleGrid& grid);

// (M / ((n+1)! |k|^n)) * sum_{i=0}^{n} C(n,i) |x - x0 + i*k|^{n+1},
// rounded upward. Whenever M is valid, |estimate - f^{(n)}(x0)| is at most
// this value. For x = x0 the i = 0 term vanishes, so the sum effectively
// starts at i = 1.
double remainder_bound(const SampleGrid& grid, const RemainderData& rem);

DerivativeEstimate estimate_with_bound(const SampleGrid& grid, const RemainderData& rem);

struct ConvergenceRow {
  double k = 0.0;
  double estimate = 0.0;
  double bound = 0.0;
};

// One row per step: grid sampled at x = x0, estimate, and the remainder
// bound under the declared M. Rows are independent and computed in parallel.
std::vector<ConvergenceRow> convergence_study(const std::function<double(double)>& f, double x0,
                                              int n, const std::vector<double>& k_schedule,
                                              const RemainderData& rem);

}  // namespace diffseq
