#include <doctest.h>

#include <cmath>

#include "diffseq/derivative.hpp"
#include "diffseq/difference_table.hpp"
#include "diffseq/dyadic.hpp"
#include "diffseq/newton.hpp"
#include "diffseq/polynomial.hpp"
#include "helpers.hpp"

using namespace diffseq;
using testutil::Rng;

namespace {

// Exact double evaluation: nodes and coefficients are chosen dyadic and
// small, so Horner in double commits no rounding.
double eval_double(const Polynomial& p, double t) {
  double acc = 0.0;
  for (const Rational& c : p.coefficients()) acc = acc * t + c.get_d();
  return acc;
}

Rational to_rational(double v) { return Dyadic::from_double(v).to_rational(); }

}  // namespace

TEST_CASE("grid validation") {
  SampleGrid grid;
  grid.k = 0.0;
  grid.values = {0.0, 0.0};
  CHECK_THROWS_AS(grid.validate(), std::invalid_argument);
  grid.k = 0.5;
  grid.n = 2;
  CHECK_THROWS_AS(grid.validate(), std::invalid_argument);  // needs n+1 samples
  grid.values = {0.0, 0.0, 0.0};
  CHECK_NOTHROW(grid.validate());
  grid.domain_lo = -0.1;
  grid.domain_hi = 0.9;  // last node x + 2k = 1.0 falls outside
  CHECK_THROWS_AS(grid.validate(), std::invalid_argument);
}

TEST_CASE("polynomial grids reproduce the analytic derivative exactly") {
  SUBCASE("t^2 second derivative is 2 everywhere") {
    for (double x : {-3.0, 0.0, 1.5}) {
      auto grid = SampleGrid::sample([](double t) { return t * t; }, x, 0.25, 1.0, 2);
      CHECK(estimate_nth_derivative(grid) == 2.0);
    }
  }
  SUBCASE("t^3 third derivative is 6, x far from x0") {
    auto grid = SampleGrid::sample([](double t) { return t * t * t; }, 10.0, -5.0, 2.0, 3);
    CHECK(estimate_nth_derivative(grid) == 6.0);
    CHECK(remainder_bound(grid, RemainderData{0.0}) == 0.0);
  }
  SUBCASE("random dyadic polynomials of degree <= n") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = static_cast<int>(rng.integer(1, 4));
      std::vector<Rational> coeffs;
      for (int i = 0; i <= n; ++i) coeffs.emplace_back(rng.integer(-16, 16));
      Polynomial p{coeffs};
      const double x0 = rng.integer(-2, 2) * 0.5;
      const double x = rng.integer(-2, 2) * 0.5;
      const double k = rng.integer(1, 2) * 0.25;
      auto grid = SampleGrid::sample([&](double t) { return eval_double(p, t); }, x, x0, k, n);
      const Rational analytic = p.derivative(static_cast<unsigned>(n)).eval(to_rational(x0));
      CHECK(to_rational(estimate_nth_derivative(grid)) == analytic);
    }
  }
}

TEST_CASE("exp forward quotient matches the high-precision oracle") {
  // oracle: (e^k - 1)/k at k = 1e-3, evaluated to 39 digits
  const double expected = 1.000500166708341668;
  auto grid = SampleGrid::sample([](double t) { return std::exp(t); }, 0.0, 0.0, 1e-3, 1);
  CHECK(estimate_nth_derivative(grid) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("remainder bound: classical forward-difference case") {
  // x = x0, n = 1: bound reduces to M*k/2.
  const double m_decl = std::exp(1e-3);
  auto grid = SampleGrid::sample([](double t) { return std::exp(t); }, 0.0, 0.0, 1e-3, 1);
  const double bound = remainder_bound(grid, RemainderData{m_decl});
  CHECK(bound == doctest::Approx(m_decl * 1e-3 / 2).epsilon(1e-12));
  // frozen from 40-digit evaluation: bound ~ 5.005002500834e-4, error ~ 5.00166708e-4
  CHECK(bound == doctest::Approx(5.005002500833e-4).epsilon(1e-9));
  const double err = std::abs(estimate_nth_derivative(grid) - 1.0);
  CHECK(err == doctest::Approx(5.00166708341e-4).epsilon(1e-9));
  CHECK(err <= bound);
}

TEST_CASE("bound validity for exp and sin on random small grids") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.integer(1, 4));
    const double x0 = rng.integer(-10, 10) / 10.0;
    const double x = x0 + rng.integer(-3, 3) / 100.0;
    const double k = rng.integer(1, 20) / 1000.0;
    const bool use_exp = rng.integer(0, 1) == 0;
    auto f = [&](double t) { return use_exp ? std::exp(t) : std::sin(t); };
    auto grid = SampleGrid::sample(f, x, x0, k, n);
    // sup over the hull: exp is increasing; |sin^{(m)}| <= 1.
    const double hull_hi = std::max({x0, x, x + n * k});
    const double m_decl = use_exp ? std::exp(hull_hi) : 1.0;
    const double analytic = [&] {
      if (use_exp) return std::exp(x0);
      switch (n % 4) {  // derivatives of sin cycle
        case 1: return std::cos(x0);
        case 2: return -std::sin(x0);
        case 3: return -std::cos(x0);
        default: return std::sin(x0);
      }
    }();
    const double err = std::abs(estimate_nth_derivative(grid) - analytic);
    const double bound = remainder_bound(grid, RemainderData{m_decl});
    // tiny slack for the double sampling noise the declared-M contract
    // does not cover
    CHECK(err <= bound + 1e-10);
  }
}

TEST_CASE("consistency with the difference table at x = x0") {
  Polynomial p = Polynomial::parse("3x^3 - x^2 + 2");
  const double x0 = 0.5;
  const double k = 0.25;
  const int n = 3;
  auto grid = SampleGrid::sample([&](double t) { return eval_double(p, t); }, x0, x0, k, n);
  const double estimate = estimate_nth_derivative(grid);
  auto samples = sample_polynomial(p, to_rational(x0), to_rational(k), n + 1);
  const Rational table_value = difference_table(samples, n).rows[n][0];
  // (-k)^n * estimate == (-1)^n * forward table value, exactly
  const Rational lhs = pow_rational(to_rational(-k), n) * to_rational(estimate);
  const Rational rhs = (n % 2 == 0 ? Rational(1) : Rational(-1)) * table_value;
  CHECK(lhs == rhs);
}

TEST_CASE("estimate is invariant under direction reversal on polynomials") {
  Polynomial p = Polynomial::parse("x^4 - 3x^2 + x");
  for (int n : {2, 3, 4}) {
    const double x = -1.0;
    const double k = 0.5;
    auto grid = SampleGrid::sample([&](double t) { return eval_double(p, t); }, x, 0.0, k, n);
    SampleGrid reversed = grid;
    reversed.x = x + n * k;
    reversed.k = -k;
    reversed.values.assign(grid.values.rbegin(), grid.values.rend());
    CHECK(estimate_nth_derivative(grid) == estimate_nth_derivative(reversed));
  }
}

TEST_CASE("convergence studies") {
  SUBCASE("sin third derivative approaches -1") {
    auto rows = convergence_study([](double t) { return std::sin(t); }, 0.0, 3,
                                  {0.1, 0.05, 0.025}, RemainderData{1.0});
    REQUIRE(rows.size() == 3);
    // frozen 40-digit values of the exact quotients
    CHECK(rows[0].estimate == doctest::Approx(-0.98753578336).epsilon(1e-9));
    CHECK(rows[1].estimate == doctest::Approx(-0.996877238802).epsilon(1e-9));
    CHECK(rows[2].estimate == doctest::Approx(-0.999218889962).epsilon(1e-9));
    double prev = 1.0;
    for (const auto& row : rows) {
      const double err = std::abs(row.estimate - (-1.0));
      CHECK(err < prev);
      CHECK(err <= row.bound + 1e-10);
      prev = err;
    }
  }
  SUBCASE("degree-2 polynomial rows are all exact") {
    auto rows = convergence_study([](double t) { return 2 * t * t - t; }, 1.0, 2,
                                  {0.5, 0.25, 0.125}, RemainderData{0.0});
    for (const auto& row : rows) {
      CHECK(row.estimate == 4.0);
      CHECK(row.bound == 0.0);
    }
  }
  SUBCASE("exp second derivative: error halves with the step") {
    auto rows = convergence_study([](double t) { return std::exp(t); }, 1.0, 2,
                                  {0.02, 0.01, 0.005, 0.0025}, RemainderData{std::exp(1.1)});
    const double analytic = std::exp(1.0);
    std::vector<double> errors;
    for (const auto& row : rows) errors.push_back(std::abs(row.estimate - analytic));
    for (std::size_t i = 1; i < errors.size(); ++i) {
      const double ratio = errors[i] / errors[i - 1];
      CHECK(ratio > 0.35);
      CHECK(ratio < 0.65);
    }
  }
}
