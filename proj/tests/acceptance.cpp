// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// criteria hold. Expected values come from independent oracles (decimal-
// scaled integer arithmetic, brute-force scans, direct sums), never from
// the code paths under test.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diffseq/branch.hpp"
#include "diffseq/derivative.hpp"
#include "diffseq/difference_table.hpp"
#include "diffseq/dyadic.hpp"
#include "diffseq/gaps.hpp"
#include "diffseq/newton.hpp"
#include "diffseq/polynomial.hpp"
#include "diffseq/scan.hpp"
#include "diffseq/step.hpp"

using namespace diffseq;

namespace {

int g_failures = 0;

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void report(int id, const char* name, bool pass, double seconds, const std::string& detail) {
  std::printf("[%s] criterion %2d: %-46s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", id, name,
              seconds, detail.empty() ? "" : " — ", detail.c_str());
  if (!pass) ++g_failures;
}

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

// ---- 1. Newton identity on random polynomials, exact ----
void criterion_newton_identity() {
  const double t0 = now_seconds();
  std::mt19937_64 rng(20260811);
  std::uniform_int_distribution<int> degree_dist(1, 10);
  bool pass = true;
  for (int trial = 0; trial < 200 && pass; ++trial) {
    const int degree = degree_dist(rng);
    std::vector<Rational> coeffs;
    do {
      coeffs.assign(1, random_rational(rng, 1000000, 1000000));
    } while (coeffs[0] == 0);
    for (int i = 0; i < degree; ++i) coeffs.push_back(random_rational(rng, 1000000, 1000000));
    const Polynomial poly{coeffs};
    Rational k;
    do {
      k = random_rational(rng, 1000000, 1000000);
    } while (k == 0);
    const Rational expected = poly.leading() * pow_rational(k, degree) *
                              Rational(factorial(static_cast<unsigned>(degree)));
    for (int s = 0; s < 5; ++s) {
      const Rational x = random_rational(rng, 1000000, 1000000);
      if (binomial_nth_difference(poly, x, k, static_cast<unsigned>(degree)) != expected) {
        pass = false;
        break;
      }
    }
  }
  const double elapsed = now_seconds() - t0;
  report(1, "Newton identity, 200 random polynomials", pass && elapsed < 5.0, elapsed,
         pass ? "zero tolerance, exact rationals" : "exact mismatch found");
}

// ---- 2. Paper difference triangles, byte-exact bottom rows ----
void criterion_paper_tables() {
  const double t0 = now_seconds();
  auto render = [](const std::vector<Rational>& row) {
    std::ostringstream out;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << format_rational(row[i]);
    }
    return out.str();
  };
  auto sample = [](unsigned power, unsigned count) {
    std::vector<Rational> seq;
    for (unsigned j = 0; j < count; ++j)
      seq.push_back(Rational(pow_integer(Integer(j), power)));
    return seq;
  };
  const bool pass =
      render(difference_table(sample(1, 7), 1).rows[1]) == "1 1 1 1 1 1" &&
      render(difference_table(sample(2, 7), 2).rows[2]) == "2 2 2 2 2" &&
      render(difference_table(sample(3, 7), 3).rows[3]) == "6 6 6 6";
  report(2, "difference triangles for k, k^2, k^3", pass, now_seconds() - t0,
         "bottom rows byte-exact");
}

// ---- 3. Derivative identity with rigorous remainder bound ----
void criterion_derivative_identity() {
  const double t0 = now_seconds();
  bool pass = true;
  std::string detail;
  const double k = 1e-3;
  for (int n = 1; n <= 3 && pass; ++n) {
    for (double x : {0.0, 0.01}) {
      auto grid = SampleGrid::sample([](double t) { return std::exp(t); }, x, 0.0, k, n);
      const double sup_hull = std::exp(std::max(0.0, x + n * k));
      const double bound = remainder_bound(grid, RemainderData{sup_hull});
      const double err = std::abs(estimate_nth_derivative(grid) - 1.0);
      if (!(err <= bound)) {
        pass = false;
        detail = "exp bound violated at n=" + std::to_string(n);
      }
    }
  }
  // polynomial inputs of degree <= n reproduce the analytic derivative exactly
  const Polynomial polys[] = {Polynomial::parse("3x - 2"), Polynomial::parse("x^2 - 4x"),
                              Polynomial::parse("2x^3 + x^2 - 1")};
  for (int n = 1; n <= 3 && pass; ++n) {
    const Polynomial& poly = polys[n - 1];
    auto grid = SampleGrid::sample(
        [&](double t) {
          double acc = 0.0;
          for (const Rational& c : poly.coefficients()) acc = acc * t + c.get_d();
          return acc;
        },
        0.5, 0.25, 0.25, n);
    const Rational analytic =
        poly.derivative(static_cast<unsigned>(n)).eval(Rational(1, 4));
    if (Dyadic::from_double(estimate_nth_derivative(grid)).to_rational() != analytic) {
      pass = false;
      detail = "polynomial estimate not exact at n=" + std::to_string(n);
    }
  }
  const double elapsed = now_seconds() - t0;
  report(3, "derivative estimate within remainder bound", pass && elapsed < 1.0, elapsed,
         detail.empty() ? "exp at k=1e-3 plus exact polynomial cases" : detail);
}

// ---- 4. Step-bound certification across the full grid ----
void criterion_step_bound_grid() {
  const double t0 = now_seconds();
  std::uint64_t total = 0, bounds_proved = 0, mono_proved = 0, mono_applicable = 0,
                undecided = 0;
  for (int n = 2; n <= 10; ++n) {
    for (std::int64_t xp = 1; xp <= 50; ++xp) {
      const auto summary = certify_step_bounds(Branch{xp, n, 1}, 0, 1000);
      total += summary.total;
      undecided += summary.undecided + summary.violated;
      if (summary.lower_proved == summary.total && summary.upper_proved == summary.total) {
        bounds_proved += summary.total;
      }
      mono_proved += summary.monotone_proved;
      mono_applicable += summary.monotone_applicable;
    }
  }
  const double elapsed = now_seconds() - t0;
  const bool pass = total == 9ULL * 50 * 1001 && bounds_proved == total && undecided == 0 &&
                    mono_proved == mono_applicable && elapsed < 600.0;
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "%llu/%llu certified in (1, 2^{1/n}), %llu monotone, %llu undecided",
                static_cast<unsigned long long>(bounds_proved),
                static_cast<unsigned long long>(total),
                static_cast<unsigned long long>(mono_proved),
                static_cast<unsigned long long>(undecided));
  report(4, "step bounds over n=2..10, x'=1..50, p<=1000", pass, elapsed, detail);
}

// ---- 5. Limit check along x' = alpha*p rays ----
void criterion_limit_check() {
  const double t0 = now_seconds();
  bool below_threshold = true;
  bool monotone = true;
  std::printf("  criterion 5 detail: |Step(floor(a*p), p, n) - step_limit(a, n)| by p\n");
  for (const auto& [num, den] : {std::pair<long, long>{1, 4}, {1, 2}, {1, 1}}) {
    const Rational alpha(num, den);
    for (int n : {2, 3, 5}) {
      const Dyadic limit_mid = step_limit(alpha, n, 128).midpoint();
      double diffs[3];
      int idx = 0;
      for (std::int64_t p : {100, 1000, 10000}) {
        const std::int64_t xp = (num * p) / den;
        const Dyadic mid = step(Branch{xp, n, 1}, p, 128).interval.midpoint();
        diffs[idx++] = std::abs((mid - limit_mid).to_double());
      }
      if (!(diffs[0] > diffs[1] && diffs[1] > diffs[2])) monotone = false;
      if (!(diffs[2] < 1e-3)) below_threshold = false;
      std::printf("    alpha=%ld/%ld n=%d: %.6f %.6f %.6f\n", num, den, n, diffs[0], diffs[1],
                  diffs[2]);
    }
  }
  const bool pass = below_threshold && monotone;
  std::string detail = std::string("monotone decrease ") + (monotone ? "holds" : "FAILS") +
                       "; final gap < 1e-3 " + (below_threshold ? "holds" : "FAILS") +
                       " (the quoted closed form is the alpha->0 envelope, not the pointwise "
                       "ray limit; see ledger)";
  report(5, "ray-limit agreement at p = 10^4", pass, now_seconds() - t0, detail);
}

// ---- 6. Ceiling bounds with an independent 50-digit oracle ----
void criterion_min_gap() {
  const double t0 = now_seconds();
  bool pass = min_gap(2, 1) == 3 && min_gap(3, 1) == 4 && min_gap(4, 1) == 6 &&
              min_gap(5, 1) == 7;
  // oracle: decimal-scaled integer arithmetic at 50 digits, no interval code
  for (int n = 2; n <= 5 && pass; ++n) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 50);
    Integer scaled_pow;
    mpz_pow_ui(scaled_pow.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
    scaled_pow *= 2;
    Integer t;
    mpz_root(t.get_mpz_t(), scaled_pow.get_mpz_t(), static_cast<unsigned long>(n));
    // 2^{1/n} in [t, t+1]/10^50, so 1/(2^{1/n}-1) in [S/(t+1-S), S/(t-S)]
    Rational lo(scale, t + 1 - scale);
    Rational hi(scale, t - scale);
    lo.canonicalize();
    hi.canonicalize();
    Integer ceil_lo, ceil_hi;
    mpz_cdiv_q(ceil_lo.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpz_cdiv_q(ceil_hi.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
    pass = ceil_lo == ceil_hi && ceil_lo == min_gap(n, 1);
  }
  report(6, "minimum gaps 3, 4, 6, 7 for n = 2..5", pass, now_seconds() - t0,
         "interval route matches the 50-digit decimal oracle");
}

// ---- 7. Statement 2 at n = 2 ----
void criterion_gap_audit_n2() {
  const double t0 = now_seconds();
  bool pass = true;
  std::uint64_t total_points = 0;
  auto oracle = brute_force_solutions(2, 1, 100, 100000);
  for (std::int64_t xp = 1; xp <= 100 && pass; ++xp) {
    const auto report_xp = gap_audit(Branch{xp, 2, 1}, 100000);
    pass = report_xp.violations.empty() && report_xp.min_gap_required == 3;
    std::vector<std::int64_t> expected;
    for (const auto& s : oracle) {
      if (s.x_prime == xp) expected.push_back(s.p);
    }
    pass = pass && report_xp.integer_points == expected;
    total_points += report_xp.integer_points.size();
  }
  const double elapsed = now_seconds() - t0;
  char detail[96];
  std::snprintf(detail, sizeof detail,
                "%llu integer points over x'<=100, p<=1e5; every gap >= 3",
                static_cast<unsigned long long>(total_points));
  report(7, "gap audit matches brute force at n = 2", pass && elapsed < 120.0, elapsed, detail);
}

// ---- 8. Statement 1 consistency ----
void criterion_fermat_bounds() {
  const double t0 = now_seconds();
  bool pass = fermat_y_bound(3) == 3 && fermat_y_bound(4) == 5;
  for (int n : {3, 4}) {
    const auto solutions = brute_force_solutions(n, 1, 50, 10000);
    for (const auto& s : solutions) pass = pass && s.p == 0;
    pass = pass && solutions.size() == 50;  // exactly the trivial z_0 = x' points
  }
  report(8, "fermat_y_bound(3)=3, (4)=5; no nontrivial points", pass, now_seconds() - t0,
         "exact scans n=3,4 over x'<=50, p<=1e4");
}

// ---- 9. Branch identity exactness ----
void criterion_identity_exactness() {
  const double t0 = now_seconds();
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<long> xp_dist(1, 400);
  std::uniform_int_distribution<int> n_dist(2, 12);
  std::uniform_int_distribution<long> coeff_dist(1, 5);
  std::uniform_int_distribution<long> y_dist(0, 300);
  bool pass = true;
  for (int trial = 0; trial < 500 && pass; ++trial) {
    const Branch branch{xp_dist(rng), n_dist(rng), coeff_dist(rng)};
    pass = verify_branch_identity(branch, y_dist(rng)).residual == 0;
  }
  report(9, "identity residual zero on 500 random tuples", pass, now_seconds() - t0,
         "sum equals (A+1) * n! exactly, A in 1..5");
}

// ---- 10. Statement 3 conditional bound ----
void criterion_conditional_bound() {
  const double t0 = now_seconds();
  bool pass = true;
  for (int n = 2; n <= 10 && pass; ++n) {
    const std::int64_t gap = min_gap(n, 1);
    for (std::int64_t j = 1; j < gap && pass; ++j) {
      pass = conditional_gap_bound(n, j) == gap - j;
    }
    for (std::int64_t j : {gap, gap + 7}) {
      bool threw = false;
      try {
        (void)conditional_gap_bound(n, j);
      } catch (const HypothesisViolation&) {
        threw = true;
      }
      pass = pass && threw;
    }
  }
  report(10, "conditional gap bound and hypothesis guard", pass, now_seconds() - t0,
         "equals min_gap(n,1) - j for every admissible j");
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_newton_identity();
  criterion_paper_tables();
  criterion_derivative_identity();
  criterion_step_bound_grid();
  criterion_limit_check();
  criterion_min_gap();
  criterion_gap_audit_n2();
  criterion_fermat_bounds();
  criterion_identity_exactness();
  criterion_conditional_bound();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
  } else {
    std::printf("%d criterion(s) failed\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
