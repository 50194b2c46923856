#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diffseq/derivative.hpp"
#include "diffseq/difference_table.hpp"
#include "diffseq/gaps.hpp"
#include "diffseq/newton.hpp"
#include "diffseq/polynomial.hpp"
#include "diffseq/report.hpp"
#include "diffseq/scan.hpp"

using namespace diffseq;

namespace {

constexpr int kExitViolations = 1;
constexpr int kExitBadParams = 2;

struct OutputTarget {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    stream = &file;
  }
};

// DIFFSEQ_MAX_BITS overrides the default precision cap; an explicit
// --max-precision-bits flag wins over both.
unsigned default_max_bits() {
  if (const char* env = std::getenv("DIFFSEQ_MAX_BITS")) {
    const long value = std::atol(env);
    if (value < 2) throw std::invalid_argument("DIFFSEQ_MAX_BITS must be >= 2");
    return static_cast<unsigned>(value);
  }
  return 4096;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
  return out;
}

void print_difference_table(std::ostream& out, const DifferenceTable& table,
                            ReportFormat format) {
  if (format == ReportFormat::JsonLines) {
    for (std::size_t m = 0; m < table.rows.size(); ++m) {
      out << "{\"order\":" << m << ",\"values\":[";
      for (std::size_t j = 0; j < table.rows[m].size(); ++j) {
        if (j) out << ",";
        out << '"' << format_rational(table.rows[m][j]) << '"';
      }
      out << "]}\n";
    }
    return;
  }
  const char sep = format == ReportFormat::Csv ? ',' : ' ';
  for (std::size_t m = 0; m < table.rows.size(); ++m) {
    if (format == ReportFormat::Pretty) out << "D^" << m << ": ";
    for (std::size_t j = 0; j < table.rows[m].size(); ++j) {
      if (j) out << sep;
      out << format_rational(table.rows[m][j]);
    }
    out << "\n";
  }
}

int cmd_difftable(const std::string& poly_spec, const std::string& seq_spec, unsigned order,
                  const std::string& step, const std::string& x0, unsigned points,
                  ReportFormat format, OutputTarget& target) {
  std::vector<Rational> seq;
  Rational step_value = parse_rational(step);
  if (!poly_spec.empty()) {
    seq = sample_polynomial(Polynomial::parse(poly_spec), parse_rational(x0), step_value, points);
  } else if (!seq_spec.empty()) {
    seq = parse_rational_list(seq_spec);
  } else {
    throw std::invalid_argument("difftable needs --poly or --seq");
  }
  DifferenceTable table = difference_table(seq, order);
  table.step = step_value;
  print_difference_table(*target.stream, table, format);
  return 0;
}

int cmd_newton(const std::string& poly_spec, const std::string& step,
               const std::string& samples_spec, unsigned random_samples, std::uint64_t seed,
               ReportFormat format, OutputTarget& target) {
  Polynomial poly = Polynomial::parse(poly_spec);
  std::vector<Rational> samples;
  if (!samples_spec.empty()) samples = parse_rational_list(samples_spec);
  if (random_samples > 0) {
    std::mt19937_64 engine(seed);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (unsigned i = 0; i < random_samples; ++i) {
      Rational q(num(engine), den(engine));
      q.canonicalize();
      samples.push_back(std::move(q));
    }
  }
  if (samples.empty()) throw std::invalid_argument("newton needs --samples or --random-samples");
  NewtonReport report = verify_newton_theorem(poly, parse_rational(step), samples);
  std::ostream& out = *target.stream;
  if (format == ReportFormat::JsonLines) {
    for (const auto& row : report.samples) {
      out << "{\"x\":\"" << format_rational(row.x) << "\",\"value\":\""
          << format_rational(row.value) << "\",\"pass\":" << (row.pass ? "true" : "false")
          << "}\n";
    }
    out << "{\"type\":\"summary\",\"order\":" << report.order << ",\"expected\":\""
        << format_rational(report.expected) << "\",\"all_pass\":"
        << (report.all_pass ? "true" : "false") << ",\"seed\":" << seed << "}\n";
  } else {
    out << "order n = " << report.order << ", expected constant a0*k^n*n! = "
        << format_rational(report.expected) << "\n";
    for (const auto& row : report.samples) {
      out << "  x = " << format_rational(row.x) << ": " << format_rational(row.value) << "  "
          << (row.pass ? "pass" : "FAIL") << "\n";
    }
    out << (report.all_pass ? "all samples pass" : "FAILURES present") << "\n";
  }
  return report.all_pass ? 0 : kExitViolations;
}

int cmd_deriv(const std::string& func, const std::string& samples_file, double x, double x0,
              double k, int order, double bound_m, ReportFormat format, OutputTarget& target) {
  SampleGrid grid;
  if (!samples_file.empty()) {
    std::ifstream in(samples_file);
    if (!in) throw std::invalid_argument("cannot read samples file '" + samples_file + "'");
    grid.x = x;
    grid.x0 = x0;
    grid.k = k;
    grid.n = order;
    double value;
    while (in >> value) grid.values.push_back(value);
    grid.validate();
  } else if (func == "exp") {
    grid = SampleGrid::sample([](double t) { return std::exp(t); }, x, x0, k, order);
  } else if (func == "sin") {
    grid = SampleGrid::sample([](double t) { return std::sin(t); }, x, x0, k, order);
  } else if (func == "cos") {
    grid = SampleGrid::sample([](double t) { return std::cos(t); }, x, x0, k, order);
  } else if (func.rfind("poly:", 0) == 0) {
    Polynomial poly = Polynomial::parse(func.substr(5));
    grid = SampleGrid::sample(
        [&](double t) {
          double acc = 0.0;
          for (const Rational& c : poly.coefficients()) acc = acc * t + c.get_d();
          return acc;
        },
        x, x0, k, order);
  } else {
    throw std::invalid_argument(
        "unknown function '" + func + "' (expected exp, sin, cos, poly:<spec>, or --samples-file)");
  }
  DerivativeEstimate estimate = estimate_with_bound(grid, RemainderData{bound_m});
  char line[160];
  std::ostream& out = *target.stream;
  if (format == ReportFormat::JsonLines) {
    std::snprintf(line, sizeof line,
                  "{\"n\":%d,\"estimate\":%.17g,\"error_bound\":%.17g}", estimate.n,
                  estimate.value, estimate.error_bound);
    out << line << "\n";
  } else {
    std::snprintf(line, sizeof line, "f^(%d)(x0) estimate = %.17g", estimate.n, estimate.value);
    out << line << "\n";
    std::snprintf(line, sizeof line, "error bound        = %.17g (declared M = %.17g)",
                  estimate.error_bound, bound_m);
    out << line << "\n";
  }
  return 0;
}

int cmd_branch_scan(const Branch& branch, std::int64_t p_max, const ScanOptions& options,
                    unsigned digits, std::uint64_t seed, ReportFormat format,
                    OutputTarget& target) {
  ScanReportWriter writer(*target.stream, format, digits);
  ScanSummary summary =
      branch_scan(branch, 0, p_max, options,
                  [&](const StepCertificate& rec) { writer.write(branch, rec); });
  // The summary's minimum-gap field is a constant of (n, A); it is computed
  // under the default escalation schedule, not the scan's user-set cap.
  writer.write_summary(summary, min_gap(branch.power, branch.coeff), seed, options.precision);
  return summary.all_certified() ? 0 : kExitViolations;
}

int cmd_gap_audit(const Branch& branch, std::int64_t p_max, const ScanOptions& options,
                  ReportFormat format, OutputTarget& target) {
  GapAuditReport report = gap_audit(branch, p_max, options);
  render_gap_audit(*target.stream, report, format);
  return report.pass() ? 0 : kExitViolations;
}

int cmd_fermat_bound(int power, const PrecisionPolicy& policy, ReportFormat format,
                     OutputTarget& target) {
  const std::int64_t bound = fermat_y_bound(power, policy);
  const std::int64_t gap = min_gap(power, 1, policy);
  std::ostream& out = *target.stream;
  if (format == ReportFormat::JsonLines) {
    out << "{\"power\":" << power << ",\"y_bound\":" << bound << ",\"min_gap\":" << gap << "}\n";
  } else {
    out << "power n = " << power << "\n"
        << "every y <= " << bound << " is excluded as the smaller leg (x > y)\n"
        << "minimum integer-point index gap: " << gap << "\n";
  }
  return 0;
}

int cmd_identity(const Branch& branch, std::int64_t y, ReportFormat format,
                 OutputTarget& target) {
  IdentityCheck check = verify_branch_identity(branch, y);
  std::ostream& out = *target.stream;
  if (format == ReportFormat::JsonLines) {
    out << "{\"x_prime\":" << branch.x_prime << ",\"power\":" << branch.power
        << ",\"coeff\":" << branch.coeff << ",\"y\":" << y << ",\"sum\":\"" << check.sum.get_str()
        << "\",\"expected\":\"" << check.expected.get_str() << "\",\"residual\":\""
        << check.residual.get_str() << "\",\"pass\":" << (check.pass ? "true" : "false") << "}\n";
  } else {
    out << "alternating sum  = " << check.sum.get_str() << "\n"
        << "expected (A+1)n! = " << check.expected.get_str() << "\n"
        << "residual         = " << check.residual.get_str() << "  "
        << (check.pass ? "(exact)" : "(MISMATCH)") << "\n";
  }
  return check.pass ? 0 : kExitViolations;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"difference-sequence toolkit: exact Newton difference identities, derivative "
               "estimates with rigorous bounds, and certified Diophantine branch scans"};
  app.require_subcommand(1);

  std::string format_name = "pretty-table";
  std::string out_path;
  std::uint64_t seed = 0;
  int threads = 0;
  unsigned digits = 15;
  unsigned start_bits = 64;
  unsigned max_bits = 0;  // 0 = default/env
  std::int64_t x_prime = 1;
  int power = 2;
  std::int64_t coeff_a = 1;
  std::int64_t p_max = 100;
  std::int64_t y_index = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format: json-lines, csv, pretty-table");
    cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
    cmd->add_option("--seed", seed, "seed for randomized sampling, recorded in summaries");
  };
  auto add_branch_opts = [&](CLI::App* cmd) {
    cmd->add_option("--x-prime", x_prime, "branch offset x' = x - y (>= 1)");
    cmd->add_option("--power", power, "exponent n (>= 2)");
    cmd->add_option("--coeff-a", coeff_a, "coefficient A in z^n = A x^n + y^n (>= 1)");
  };
  auto add_precision_opts = [&](CLI::App* cmd) {
    cmd->add_option("--precision-bits", start_bits, "starting interval precision");
    cmd->add_option("--max-precision-bits", max_bits,
                    "precision escalation cap (default 4096; DIFFSEQ_MAX_BITS overrides)");
    cmd->add_option("--threads", threads, "worker threads (0 = all cores, 1 = serial)");
  };

  auto* difftable = app.add_subcommand("difftable", "difference triangle of a sequence");
  std::string poly_spec;
  std::string seq_spec;
  std::string step_spec = "1";
  std::string x0_spec = "0";
  unsigned order = 1;
  unsigned points = 8;
  difftable->add_option("--poly", poly_spec, "polynomial to sample, e.g. 'x^3'");
  difftable->add_option("--seq", seq_spec, "explicit comma-separated sequence, e.g. '0,1,8,27'");
  difftable->add_option("--order", order, "highest difference order to compute");
  difftable->add_option("--step", step_spec, "grid step k (rational)");
  difftable->add_option("--x0", x0_spec, "first sample point (rational)");
  difftable->add_option("--points", points, "number of samples when using --poly");
  add_common(difftable);

  auto* newton = app.add_subcommand("newton", "verify the a0*k^n*n! nth-difference constant");
  std::string samples_spec;
  unsigned random_samples = 0;
  newton->add_option("--poly", poly_spec, "polynomial, e.g. '5x^4 - x'")->required();
  newton->add_option("--step", step_spec, "difference step k (rational, nonzero)");
  newton->add_option("--samples", samples_spec, "comma-separated rational sample points");
  newton->add_option("--random-samples", random_samples, "number of random sample points");
  add_common(newton);

  auto* deriv = app.add_subcommand("deriv", "nth-derivative estimate with remainder bound");
  std::string func = "exp";
  std::string samples_file;
  double x = 0.0;
  double x0 = 0.0;
  double k = 1e-3;
  int deriv_order = 1;
  double bound_m = 0.0;
  deriv->add_option("--func", func, "function: exp, sin, cos, or poly:<spec>");
  deriv->add_option("--samples-file", samples_file, "whitespace-separated f(x + i*k) values");
  deriv->add_option("--x", x, "difference-sequence start point");
  deriv->add_option("--x0", x0, "derivative evaluation point");
  deriv->add_option("--step", k, "grid step k (nonzero)");
  deriv->add_option("--order", deriv_order, "derivative order n");
  deriv->add_option("--bound-M", bound_m, "declared bound on sup|f^(n+1)| over the hull");
  add_common(deriv);

  auto* scan = app.add_subcommand("branch-scan",
                                  "certify step bounds, monotonicity, and integrality");
  add_branch_opts(scan);
  scan->add_option("--p-max", p_max, "scan indices p = 0..p_max");
  scan->add_option("--digits", digits, "decimal digits for interval endpoints");
  add_precision_opts(scan);
  add_common(scan);

  auto* audit = app.add_subcommand("gap-audit", "exact integer-point audit of a branch");
  add_branch_opts(audit);
  audit->add_option("--p-max", p_max, "audit indices p = 0..p_max");
  add_precision_opts(audit);
  add_common(audit);

  auto* fermat = app.add_subcommand("fermat-bound", "excluded smaller-leg bound per power");
  fermat->add_option("--power", power, "exponent n (>= 3)")->required();
  add_precision_opts(fermat);
  add_common(fermat);

  auto* identity = app.add_subcommand("identity", "exact (A+1)*n! alternating-sum identity");
  add_branch_opts(identity);
  identity->add_option("--y", y_index, "starting index y (>= 0)");
  add_common(identity);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : kExitBadParams;
  }

  try {
    const ReportFormat format = parse_format(format_name);
    OutputTarget target;
    target.open(out_path);

    PrecisionPolicy policy;
    policy.start_bits = start_bits;
    policy.max_bits = max_bits > 0 ? max_bits : default_max_bits();
    if (policy.start_bits < 2 || policy.max_bits < policy.start_bits) {
      throw std::invalid_argument("precision bits must satisfy 2 <= start <= max");
    }
    ScanOptions options;
    options.precision = policy;
    options.threads = threads;

    const Branch branch{x_prime, power, coeff_a};

    if (difftable->parsed()) {
      return cmd_difftable(poly_spec, seq_spec, order, step_spec, x0_spec, points, format,
                           target);
    }
    if (newton->parsed()) {
      return cmd_newton(poly_spec, step_spec, samples_spec, random_samples, seed, format, target);
    }
    if (deriv->parsed()) {
      return cmd_deriv(func, samples_file, x, x0, k, deriv_order, bound_m, format, target);
    }
    if (scan->parsed()) {
      return cmd_branch_scan(branch, p_max, options, digits, seed, format, target);
    }
    if (audit->parsed()) return cmd_gap_audit(branch, p_max, options, format, target);
    if (fermat->parsed()) return cmd_fermat_bound(power, policy, format, target);
    if (identity->parsed()) return cmd_identity(branch, y_index, format, target);
    return kExitBadParams;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParams;
  } catch (const HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolations;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadParams;
  }
}
