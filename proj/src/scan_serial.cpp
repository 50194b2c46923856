#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diffseq/gaps.hpp"
#include "diffseq/scan.hpp"

namespace diffseq {

const char* cert_status_name(CertStatus s) {
  switch (s) {
    case CertStatus::Proved: return "proved";
    case CertStatus::Violated: return "violated";
    case CertStatus::Undecided: return "undecided";
    case CertStatus::NotApplicable: return "n/a";
  }
  return "?";
}

namespace {

// Proved if lhs < rhs certified, Violated if rhs < lhs certified.
CertStatus order_status(const Dyadic& lhs_hi, const Dyadic& lhs_lo, const Dyadic& rhs_lo,
                        const Dyadic& rhs_hi) {
  if (lhs_hi < rhs_lo) return CertStatus::Proved;
  if (rhs_hi < lhs_lo) return CertStatus::Violated;
  return CertStatus::Undecided;
}

bool settled(CertStatus s) { return s != CertStatus::Undecided; }

}  // namespace

StepCertificate certify_step_record(const Branch& branch, std::int64_t p, bool with_monotone,
                                    const PrecisionPolicy& policy) {
  const unsigned n = static_cast<unsigned>(branch.power);
  StepCertificate rec;
  rec.p = p;
  rec.zn = branch_value_pow(branch, p);
  rec.is_integer = integer_nth_root(rec.zn, n).second;
  if (with_monotone && p < 1) with_monotone = false;

  const Integer zn_next = branch_value_pow(branch, p + 1);
  const Integer one(1);
  unsigned bits = policy.start_bits;
  for (;;) {
    const RealInterval z_cur = nth_root_interval(rec.zn, n, bits);
    const RealInterval z_next = nth_root_interval(zn_next, n, bits);
    const RealInterval step_cur = z_next - z_cur;
    const RealInterval bound = step_upper_root(branch.power, branch.coeff, bits);

    const Dyadic one_d(1);
    rec.lower = order_status(one_d, one_d, step_cur.lo(), step_cur.hi());
    rec.upper = order_status(step_cur.hi(), step_cur.lo(), bound.lo(), bound.hi());
    rec.monotone = CertStatus::NotApplicable;
    if (with_monotone) {
      const RealInterval z_prev = nth_root_interval(branch_value_pow(branch, p - 1), n, bits);
      const RealInterval step_prev = z_cur - z_prev;
      rec.monotone = order_status(step_prev.hi(), step_prev.lo(), step_cur.lo(), step_cur.hi());
    }
    rec.step = step_cur;
    rec.bits_used = bits;
    const bool done = settled(rec.lower) && settled(rec.upper) &&
                      (!with_monotone || settled(rec.monotone));
    if (done || bits >= policy.max_bits) return rec;
    bits = std::min(bits * 2, policy.max_bits);
  }
}

namespace {

void fold_record(ScanSummary& summary, const StepCertificate& rec) {
  constexpr std::size_t kListCap = 1000;
  ++summary.total;
  if (rec.lower == CertStatus::Proved) ++summary.lower_proved;
  if (rec.upper == CertStatus::Proved) ++summary.upper_proved;
  if (rec.monotone != CertStatus::NotApplicable) {
    ++summary.monotone_applicable;
    if (rec.monotone == CertStatus::Proved) ++summary.monotone_proved;
  }
  const bool any_undecided = rec.lower == CertStatus::Undecided ||
                             rec.upper == CertStatus::Undecided ||
                             rec.monotone == CertStatus::Undecided;
  const bool any_violated = rec.lower == CertStatus::Violated ||
                            rec.upper == CertStatus::Violated ||
                            rec.monotone == CertStatus::Violated;
  if (any_undecided) {
    ++summary.undecided;
    if (summary.undecided_ps.size() < kListCap) summary.undecided_ps.push_back(rec.p);
  }
  if (any_violated) {
    ++summary.violated;
    if (summary.violated_ps.size() < kListCap) summary.violated_ps.push_back(rec.p);
  }
  if (rec.is_integer) summary.integer_points.push_back(rec.p);
}

ScanSummary make_summary(const Branch& branch, std::int64_t p_begin, std::int64_t p_end) {
  ScanSummary summary;
  summary.branch = branch;
  summary.p_begin = p_begin;
  summary.p_end = p_end;
  summary.conjecture_grade = branch.coeff > 1;
  return summary;
}

void check_range(std::int64_t p_begin, std::int64_t p_end) {
  if (p_begin < 0 || p_end < p_begin) throw std::invalid_argument("branch_scan: bad p range");
}

}  // namespace

ScanSummary branch_scan_serial(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                               const ScanOptions& options, const RecordSink& sink) {
  branch.validate();
  check_range(p_begin, p_end);
  ScanSummary summary = make_summary(branch, p_begin, p_end);
  for (std::int64_t p = p_begin; p <= p_end; ++p) {
    StepCertificate rec = certify_step_record(branch, p, p > p_begin, options.precision);
    fold_record(summary, rec);
    if (sink) sink(rec);
  }
  return summary;
}

ScanSummary certify_step_bounds(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                                const ScanOptions& options) {
  return branch_scan(branch, p_begin, p_end, options);
}

ScanSummary certify_step_monotone(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                                  const ScanOptions& options) {
  if (branch.coeff != 1) {
    throw std::invalid_argument("certify_step_monotone: requires coefficient 1");
  }
  return branch_scan(branch, p_begin, p_end, options);
}

// --- exact integer-point scan, serial reference ---

namespace {

// Largest base such that coeff*(base)^n + base^n stays below 2^62, i.e. the
// u64 fast path stays overflow-free.
std::int64_t u64_safe_base(int power, std::int64_t coeff) {
  const double limit = std::pow(4.0e18 / static_cast<double>(coeff + 1), 1.0 / power);
  return static_cast<std::int64_t>(limit * 0.99) - 1;
}

// Saturates to UINT64_MAX on overflow; branch values never reach it, so the
// sentinel can never equal a candidate.
std::uint64_t u64_pow(std::uint64_t base, int e) {
  __uint128_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

bool u64_is_perfect_power(std::uint64_t value, int n, std::uint64_t* root_out) {
  if (value == 0) {
    *root_out = 0;
    return true;
  }
  std::uint64_t guess = static_cast<std::uint64_t>(
      std::llround(std::pow(static_cast<double>(value), 1.0 / n)));
  for (std::uint64_t r = guess > 2 ? guess - 2 : 0; r <= guess + 2; ++r) {
    if (u64_pow(r, n) == value) {
      *root_out = r;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::int64_t> integer_points_serial(const Branch& branch, std::int64_t p_lo,
                                                std::int64_t p_hi) {
  branch.validate();
  if (p_lo < 0 || p_hi < p_lo) throw std::invalid_argument("integer_points: bad p range");
  std::vector<std::int64_t> points;
  const int n = branch.power;
  if (branch.x_prime + p_hi <= u64_safe_base(n, branch.coeff)) {
    const std::uint64_t coeff = static_cast<std::uint64_t>(branch.coeff);
    for (std::int64_t p = p_lo; p <= p_hi; ++p) {
      const std::uint64_t zn = coeff * u64_pow(static_cast<std::uint64_t>(branch.x_prime + p), n) +
                               u64_pow(static_cast<std::uint64_t>(p), n);
      std::uint64_t root;
      if (u64_is_perfect_power(zn, n, &root)) points.push_back(p);
    }
    return points;
  }
  Integer zn;
  for (std::int64_t p = p_lo; p <= p_hi; ++p) {
    zn = branch_value_pow(branch, p);
    if (integer_nth_root(zn, static_cast<unsigned>(n)).second) points.push_back(p);
  }
  return points;
}

GapAuditReport gap_audit(const Branch& branch, std::int64_t p_max, const ScanOptions& options) {
  branch.validate();
  if (p_max < 0) throw std::invalid_argument("gap_audit: p_max must be >= 0");
  GapAuditReport report;
  report.branch = branch;
  report.p_max = p_max;
  report.conjecture_grade = branch.coeff > 1;
  report.integer_points = integer_points(branch, 0, p_max, options);
  report.min_gap_required = min_gap(branch.power, branch.coeff, options.precision);
  for (std::size_t i = 1; i < report.integer_points.size(); ++i) {
    const std::int64_t gap = report.integer_points[i] - report.integer_points[i - 1];
    report.gaps.push_back(gap);
    if (gap < report.min_gap_required) report.violations.push_back(gap);
  }
  return report;
}

}  // namespace diffseq
