#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "diffseq/branch.hpp"
#include "diffseq/errors.hpp"
#include "diffseq/interval.hpp"
#include "diffseq/step.hpp"

namespace diffseq {

enum class CertStatus {
  Proved,         // inequality certified by disjoint intervals
  Violated,       // the opposite strict inequality certified
  Undecided,      // precision cap reached with overlapping intervals
  NotApplicable,  // e.g. monotone verdict at the first index of a range
};

const char* cert_status_name(CertStatus s);

struct ScanOptions {
  PrecisionPolicy precision;
  // 0 = all available cores through the parallel kernel; 1 = the serial
  // reference implementation; >1 = parallel with that many threads.
  int threads = 0;
  std::int64_t chunk = 8192;  // emission granularity of the parallel kernel
};

// One fully certified scan index: integrality of z_p (exact) plus interval
// verdicts for 1 < Step(p), Step(p) < (coeff+1)^{1/n} and
// Step(p-1) < Step(p), all at the same final refinement level.
struct StepCertificate {
  std::int64_t p = 0;
  Integer zn;
  bool is_integer = false;
  RealInterval step;
  CertStatus lower = CertStatus::Undecided;
  CertStatus upper = CertStatus::Undecided;
  CertStatus monotone = CertStatus::NotApplicable;
  unsigned bits_used = 0;

  bool all_proved() const {
    return lower == CertStatus::Proved && upper == CertStatus::Proved &&
           (monotone == CertStatus::Proved || monotone == CertStatus::NotApplicable);
  }
};

using RecordSink = std::function<void(const StepCertificate&)>;

struct ScanSummary {
  Branch branch;
  std::int64_t p_begin = 0;
  std::int64_t p_end = 0;  // inclusive
  std::uint64_t total = 0;
  std::uint64_t lower_proved = 0;
  std::uint64_t upper_proved = 0;
  std::uint64_t monotone_proved = 0;
  std::uint64_t monotone_applicable = 0;
  std::uint64_t undecided = 0;  // indices with any Undecided verdict
  std::uint64_t violated = 0;   // indices with any Violated verdict
  std::vector<std::int64_t> undecided_ps;  // capped at 1000 entries
  std::vector<std::int64_t> violated_ps;   // capped at 1000 entries
  std::vector<std::int64_t> integer_points;
  bool conjecture_grade = false;  // coeff > 1: upper bound is empirical only

  bool all_certified() const { return undecided == 0 && violated == 0; }
};

// Certifies a single index. Escalates precision until every requested
// verdict is decided or the cap is hit. `with_monotone` controls whether the
// Step(p-1) comparison is attempted (it needs p >= 1).
StepCertificate certify_step_record(const Branch& branch, std::int64_t p, bool with_monotone,
                                    const PrecisionPolicy& policy);

// Full scan over p in [p_begin, p_end], emitting records in index order.
// The serial variant is the reference implementation; the parallel variant
// distributes chunks over OpenMP threads and produces identical output.
ScanSummary branch_scan_serial(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                               const ScanOptions& options = {}, const RecordSink& sink = {});
ScanSummary branch_scan_parallel(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                                 const ScanOptions& options = {}, const RecordSink& sink = {});
ScanSummary branch_scan(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                        const ScanOptions& options = {}, const RecordSink& sink = {});

// Bounds certification over a range: verdicts 1 < Step < (coeff+1)^{1/n}.
ScanSummary certify_step_bounds(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                                const ScanOptions& options = {});

// Step(p) < Step(p+1) for every consecutive pair in range; requires
// coeff = 1 (the growth argument is only made for that case).
ScanSummary certify_step_monotone(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                                  const ScanOptions& options = {});

// --- exact integer-point machinery (no intervals involved) ---

// All p in [p_lo, p_hi] whose branch value is a perfect nth power,
// decided by exact integer root extraction.
std::vector<std::int64_t> integer_points_serial(const Branch& branch, std::int64_t p_lo,
                                                std::int64_t p_hi);
std::vector<std::int64_t> integer_points_parallel(const Branch& branch, std::int64_t p_lo,
                                                  std::int64_t p_hi, const ScanOptions& options = {});
std::vector<std::int64_t> integer_points(const Branch& branch, std::int64_t p_lo,
                                         std::int64_t p_hi, const ScanOptions& options = {});

struct GapAuditReport {
  Branch branch;
  std::int64_t p_max = 0;
  std::vector<std::int64_t> integer_points;
  std::vector<std::int64_t> gaps;  // consecutive index differences
  std::int64_t min_gap_required = 0;
  std::vector<std::int64_t> violations;  // gaps below the requirement
  bool conjecture_grade = false;

  bool pass() const { return violations.empty(); }
};

GapAuditReport gap_audit(const Branch& branch, std::int64_t p_max,
                         const ScanOptions& options = {});

struct BranchSolution {
  std::int64_t x_prime = 0;
  std::int64_t p = 0;
  Integer z;
};

inline constexpr std::uint64_t kDefaultScanBudget = 2'000'000'000ULL;

// Exhaustive integer-point search over x' in [1, x_prime_max], p in
// [0, p_max]; the independent oracle for the gap statements. Throws
// BudgetExceeded when x_prime_max * (p_max + 1) exceeds the budget.
std::vector<BranchSolution> brute_force_solutions(int power, std::int64_t coeff,
                                                  std::int64_t x_prime_max, std::int64_t p_max,
                                                  const ScanOptions& options = {},
                                                  std::uint64_t budget = kDefaultScanBudget);

// --- fractional accumulation (inherently sequential) ---

struct FracRow {
  std::int64_t p = 0;       // running sum of {Step(k)} for k < p
  RealInterval sum;
  bool integer_point = false;  // z_p is an exact integer
  Integer exact_sum;           // defined when integer_point: z_p - x' - p
};

struct FracAccumulation {
  Branch branch;
  std::vector<FracRow> rows;  // p = 1 .. p_max
  std::optional<std::int64_t> first_crossing;  // least p with sum >= 1, certified
  bool undecided = false;
  std::int64_t undecided_at = -1;
};

// Running fractional sums along a branch (coeff = 1 so every Step has floor
// 1). A sum is compared against 1 by certified intervals, falling back to
// the exact value z_p - x' - p at integer points.
FracAccumulation frac_accumulation(const Branch& branch, std::int64_t p_max,
                                   const PrecisionPolicy& policy = {});

}  // namespace diffseq
