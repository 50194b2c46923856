#include <algorithm>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diffseq/scan.hpp"

namespace diffseq {

namespace {

void fold_record_into(ScanSummary& summary, const StepCertificate& rec) {
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

#ifdef _OPENMP
int thread_count(const ScanOptions& options) {
  return options.threads > 0 ? options.threads : omp_get_max_threads();
}
#endif

}  // namespace

ScanSummary branch_scan_parallel(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                                 const ScanOptions& options, const RecordSink& sink) {
#ifndef _OPENMP
  return branch_scan_serial(branch, p_begin, p_end, options, sink);
#else
  branch.validate();
  if (p_begin < 0 || p_end < p_begin) throw std::invalid_argument("branch_scan: bad p range");
  ScanSummary summary;
  summary.branch = branch;
  summary.p_begin = p_begin;
  summary.p_end = p_end;
  summary.conjecture_grade = branch.coeff > 1;

  const std::int64_t chunk = std::max<std::int64_t>(1, options.chunk);
  std::vector<StepCertificate> buffer;
  // Records are produced chunk by chunk so memory stays constant in the
  // range length and the sink sees records in index order.
  for (std::int64_t lo = p_begin; lo <= p_end; lo += chunk) {
    const std::int64_t hi = std::min(p_end, lo + chunk - 1);
    const std::int64_t count = hi - lo + 1;
    buffer.assign(static_cast<std::size_t>(count), StepCertificate{});
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count(options))
    for (std::int64_t i = 0; i < count; ++i) {
      const std::int64_t p = lo + i;
      buffer[static_cast<std::size_t>(i)] =
          certify_step_record(branch, p, p > p_begin, options.precision);
    }
    for (const StepCertificate& rec : buffer) {
      fold_record_into(summary, rec);
      if (sink) sink(rec);
    }
  }
  return summary;
#endif
}

ScanSummary branch_scan(const Branch& branch, std::int64_t p_begin, std::int64_t p_end,
                        const ScanOptions& options, const RecordSink& sink) {
  if (options.threads == 1) return branch_scan_serial(branch, p_begin, p_end, options, sink);
  return branch_scan_parallel(branch, p_begin, p_end, options, sink);
}

std::vector<std::int64_t> integer_points_parallel(const Branch& branch, std::int64_t p_lo,
                                                  std::int64_t p_hi, const ScanOptions& options) {
#ifndef _OPENMP
  return integer_points_serial(branch, p_lo, p_hi);
#else
  branch.validate();
  if (p_lo < 0 || p_hi < p_lo) throw std::invalid_argument("integer_points: bad p range");
  const int threads = thread_count(options);
  const std::int64_t count = p_hi - p_lo + 1;
  const std::int64_t chunk = (count + threads - 1) / threads;
  std::vector<std::vector<std::int64_t>> parts(static_cast<std::size_t>(threads));
#pragma omp parallel for schedule(static, 1) num_threads(threads)
  for (int t = 0; t < threads; ++t) {
    const std::int64_t lo = p_lo + t * chunk;
    const std::int64_t hi = std::min(p_hi, lo + chunk - 1);
    if (lo <= hi) parts[static_cast<std::size_t>(t)] = integer_points_serial(branch, lo, hi);
  }
  std::vector<std::int64_t> points;
  for (auto& part : parts) points.insert(points.end(), part.begin(), part.end());
  return points;
#endif
}

std::vector<std::int64_t> integer_points(const Branch& branch, std::int64_t p_lo,
                                         std::int64_t p_hi, const ScanOptions& options) {
  if (options.threads == 1) return integer_points_serial(branch, p_lo, p_hi);
  return integer_points_parallel(branch, p_lo, p_hi, options);
}

std::vector<BranchSolution> brute_force_solutions(int power, std::int64_t coeff,
                                                  std::int64_t x_prime_max, std::int64_t p_max,
                                                  const ScanOptions& options,
                                                  std::uint64_t budget) {
  if (power < 2 || coeff < 1 || x_prime_max < 1 || p_max < 0) {
    throw std::invalid_argument("brute_force_solutions: bad search bounds");
  }
  const std::uint64_t work =
      static_cast<std::uint64_t>(x_prime_max) * static_cast<std::uint64_t>(p_max + 1);
  if (work > budget) {
    throw BudgetExceeded("brute_force_solutions: " + std::to_string(work) +
                         " candidate points exceed the budget of " + std::to_string(budget));
  }
  std::vector<std::vector<BranchSolution>> parts(static_cast<std::size_t>(x_prime_max));
  const bool serial = options.threads == 1;
  (void)serial;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(options)) if (!serial)
#endif
  for (std::int64_t xp = 1; xp <= x_prime_max; ++xp) {
    const Branch branch{xp, power, coeff};
    std::vector<BranchSolution> local;
    for (std::int64_t p : integer_points_serial(branch, 0, p_max)) {
      BranchSolution solution;
      solution.x_prime = xp;
      solution.p = p;
      solution.z = integer_nth_root(branch_value_pow(branch, p),
                                    static_cast<unsigned>(power)).first;
      local.push_back(std::move(solution));
    }
    parts[static_cast<std::size_t>(xp - 1)] = std::move(local);
  }
  std::vector<BranchSolution> solutions;
  for (auto& part : parts) {
    solutions.insert(solutions.end(), std::make_move_iterator(part.begin()),
                     std::make_move_iterator(part.end()));
  }
  return solutions;
}

}  // namespace diffseq
