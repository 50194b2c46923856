// Times the serial reference kernels against the OpenMP production kernels
// on identical inputs and checks that they produce identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "diffseq/scan.hpp"

using namespace diffseq;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct BenchResult {
  double serial_s = 0.0;
  double parallel_s = 0.0;
  bool identical = false;
};

BenchResult bench_certify(const Branch& branch, std::int64_t p_max) {
  ScanOptions serial_opts;
  serial_opts.threads = 1;
  std::vector<std::pair<std::int64_t, unsigned>> serial_digest;
  auto t0 = std::chrono::steady_clock::now();
  auto s1 = branch_scan_serial(branch, 0, p_max, serial_opts,
                               [&](const StepCertificate& r) {
                                 serial_digest.emplace_back(r.p, r.bits_used);
                               });
  const double serial_s = seconds_since(t0);

  std::vector<std::pair<std::int64_t, unsigned>> parallel_digest;
  t0 = std::chrono::steady_clock::now();
  auto s2 = branch_scan_parallel(branch, 0, p_max, ScanOptions{},
                                 [&](const StepCertificate& r) {
                                   parallel_digest.emplace_back(r.p, r.bits_used);
                                 });
  const double parallel_s = seconds_since(t0);

  const bool identical = serial_digest == parallel_digest && s1.total == s2.total &&
                         s1.lower_proved == s2.lower_proved &&
                         s1.upper_proved == s2.upper_proved &&
                         s1.integer_points == s2.integer_points;
  return {serial_s, parallel_s, identical};
}

BenchResult bench_integer_points(const Branch& branch, std::int64_t p_max) {
  auto t0 = std::chrono::steady_clock::now();
  auto serial = integer_points_serial(branch, 0, p_max);
  const double serial_s = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto parallel = integer_points_parallel(branch, 0, p_max);
  const double parallel_s = seconds_since(t0);
  return {serial_s, parallel_s, serial == parallel};
}

BenchResult bench_brute_force(int power, std::int64_t x_max, std::int64_t p_max) {
  ScanOptions serial_opts;
  serial_opts.threads = 1;
  auto t0 = std::chrono::steady_clock::now();
  auto serial = brute_force_solutions(power, 1, x_max, p_max, serial_opts);
  const double serial_s = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  auto parallel = brute_force_solutions(power, 1, x_max, p_max, ScanOptions{});
  const double parallel_s = seconds_since(t0);
  bool identical = serial.size() == parallel.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i) {
    identical = serial[i].x_prime == parallel[i].x_prime && serial[i].p == parallel[i].p &&
                serial[i].z == parallel[i].z;
  }
  return {serial_s, parallel_s, identical};
}

void report(const char* name, const BenchResult& r) {
  std::printf("%-34s %9.3fs %9.3fs %7.2fx   %s\n", name, r.serial_s, r.parallel_s,
              r.serial_s / (r.parallel_s > 0 ? r.parallel_s : 1e-9),
              r.identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  std::int64_t scale = argc > 1 ? std::atoll(argv[1]) : 1;
#ifdef _OPENMP
  std::printf("OpenMP threads: %d, scale: %lld\n", omp_get_max_threads(),
              static_cast<long long>(scale));
#else
  std::printf("OpenMP unavailable: parallel lane falls back to serial, scale: %lld\n",
              static_cast<long long>(scale));
#endif
  std::printf("%-34s %10s %10s %8s   %s\n", "kernel", "serial", "parallel", "speedup", "check");

  report("certify n=2 x'=1 p<=2000*s", bench_certify(Branch{1, 2, 1}, 2000 * scale));
  report("certify n=7 x'=13 p<=1000*s", bench_certify(Branch{13, 7, 1}, 1000 * scale));
  report("integer points n=2 p<=2e6*s",
         bench_integer_points(Branch{7, 2, 1}, 2000000 * scale));
  report("integer points n=5 p<=2e5*s",
         bench_integer_points(Branch{3, 5, 1}, 200000 * scale));
  report("brute force n=2 x'<=40 p<=5e4*s", bench_brute_force(2, 40, 50000 * scale));
  return 0;
}
