#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diffseq/scan.hpp"

namespace diffseq {

enum class ReportFormat { JsonLines, Csv, Pretty };

// Accepts "json-lines", "csv", "pretty-table" (and "pretty").
ReportFormat parse_format(const std::string& name);

// Serialized scan row. Interval endpoints are rendered as fixed-point
// decimals at the declared digit count, lo rounded down and hi rounded up,
// so the printed interval still encloses the exact value and the rendering
// is bit-exact reproducible.
struct ScanRecordRow {
  std::int64_t x_prime = 0;
  int power = 0;
  std::int64_t coeff = 0;
  std::int64_t p = 0;
  std::string zn;
  bool is_integer = false;
  std::string step_lo;
  std::string step_hi;
  std::string verdict_lower;
  std::string verdict_upper;
  std::string verdict_monotone;
  unsigned bits = 0;

  bool operator==(const ScanRecordRow&) const = default;
};

ScanRecordRow make_scan_row(const Branch& branch, const StepCertificate& rec, unsigned digits);

// Fixed CSV column order (also the json-lines key order):
// x_prime,power,coeff,p,zn,is_integer,step_lo,step_hi,
// verdict_lower,verdict_upper,verdict_monotone,bits
extern const char* const kScanCsvHeader;

// Streams scan records in one of the three formats, flushing every 10^4
// rows so long scans checkpoint as they go.
class ScanReportWriter {
 public:
  ScanReportWriter(std::ostream& out, ReportFormat format, unsigned digits);

  void write(const Branch& branch, const StepCertificate& rec);
  void write_summary(const ScanSummary& summary, std::int64_t min_gap_required,
                     std::uint64_t seed, const PrecisionPolicy& policy);

 private:
  std::ostream& out_;
  ReportFormat format_;
  unsigned digits_;
  std::uint64_t rows_written_ = 0;
};

// Re-parses a json-lines scan report (summary records are skipped).
std::vector<ScanRecordRow> parse_scan_json_lines(std::istream& in);

void render_gap_audit(std::ostream& out, const GapAuditReport& report, ReportFormat format);

}  // namespace diffseq
