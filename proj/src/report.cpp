#include "diffseq/report.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace diffseq {

using ordered_json = nlohmann::ordered_json;

ReportFormat parse_format(const std::string& name) {
  if (name == "json-lines" || name == "jsonl") return ReportFormat::JsonLines;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "pretty-table" || name == "pretty") return ReportFormat::Pretty;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected json-lines, csv, or pretty-table)");
}

ScanRecordRow make_scan_row(const Branch& branch, const StepCertificate& rec, unsigned digits) {
  ScanRecordRow row;
  row.x_prime = branch.x_prime;
  row.power = branch.power;
  row.coeff = branch.coeff;
  row.p = rec.p;
  row.zn = rec.zn.get_str();
  row.is_integer = rec.is_integer;
  row.step_lo = rec.step.lo().to_decimal(digits, RoundMode::Down);
  row.step_hi = rec.step.hi().to_decimal(digits, RoundMode::Up);
  row.verdict_lower = cert_status_name(rec.lower);
  row.verdict_upper = cert_status_name(rec.upper);
  row.verdict_monotone = cert_status_name(rec.monotone);
  row.bits = rec.bits_used;
  return row;
}

const char* const kScanCsvHeader =
    "x_prime,power,coeff,p,zn,is_integer,step_lo,step_hi,"
    "verdict_lower,verdict_upper,verdict_monotone,bits";

namespace {

ordered_json row_to_json(const ScanRecordRow& row) {
  ordered_json j;
  j["type"] = "step";
  j["x_prime"] = row.x_prime;
  j["power"] = row.power;
  j["coeff"] = row.coeff;
  j["p"] = row.p;
  j["zn"] = row.zn;
  j["is_integer"] = row.is_integer;
  j["step_lo"] = row.step_lo;
  j["step_hi"] = row.step_hi;
  j["verdict_lower"] = row.verdict_lower;
  j["verdict_upper"] = row.verdict_upper;
  j["verdict_monotone"] = row.verdict_monotone;
  j["bits"] = row.bits;
  return j;
}

}  // namespace

ScanReportWriter::ScanReportWriter(std::ostream& out, ReportFormat format, unsigned digits)
    : out_(out), format_(format), digits_(digits) {
  if (format_ == ReportFormat::Csv) out_ << kScanCsvHeader << "\n";
  if (format_ == ReportFormat::Pretty) {
    out_ << std::left << std::setw(8) << "p" << std::setw(14) << "z^n" << std::setw(9)
         << "integer" << std::setw(digits_ + 6) << "step_lo" << std::setw(digits_ + 6)
         << "step_hi" << std::setw(10) << "lower" << std::setw(10) << "upper" << std::setw(10)
         << "monotone" << "bits\n";
  }
}

void ScanReportWriter::write(const Branch& branch, const StepCertificate& rec) {
  const ScanRecordRow row = make_scan_row(branch, rec, digits_);
  switch (format_) {
    case ReportFormat::JsonLines:
      out_ << row_to_json(row).dump() << "\n";
      break;
    case ReportFormat::Csv:
      out_ << row.x_prime << ',' << row.power << ',' << row.coeff << ',' << row.p << ','
           << row.zn << ',' << (row.is_integer ? "true" : "false") << ',' << row.step_lo << ','
           << row.step_hi << ',' << row.verdict_lower << ',' << row.verdict_upper << ','
           << row.verdict_monotone << ',' << row.bits << "\n";
      break;
    case ReportFormat::Pretty: {
      std::string zn = row.zn.size() > 12 ? row.zn.substr(0, 9) + "..." : row.zn;
      out_ << std::left << std::setw(8) << row.p << std::setw(14) << zn << std::setw(9)
           << (row.is_integer ? "yes" : "no") << std::setw(digits_ + 6) << row.step_lo
           << std::setw(digits_ + 6) << row.step_hi << std::setw(10) << row.verdict_lower
           << std::setw(10) << row.verdict_upper << std::setw(10) << row.verdict_monotone
           << row.bits << "\n";
      break;
    }
  }
  if (++rows_written_ % 10000 == 0) out_.flush();
}

void ScanReportWriter::write_summary(const ScanSummary& summary, std::int64_t min_gap_required,
                                     std::uint64_t seed, const PrecisionPolicy& policy) {
  const char* grade = summary.conjecture_grade ? "empirical-conjecture" : "lemma-confirmed";
  if (format_ == ReportFormat::JsonLines) {
    ordered_json j;
    j["type"] = "summary";
    j["x_prime"] = summary.branch.x_prime;
    j["power"] = summary.branch.power;
    j["coeff"] = summary.branch.coeff;
    j["p_begin"] = summary.p_begin;
    j["p_end"] = summary.p_end;
    j["total"] = summary.total;
    j["lower_proved"] = summary.lower_proved;
    j["upper_proved"] = summary.upper_proved;
    j["monotone_proved"] = summary.monotone_proved;
    j["monotone_applicable"] = summary.monotone_applicable;
    j["undecided"] = summary.undecided;
    j["violated"] = summary.violated;
    j["undecided_ps"] = summary.undecided_ps;
    j["violated_ps"] = summary.violated_ps;
    j["integer_points"] = summary.integer_points;
    j["min_gap"] = min_gap_required;
    j["grade"] = grade;
    j["digits"] = digits_;
    j["start_bits"] = policy.start_bits;
    j["max_bits"] = policy.max_bits;
    j["seed"] = seed;
    out_ << j.dump() << "\n";
  } else if (format_ == ReportFormat::Csv) {
    out_ << "# summary total=" << summary.total << " lower_proved=" << summary.lower_proved
         << " upper_proved=" << summary.upper_proved
         << " monotone_proved=" << summary.monotone_proved
         << " monotone_applicable=" << summary.monotone_applicable
         << " undecided=" << summary.undecided << " violated=" << summary.violated
         << " integer_points=" << summary.integer_points.size()
         << " min_gap=" << min_gap_required << " grade=" << grade << " seed=" << seed << "\n";
  } else {
    out_ << "---\n"
         << "scanned p in [" << summary.p_begin << ", " << summary.p_end << "] on branch x'="
         << summary.branch.x_prime << " n=" << summary.branch.power
         << " coeff=" << summary.branch.coeff << "\n"
         << "step bounds:  " << summary.lower_proved << "/" << summary.total << " lower, "
         << summary.upper_proved << "/" << summary.total << " upper proved (" << grade << ")\n"
         << "monotone:     " << summary.monotone_proved << "/" << summary.monotone_applicable
         << " proved\n"
         << "undecided:    " << summary.undecided << "\n"
         << "violated:     " << summary.violated << "\n"
         << "integer p:    ";
    if (summary.integer_points.empty()) {
      out_ << "(none)";
    } else {
      for (std::size_t i = 0; i < summary.integer_points.size(); ++i) {
        if (i) out_ << ", ";
        out_ << summary.integer_points[i];
      }
    }
    out_ << "\nmin gap:      " << min_gap_required << "\n";
  }
  out_.flush();
}

std::vector<ScanRecordRow> parse_scan_json_lines(std::istream& in) {
  std::vector<ScanRecordRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const ordered_json j = ordered_json::parse(line);
    if (j.value("type", "") != "step") continue;
    ScanRecordRow row;
    row.x_prime = j.at("x_prime").get<std::int64_t>();
    row.power = j.at("power").get<int>();
    row.coeff = j.at("coeff").get<std::int64_t>();
    row.p = j.at("p").get<std::int64_t>();
    row.zn = j.at("zn").get<std::string>();
    row.is_integer = j.at("is_integer").get<bool>();
    row.step_lo = j.at("step_lo").get<std::string>();
    row.step_hi = j.at("step_hi").get<std::string>();
    row.verdict_lower = j.at("verdict_lower").get<std::string>();
    row.verdict_upper = j.at("verdict_upper").get<std::string>();
    row.verdict_monotone = j.at("verdict_monotone").get<std::string>();
    row.bits = j.at("bits").get<unsigned>();
    rows.push_back(std::move(row));
  }
  return rows;
}

void render_gap_audit(std::ostream& out, const GapAuditReport& report, ReportFormat format) {
  const char* grade = report.conjecture_grade ? "empirical-conjecture" : "lemma-confirmed";
  if (format == ReportFormat::JsonLines) {
    for (std::size_t i = 0; i < report.integer_points.size(); ++i) {
      ordered_json j;
      j["type"] = "integer_point";
      j["x_prime"] = report.branch.x_prime;
      j["power"] = report.branch.power;
      j["coeff"] = report.branch.coeff;
      j["p"] = report.integer_points[i];
      j["gap_from_previous"] = i == 0 ? ordered_json(nullptr)
                                      : ordered_json(report.gaps[i - 1]);
      out << j.dump() << "\n";
    }
    ordered_json j;
    j["type"] = "summary";
    j["x_prime"] = report.branch.x_prime;
    j["power"] = report.branch.power;
    j["coeff"] = report.branch.coeff;
    j["p_max"] = report.p_max;
    j["integer_points"] = report.integer_points;
    j["gaps"] = report.gaps;
    j["min_gap_required"] = report.min_gap_required;
    j["violations"] = report.violations;
    j["grade"] = grade;
    j["pass"] = report.pass();
    out << j.dump() << "\n";
  } else if (format == ReportFormat::Csv) {
    out << "x_prime,power,coeff,p,gap_from_previous\n";
    for (std::size_t i = 0; i < report.integer_points.size(); ++i) {
      out << report.branch.x_prime << ',' << report.branch.power << ',' << report.branch.coeff
          << ',' << report.integer_points[i] << ',';
      if (i == 0) {
        out << "";
      } else {
        out << report.gaps[i - 1];
      }
      out << "\n";
    }
    out << "# summary p_max=" << report.p_max << " points=" << report.integer_points.size()
        << " min_gap_required=" << report.min_gap_required
        << " violations=" << report.violations.size() << " grade=" << grade
        << " pass=" << (report.pass() ? "true" : "false") << "\n";
  } else {
    out << "branch x'=" << report.branch.x_prime << " n=" << report.branch.power
        << " coeff=" << report.branch.coeff << ", p <= " << report.p_max << "\n";
    out << "integer points (" << report.integer_points.size() << "): ";
    for (std::size_t i = 0; i < report.integer_points.size(); ++i) {
      if (i) out << ", ";
      out << report.integer_points[i];
    }
    out << "\ngaps: ";
    if (report.gaps.empty()) {
      out << "(none)";
    } else {
      for (std::size_t i = 0; i < report.gaps.size(); ++i) {
        if (i) out << ", ";
        out << report.gaps[i];
      }
    }
    out << "\nminimum gap required: " << report.min_gap_required << " (" << grade << ")\n";
    out << "violations: " << report.violations.size() << (report.pass() ? " (pass)" : " (FAIL)")
        << "\n";
  }
}

}  // namespace diffseq
