#include "io/report.hpp"

#include <algorithm>
#include <sstream>

namespace fukaya::io {

namespace {

// Tabs and newlines would break the TSV layout.
std::string cell(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

std::vector<std::string> fields(const ReportRow& r) {
  return {cell(r.graph), cell(r.check), cell(r.side_a), cell(r.side_b), statesum::verdict_name(r.verdict)};
}

const std::vector<std::string> kHeader{"graph", "check", "sideA", "sideB", "verdict"};

// Display width, counting UTF-8 code points.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

}  // namespace

int Report::exit_code() const {
  for (const auto& r : rows_)
    if (r.verdict == statesum::Verdict::Fail) return 1;
  return 0;
}

std::string Report::to_tsv() const {
  std::ostringstream os;
  auto line = [&os](const std::vector<std::string>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "\t" : "") << f[i];
    os << "\n";
  };
  line(kHeader);
  for (const auto& r : rows_) line(fields(r));
  return os.str();
}

std::string Report::to_text() const {
  std::vector<std::vector<std::string>> table{kHeader};
  for (const auto& r : rows_) table.push_back(fields(r));
  std::vector<std::size_t> widths(kHeader.size(), 0);
  for (const auto& row : table)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  std::ostringstream os;
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << row[i];
      if (i + 1 < row.size()) os << std::string(widths[i] - width(row[i]) + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string pair_text(const algebra::HomologySummary& h) { return "(" + h.describe(0) + ", " + h.describe(1) + ")"; }

ReportRow comparison_row(const std::string& graph, const std::string& check, const statesum::Comparison& c) {
  return {graph, check, pair_text(c.side_a), pair_text(c.side_b), c.verdict};
}

}  // namespace fukaya::io
