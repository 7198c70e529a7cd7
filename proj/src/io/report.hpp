#pragma once

#include "exact_algebra/complex.hpp"
#include "state_sum/verify.hpp"

#include <string>
#include <vector>

namespace fukaya::io {

struct ReportRow {
  std::string graph;
  std::string check;
  std::string side_a;
  std::string side_b;
  statesum::Verdict verdict = statesum::Verdict::Fail;
};

class Report {
 public:
  void add(ReportRow row) { rows_.push_back(std::move(row)); }
  void append(const Report& other) { rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end()); }
  const std::vector<ReportRow>& rows() const { return rows_; }

  /// 1 if any row failed, else 0.
  int exit_code() const;
  bool passed() const { return exit_code() == 0; }

  /// Header line then one tab-separated row per check.
  std::string to_tsv() const;
  /// Aligned columns for terminals.
  std::string to_text() const;

 private:
  std::vector<ReportRow> rows_;
};

/// "(Z^2, Z)" for degrees 0 and 1.
std::string pair_text(const algebra::HomologySummary& h);

ReportRow comparison_row(const std::string& graph, const std::string& check, const statesum::Comparison& c);

}  // namespace fukaya::io
