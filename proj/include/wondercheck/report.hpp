#pragma once

// Verification sweep over fundamental weights and the row records it emits.

#include <optional>
#include <string>
#include <vector>

#include "wondercheck/bigint.hpp"
#include "wondercheck/bounds.hpp"
#include "wondercheck/rootsys.hpp"
#include "wondercheck/tables.hpp"

namespace wondercheck {

struct ReportRow {
  std::string type;
  std::size_t weight_index = 0;  ///< 1-based, Bourbaki
  std::int64_t comark = 0;
  BigCount table_binomial = 0;
  BigCount required_count = 0;
  BigCount end_dim = 0;
  std::optional<BigCount> h0_dim;
  std::int64_t dense_lower_bound = 0;
  bool pass = false;
  std::vector<std::string> notes;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct SweepOptions {
  SectionMode mode = SectionMode::End;
  /// 0 picks the hardware concurrency.
  unsigned jobs = 1;
};

/// One row per (type, fundamental weight), ordered by the input type order
/// then by weight index whatever the number of jobs.
std::vector<ReportRow> run_sweep(const std::vector<SimpleType>& types, const SweepOptions& options = {});

bool all_pass(const std::vector<ReportRow>& rows);

/// Text, CSV and JSON encodings; each has a matching parser and round-trips
/// every field exactly. LaTeX is reserved for the tables.
std::string rows_to_string(const std::vector<ReportRow>& rows, OutputFormat format);
std::vector<ReportRow> rows_from_string(const std::string& text, OutputFormat format);

}  // namespace wondercheck
