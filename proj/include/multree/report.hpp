#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "multree/singly.hpp"

namespace multree {

/// Bumped whenever a column or key is added, removed or changes meaning.
inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kReportSchemaName = "multree-report";

/// One input tree's numbers, flattened for output.
struct ReportRow {
  std::size_t index = 0;  // 0-based position among the parsed trees
  std::size_t line = 0;   // source line, 0 when generated
  Classification classification = Classification::NoInformation;
  ReductionReport reduction;
  std::size_t mrf_labels = 0;
  std::size_t singly_labels = 0;
  std::size_t mul_labels_input = 0;
  double taxon_loss_total_pct = 0.0;
  double naive_loss_pct = 0.0;
  std::size_t node_count_input = 0;
  std::size_t node_count_singly = 0;
  std::size_t reference_node_count = 0;
  double node_ratio = 0.0;
};

ReportRow make_row(std::size_t index, std::size_t line, const PipelineOutcome& outcome);

/// Corpus averages are means of the per-tree percentages, taken over all
/// trees.
struct ReportSummary {
  std::size_t trees = 0;
  std::size_t parse_errors = 0;
  std::size_t no_information = 0;
  std::size_t singly_mrf = 0;
  std::size_t second_step_singly = 0;
  double mean_taxon_loss_step1_pct = 0.0;
  double mean_taxon_loss_total_pct = 0.0;
  double mean_naive_loss_pct = 0.0;
  std::size_t unconverged = 0;
};

ReportSummary summarize(const std::vector<ReportRow>& rows, std::size_t parse_errors = 0);

/// CSV column names, in order.
const std::vector<std::string>& report_columns();

/// RFC 4180 field: quoted when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view text);

/// Header row, one row per tree, then the summary as '#'-prefixed
/// "key,value" lines.
void write_csv(std::ostream& out, const std::vector<ReportRow>& rows, const ReportSummary& summary);

/// {"schema": ..., "version": ..., "rows": [...], "summary": {...}}
void write_json(std::ostream& out, const std::vector<ReportRow>& rows, const ReportSummary& summary);

}  // namespace multree
