#include "multree/report.hpp"

#include <cstdio>
#include <json.hpp>

namespace multree {

namespace {

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

// Column name and its value as text, in schema order.
std::vector<std::pair<std::string, std::string>> cells(const ReportRow& r) {
  const ReductionReport& x = r.reduction;
  auto n = [](std::size_t v) { return std::to_string(v); };
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return {
      {"index", n(r.index)},
      {"line", n(r.line)},
      {"classification", std::string(to_string(r.classification))},
      {"input_leaves", n(x.input_leaves)},
      {"input_labels", n(x.input_labels)},
      {"contractions_uninformative", n(x.contractions_uninformative)},
      {"contractions_dominated", n(x.contractions_dominated)},
      {"subtrees_deleted", n(x.subtrees_deleted)},
      {"leaves_pruned_nonparticipating", n(x.leaves_pruned_nonparticipating)},
      {"leaves_pruned_pendant_dup", n(x.leaves_pruned_pendant_dup)},
      {"leaves_pruned_spanning", n(x.leaves_pruned_spanning)},
      {"output_leaves", n(x.output_leaves)},
      {"output_labels", n(x.output_labels)},
      {"taxon_loss_step1_pct", fixed(x.taxon_loss_step1_pct)},
      {"no_information", b(x.no_information)},
      {"passes", n(x.passes)},
      {"converged", b(x.converged)},
      {"mrf_labels", n(r.mrf_labels)},
      {"singly_labels", n(r.singly_labels)},
      {"mul_labels_input", n(r.mul_labels_input)},
      {"taxon_loss_total_pct", fixed(r.taxon_loss_total_pct)},
      {"naive_loss_pct", fixed(r.naive_loss_pct)},
      {"node_count_input", n(r.node_count_input)},
      {"node_count_singly", n(r.node_count_singly)},
      {"reference_node_count", n(r.reference_node_count)},
      {"node_ratio", fixed(r.node_ratio)},
  };
}

nlohmann::ordered_json row_json(const ReportRow& r) {
  const ReductionReport& x = r.reduction;
  nlohmann::ordered_json j;
  j["index"] = r.index;
  j["line"] = r.line;
  j["classification"] = std::string(to_string(r.classification));
  j["input_leaves"] = x.input_leaves;
  j["input_labels"] = x.input_labels;
  j["contractions_uninformative"] = x.contractions_uninformative;
  j["contractions_dominated"] = x.contractions_dominated;
  j["subtrees_deleted"] = x.subtrees_deleted;
  j["leaves_pruned_nonparticipating"] = x.leaves_pruned_nonparticipating;
  j["leaves_pruned_pendant_dup"] = x.leaves_pruned_pendant_dup;
  j["leaves_pruned_spanning"] = x.leaves_pruned_spanning;
  j["output_leaves"] = x.output_leaves;
  j["output_labels"] = x.output_labels;
  j["taxon_loss_step1_pct"] = x.taxon_loss_step1_pct;
  j["no_information"] = x.no_information;
  j["passes"] = x.passes;
  j["converged"] = x.converged;
  j["mrf_labels"] = r.mrf_labels;
  j["singly_labels"] = r.singly_labels;
  j["mul_labels_input"] = r.mul_labels_input;
  j["taxon_loss_total_pct"] = r.taxon_loss_total_pct;
  j["naive_loss_pct"] = r.naive_loss_pct;
  j["node_count_input"] = r.node_count_input;
  j["node_count_singly"] = r.node_count_singly;
  j["reference_node_count"] = r.reference_node_count;
  j["node_ratio"] = r.node_ratio;
  return j;
}

std::vector<std::pair<std::string, std::string>> summary_cells(const ReportSummary& s) {
  auto n = [](std::size_t v) { return std::to_string(v); };
  return {
      {"trees", n(s.trees)},
      {"parse_errors", n(s.parse_errors)},
      {"no_information", n(s.no_information)},
      {"singly_mrf", n(s.singly_mrf)},
      {"second_step_singly", n(s.second_step_singly)},
      {"mean_taxon_loss_step1_pct", fixed(s.mean_taxon_loss_step1_pct)},
      {"mean_taxon_loss_total_pct", fixed(s.mean_taxon_loss_total_pct)},
      {"mean_naive_loss_pct", fixed(s.mean_naive_loss_pct)},
      {"unconverged", n(s.unconverged)},
  };
}

}  // namespace

ReportRow make_row(std::size_t index, std::size_t line, const PipelineOutcome& o) {
  ReportRow r;
  r.index = index;
  r.line = line;
  r.classification = o.classification;
  r.reduction = o.report;
  r.mrf_labels = o.mrf_labels;
  r.singly_labels = o.singly_labels;
  r.mul_labels_input = o.mul_labels_input;
  r.taxon_loss_total_pct = o.taxon_loss_total_pct;
  r.naive_loss_pct = o.naive_loss_pct;
  r.node_count_input = o.node_count_input;
  r.node_count_singly = o.node_count_singly;
  if (o.singly) {
    if (auto m = edge_loss_metrics(o.mrf, *o.singly)) {
      r.reference_node_count = m->reference_node_count;
      r.node_ratio = m->ratio;
    }
  }
  return r;
}

ReportSummary summarize(const std::vector<ReportRow>& rows, std::size_t parse_errors) {
  ReportSummary s;
  s.trees = rows.size();
  s.parse_errors = parse_errors;
  for (const ReportRow& r : rows) {
    switch (r.classification) {
      case Classification::NoInformation: ++s.no_information; break;
      case Classification::SinglyMRF: ++s.singly_mrf; break;
      case Classification::SecondStepSingly: ++s.second_step_singly; break;
    }
    s.mean_taxon_loss_step1_pct += r.reduction.taxon_loss_step1_pct;
    s.mean_taxon_loss_total_pct += r.taxon_loss_total_pct;
    s.mean_naive_loss_pct += r.naive_loss_pct;
    if (!r.reduction.converged) ++s.unconverged;
  }
  if (!rows.empty()) {
    const double k = double(rows.size());
    s.mean_taxon_loss_step1_pct /= k;
    s.mean_taxon_loss_total_pct /= k;
    s.mean_naive_loss_pct /= k;
  }
  return s;
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (auto& [k, v] : cells(ReportRow{})) out.push_back(k);
    return out;
  }();
  return names;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows, const ReportSummary& summary) {
  const auto& cols = report_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_field(cols[i]);
  out << "\r\n";
  for (const ReportRow& r : rows) {
    const auto c = cells(r);
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << csv_field(c[i].second);
    out << "\r\n";
  }
  out << "# " << kReportSchemaName << "," << kReportSchemaVersion << "\r\n";
  for (auto& [k, v] : summary_cells(summary)) out << "# " << k << ',' << v << "\r\n";
}

void write_json(std::ostream& out, const std::vector<ReportRow>& rows, const ReportSummary& summary) {
  nlohmann::ordered_json doc;
  doc["schema"] = std::string(kReportSchemaName);
  doc["version"] = kReportSchemaVersion;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const ReportRow& r : rows) doc["rows"].push_back(row_json(r));
  nlohmann::ordered_json s;
  s["trees"] = summary.trees;
  s["parse_errors"] = summary.parse_errors;
  s["no_information"] = summary.no_information;
  s["singly_mrf"] = summary.singly_mrf;
  s["second_step_singly"] = summary.second_step_singly;
  s["mean_taxon_loss_step1_pct"] = summary.mean_taxon_loss_step1_pct;
  s["mean_taxon_loss_total_pct"] = summary.mean_taxon_loss_total_pct;
  s["mean_naive_loss_pct"] = summary.mean_naive_loss_pct;
  s["unconverged"] = summary.unconverged;
  doc["summary"] = std::move(s);
  out << doc.dump(2) << '\n';
}

}  // namespace multree
