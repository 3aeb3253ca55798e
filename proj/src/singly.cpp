#include "multree/singly.hpp"

#include "multree/partition.hpp"

namespace multree {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::NoInformation: return "NoInformation";
    case Classification::SinglyMRF: return "SinglyMRF";
    case Classification::SecondStepSingly: return "SecondStepSingly";
  }
  return "?";
}

MulTree to_singly_labeled(const MulTree& mrf) {
  MulTree tree = mrf;
  for (NodeId leaf : tree.leaves()) {
    if (!tree.alive(leaf)) continue;
    if (mrf.multiplicity(tree.label(leaf)) >= 2) tree.prune_leaf(leaf);
  }
  auto [reduced, counts] = preprocess(std::move(tree));
  if (reduced.internal_edges().empty()) return MulTree{};
  return std::move(reduced);
}

PipelineOutcome classify_and_measure(const MulTree& input, const MulTree& mrf, const ReductionReport& report) {
  PipelineOutcome out;
  out.mrf = mrf;
  out.report = report;
  out.input_labels = input.label_count();
  out.mrf_labels = mrf.label_count();
  out.node_count_input = input.node_count();
  for (LabelId l : input.labels())
    if (input.multiplicity(l) >= 2) ++out.mul_labels_input;

  if (!mrf.empty()) {
    MulTree singly = mrf.is_singly_labeled() ? mrf : to_singly_labeled(mrf);
    if (!singly.empty()) {
      out.classification = mrf.is_singly_labeled() ? Classification::SinglyMRF : Classification::SecondStepSingly;
      out.singly_labels = singly.label_count();
      out.node_count_singly = singly.node_count();
      out.singly = std::move(singly);
    }
  }

  auto pct = [&](std::size_t lost) {
    return out.input_labels == 0 ? 0.0 : 100.0 * double(lost) / double(out.input_labels);
  };
  out.taxon_loss_step1_pct = out.input_labels == 0 ? 0.0 : pct(out.input_labels - out.mrf_labels);
  out.taxon_loss_total_pct = out.input_labels == 0 ? 0.0 : pct(out.input_labels - out.singly_labels);
  out.naive_loss_pct = pct(out.mul_labels_input);
  return out;
}

PipelineOutcome run_pipeline(const MulTree& input) {
  auto [mrf, report] = reduce_to_mrf(input);
  return classify_and_measure(input, mrf, report);
}

std::optional<EdgeLossMetrics> edge_loss_metrics(const MulTree& input, const MulTree& singly) {
  if (singly.empty()) return std::nullopt;
  EdgeLossMetrics m;
  m.node_count_input = input.node_count();
  m.node_count_singly = singly.node_count();
  m.reference_node_count = 2 * singly.label_count();
  m.ratio = double(m.node_count_singly) / double(m.reference_node_count);
  return m;
}

}  // namespace multree
