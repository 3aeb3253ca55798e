#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "multree/reduce.hpp"
#include "multree/tree.hpp"

namespace multree {

enum class Classification { NoInformation, SinglyMRF, SecondStepSingly };

std::string_view to_string(Classification c);

/// Drops every leaf whose label occurs more than once, then contracts the
/// internal edges left without quartets. A result that resolves no quartet
/// is returned as the empty tree. Meant for maximally reduced inputs.
MulTree to_singly_labeled(const MulTree& mrf);

struct PipelineOutcome {
  Classification classification = Classification::NoInformation;
  MulTree mrf;
  /// Present unless the tree ended with no information.
  std::optional<MulTree> singly;
  ReductionReport report;
  std::size_t input_labels = 0;
  std::size_t mrf_labels = 0;
  std::size_t singly_labels = 0;
  std::size_t mul_labels_input = 0;
  double taxon_loss_step1_pct = 0.0;
  double taxon_loss_total_pct = 0.0;
  /// Share of input labels occurring more than once: the loss from simply
  /// deleting every repeated label up front.
  double naive_loss_pct = 0.0;
  std::size_t node_count_input = 0;
  std::size_t node_count_singly = 0;
};

/// Classifies a tree from its MRF and fills in the loss statistics.
PipelineOutcome classify_and_measure(const MulTree& input, const MulTree& mrf, const ReductionReport& report);

/// reduce_to_mrf followed by classify_and_measure.
PipelineOutcome run_pipeline(const MulTree& input);

struct EdgeLossMetrics {
  std::size_t node_count_input = 0;
  std::size_t node_count_singly = 0;
  /// 2 x taxa: about the node count of a fully resolved tree on those taxa.
  std::size_t reference_node_count = 0;
  double ratio = 0.0;  // node_count_singly / reference_node_count
};

/// Empty for a degenerate (empty) singly-labeled tree.
std::optional<EdgeLossMetrics> edge_loss_metrics(const MulTree& input, const MulTree& singly);

}  // namespace multree
