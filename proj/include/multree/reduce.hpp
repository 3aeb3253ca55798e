#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "multree/partition.hpp"
#include "multree/tree.hpp"

namespace multree {

/// How the quartet sets of two adjacent edges relate. "Left" is the first
/// edge passed to compare_adjacent.
enum class DominanceOrdering { LeftSubsumed, RightSubsumed, Equal, Incomparable };

std::string_view to_string(DominanceOrdering d);

struct ReductionReport {
  std::size_t input_leaves = 0;
  std::size_t input_labels = 0;
  std::size_t contractions_uninformative = 0;
  std::size_t contractions_dominated = 0;
  std::size_t subtrees_deleted = 0;
  std::size_t leaves_pruned_nonparticipating = 0;
  std::size_t leaves_pruned_pendant_dup = 0;
  std::size_t leaves_pruned_spanning = 0;
  std::size_t output_leaves = 0;
  std::size_t output_labels = 0;
  double taxon_loss_step1_pct = 0.0;
  /// The input carried no quartet; the result is the empty tree.
  bool no_information = false;
  /// Full phase sequences run, the last of which changed nothing.
  std::size_t passes = 0;
  /// False if the pass cap was hit before a no-change pass.
  bool converged = true;
};

/**
 * Compares Δ(e1) and Δ(e2) for two edges that share a node, in constant time
 * from the count table.
 *
 * With e1 = (u, v) and e2 = (v, w), the labels exclusive to v's side of e1
 * always include the labels exclusive to w's side of e2, so
 * Δ(e1) ⊆ Δ(e2) exactly when |M_v^{uv}| = |M_w^{vw}|, and symmetrically
 * Δ(e2) ⊆ Δ(e1) exactly when |M_v^{vw}| = |M_u^{uv}|. The verdict is only
 * meaningful for informative edges. Throws std::invalid_argument if the
 * edges are not adjacent.
 */
DominanceOrdering compare_adjacent(const CountTable& counts, Edge e1, Edge e2);

/// Builds the count table and contracts every internal edge that resolves
/// no quartet. The returned table is valid for the returned tree.
std::pair<MulTree, CountTable> preprocess(MulTree tree, ReductionReport* report = nullptr);

/// Contracts edges whose quartets are contained in an adjacent edge's.
/// Internal edges branching off the shared node are contracted too, and when
/// the two edges resolve the same quartets the branching subtrees are deleted.
/// Expects a preprocessed tree and its table; the table is kept in sync.
MulTree contract_dominated_paths(MulTree tree, CountTable& counts, ReductionReport* report = nullptr);

/// Per label id (indexed up to label_universe()), whether the label lies in
/// an exclusive side of some informative edge, i.e. takes part in at least one
/// resolved quartet. O(n) per repeated label.
std::vector<bool> participating_labels(const MulTree& tree);

/// Removes leaves whose label takes part in no resolved quartet, as far as
/// that can be done one prunable leaf at a time: everything when the tree
/// resolves nothing, otherwise every leaf of such a label that occurs once.
/// Repeated non-participating labels are reduced by the two later stages.
MulTree prune_nonparticipating_labels(MulTree tree, ReductionReport* report = nullptr);

/// Keeps one leaf per label among the leaves hanging off each pendant node.
MulTree dedup_pendant_leaves(MulTree tree, ReductionReport* report = nullptr);

/// For every repeated label, prunes each copy whose pendant node has degree
/// at least three in the minimal subtree spanning that label's leaves.
MulTree prune_spanning_redundant(MulTree tree, ReductionReport* report = nullptr);

/// Reduces a tree to its maximally reduced form. Phases run in order
/// (contractions, then prunings) and the sequence repeats until a pass changes
/// nothing; inputs without quartet information come back as the empty tree.
std::pair<MulTree, ReductionReport> reduce_to_mrf(const MulTree& tree);

}  // namespace multree
