#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace multree {

using NodeId = std::uint32_t;
using LabelId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();
inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

/// An undirected edge named by its two endpoints. Orientation matters only to
/// callers that ask for "the u side" or "the v side".
struct Edge {
  NodeId u = kNoNode;
  NodeId v = kNoNode;

  Edge reversed() const { return {v, u}; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/**
 * Unrooted multi-labeled tree.
 *
 * Leaves are the nodes that carry a label; every other node is internal.
 * Several leaves may share one label. The label set M is the set of labels
 * with at least one live leaf, so pruning the last copy of a label removes it
 * from M while the name stays interned (label ids never change).
 *
 * Node ids are stable across edits: removed nodes leave a dead slot behind.
 * After normalization every internal node has degree >= 3; trees with at most
 * two leaves have no internal nodes at all (a lone leaf, or two leaves joined
 * by an edge). The empty tree has no nodes.
 */
class MulTree {
 public:
  MulTree() = default;

  // Construction.
  LabelId intern(std::string_view name);
  NodeId add_internal();
  NodeId add_leaf(LabelId label);
  NodeId add_leaf(std::string_view name) { return add_leaf(intern(name)); }
  void connect(NodeId a, NodeId b);

  // Node queries.
  bool alive(NodeId n) const { return n < nodes_.size() && nodes_[n].alive; }
  bool is_leaf(NodeId n) const { return nodes_[n].label != kNoLabel; }
  bool is_internal(NodeId n) const { return nodes_[n].label == kNoLabel; }
  LabelId label(NodeId n) const { return nodes_[n].label; }
  std::span<const NodeId> neighbors(NodeId n) const { return nodes_[n].adj; }
  std::size_t degree(NodeId n) const { return nodes_[n].adj.size(); }
  bool adjacent(NodeId a, NodeId b) const;

  /// One past the largest node id ever issued; dead ids below it are skipped
  /// by every enumeration.
  std::size_t id_bound() const { return nodes_.size(); }
  std::size_t node_count() const { return live_nodes_; }
  std::size_t leaf_count() const { return live_leaves_; }
  std::size_t edge_count() const { return live_nodes_ == 0 ? 0 : live_nodes_ - 1; }
  bool empty() const { return live_nodes_ == 0; }

  std::vector<NodeId> nodes() const;
  std::vector<NodeId> leaves() const;
  std::vector<NodeId> internal_nodes() const;
  /// Every edge once, with u < v.
  std::vector<Edge> edges() const;
  /// Edges whose endpoints are both internal.
  std::vector<Edge> internal_edges() const;
  bool is_internal_edge(Edge e) const;
  /// A pendant node is an internal node adjacent to at least one leaf.
  bool is_pendant_node(NodeId n) const;

  // Labels.
  std::size_t label_universe() const { return names_.size(); }
  const std::string& label_name(LabelId l) const { return names_[l]; }
  std::optional<LabelId> find_label(std::string_view name) const;
  std::size_t multiplicity(LabelId l) const { return l < mult_.size() ? mult_[l] : 0; }
  /// |M|: labels with at least one live leaf.
  std::size_t label_count() const { return live_labels_; }
  /// The label set M, in id order.
  std::vector<LabelId> labels() const;
  std::vector<NodeId> leaves_with_label(LabelId l) const;
  bool is_singly_labeled() const { return live_labels_ == live_leaves_; }
  const std::string& name_of(NodeId leaf) const { return names_[nodes_[leaf].label]; }

  // Edits.

  /// Deletes a leaf. If its neighbor is left with degree two it is suppressed
  /// and its two remaining neighbors are joined; an internal neighbor left
  /// with degree one is removed as well.
  void prune_leaf(NodeId leaf);

  /// Contracts the internal edge (keep, gone): `gone` disappears and its other
  /// neighbors are attached to `keep` at the position `gone` occupied.
  /// Returns `keep`. Throws std::invalid_argument on a pendant or missing edge.
  NodeId contract_edge(NodeId keep, NodeId gone);

  /// Removes a leaf without any clean-up of its neighbor. Used by callers
  /// that delete several leaves at one node and normalize afterwards.
  void detach_leaf(NodeId leaf);

  void relabel(NodeId leaf, LabelId label);

  /// Inserts a new internal node in the middle of edge (a, b) and returns it.
  /// The new node has degree two until something is attached to it.
  NodeId subdivide(NodeId a, NodeId b);

  /// Suppresses degree-2 internal nodes and removes internal nodes of degree
  /// 0 or 1, everywhere in the tree.
  void normalize();
  /// Same clean-up started from one node, following the cascade.
  void normalize_at(NodeId n);

  /// Copy with dead slots dropped and ids renumbered densely. Label ids and
  /// names are kept as they are.
  MulTree compacted() const;

 private:
  struct Node {
    std::vector<NodeId> adj;
    LabelId label = kNoLabel;
    bool alive = true;
  };

  void kill(NodeId n);
  void replace_neighbor(NodeId n, NodeId from, NodeId to);
  void erase_neighbor(NodeId n, NodeId which);

  std::vector<Node> nodes_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, LabelId> index_;
  std::vector<std::size_t> mult_;
  std::size_t live_nodes_ = 0;
  std::size_t live_leaves_ = 0;
  std::size_t live_labels_ = 0;
};

/// Value-returning forms of the two elementary edits.
MulTree prune_leaf(MulTree tree, NodeId leaf);
MulTree contract_edge(MulTree tree, Edge e);

/// Nodes on the unique path from `from` to `to`, both included.
std::vector<NodeId> tree_path(const MulTree& tree, NodeId from, NodeId to);

/// All nodes in the component of `start` once the edge (start, blocked) is
/// removed. Pass kNoNode as `blocked` for the whole tree.
std::vector<NodeId> side_nodes(const MulTree& tree, NodeId start, NodeId blocked);

// Canonical form.

/// Order-invariant encoding: the tree rooted at its center (or at the middle
/// of its central edge) written as Newick with children sorted by their own
/// encodings. Equal encodings <=> isomorphic as labeled unrooted trees.
struct CanonicalForm {
  std::string encoding;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const MulTree& tree);
bool is_isomorphic(const MulTree& a, const MulTree& b);

/// Label text as it must appear in Newick: bare when safe, otherwise
/// single-quoted with embedded quotes doubled.
std::string newick_label(std::string_view name);

}  // namespace multree
