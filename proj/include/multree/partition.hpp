#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "multree/tree.hpp"

namespace multree {

/// Label partition induced by an edge (u, v): labels found only on the u
/// side, only on the v side, and on both. Each set is sorted by label id.
struct EdgePartition {
  Edge edge;
  std::vector<LabelId> m_u;
  std::vector<LabelId> m_v;
  std::vector<LabelId> common;

  bool informative() const { return m_u.size() >= 2 && m_v.size() >= 2; }
};

/// Exact partition by traversing both sides of the edge.
EdgePartition edge_label_partition(const MulTree& tree, Edge e);

/**
 * Per directed edge, the number of distinct labels beyond it.
 *
 * distinct_beyond(u, v) is the number of distinct labels in the component
 * that contains v once (u, v) is removed. The exclusive counts follow:
 * |M_v^{uv}| = |M| - distinct_beyond(v, u).
 *
 * Contracting an edge does not change the leaf sets on either side of any
 * other edge, so a table stays valid across contractions as long as the
 * entries of the vanished node are moved onto the surviving one (see
 * on_contract). Deleting leaves can change counts; callers recompute.
 */
class CountTable {
 public:
  CountTable() = default;
  explicit CountTable(std::size_t label_total) : total_(label_total) {}

  std::size_t label_total() const { return total_; }
  bool contains(NodeId u, NodeId v) const { return map_.count(key(u, v)) != 0; }
  std::size_t distinct_beyond(NodeId u, NodeId v) const { return map_.at(key(u, v)); }
  /// |M_v^{uv}|: labels that occur only on v's side of (u, v).
  std::size_t exclusive_beyond(NodeId u, NodeId v) const { return total_ - distinct_beyond(v, u); }
  bool informative(NodeId u, NodeId v) const {
    return exclusive_beyond(u, v) >= 2 && exclusive_beyond(v, u) >= 2;
  }

  void set(NodeId u, NodeId v, std::size_t distinct) { map_[key(u, v)] = static_cast<std::uint32_t>(distinct); }
  void erase_edge(NodeId u, NodeId v) {
    map_.erase(key(u, v));
    map_.erase(key(v, u));
  }
  /// Re-keys the entries of `gone` after `gone` was merged into `keep`.
  /// `moved` lists the former neighbors of `gone` other than `keep`.
  void on_contract(NodeId keep, NodeId gone, const std::vector<NodeId>& moved);

  std::size_t size() const { return map_.size(); }

 private:
  static std::uint64_t key(NodeId u, NodeId v) { return (std::uint64_t{u} << 32) | v; }

  std::size_t total_ = 0;
  std::unordered_map<std::uint64_t, std::uint32_t> map_;
};

/// Builds the table for every edge in both directions. Each edge costs one
/// traversal of its smaller side with per-label occurrence tallies, so the
/// whole table takes O(n^2) time in the worst case and O(n) working space.
CountTable distinct_label_counts(const MulTree& tree);

}  // namespace multree
