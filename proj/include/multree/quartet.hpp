#pragma once

// Brute-force implementation of the quartet definitions. Everything here
// materializes quartet sets explicitly and is meant as ground truth for small
// trees, not for production use.

#include <array>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "multree/partition.hpp"
#include "multree/tree.hpp"

namespace multree {

/// Resolved quartet ab|cd over label ids. Stored canonically: each pair
/// sorted, smaller pair first, so ab|cd == dc|ba holds syntactically.
class Quartet {
 public:
  Quartet(LabelId a, LabelId b, LabelId c, LabelId d);

  const std::array<LabelId, 4>& ids() const { return ids_; }
  /// The four labels in increasing order.
  std::array<LabelId, 4> support() const;
  /// ab|cd using the tree's label names, pairs ordered by name.
  std::string to_string(const MulTree& tree) const;

  friend bool operator==(const Quartet&, const Quartet&) = default;
  friend auto operator<=>(const Quartet&, const Quartet&) = default;

 private:
  std::array<LabelId, 4> ids_;
};

/// Sorted set of quartets.
class QuartetSet {
 public:
  QuartetSet() = default;

  void insert(const Quartet& q) { items_.push_back(q), sorted_ = false; }
  void merge(const QuartetSet& other);
  bool contains(const Quartet& q) const;
  bool includes(const QuartetSet& other) const;  // other ⊆ *this
  std::size_t size() const { return view().size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<Quartet>& items() const { return view(); }
  auto begin() const { return view().begin(); }
  auto end() const { return view().end(); }

  QuartetSet restricted(const std::function<bool(LabelId)>& keep) const;
  /// Sorted "ab|cd" strings, for fixtures and diagnostics.
  std::vector<std::string> to_strings(const MulTree& tree) const;

  friend bool operator==(const QuartetSet& a, const QuartetSet& b) { return a.view() == b.view(); }

 private:
  const std::vector<Quartet>& view() const;

  mutable std::vector<Quartet> items_;
  mutable bool sorted_ = true;
};

/// Refuses trees above a leaf budget unless forced.
struct OracleLimits {
  std::size_t max_leaves = 16;
  bool force = false;
};

class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

void check_oracle_size(const MulTree& tree, const OracleLimits& limits = {});

/// Δ(e): quartets ab|cd with {a,b} ⊆ M_u and {c,d} ⊆ M_v.
QuartetSet edge_quartets(const EdgePartition& partition);
QuartetSet edge_quartets(const MulTree& tree, Edge e);

/// Union of Δ over every edge, pendant edges included.
QuartetSet information_content(const MulTree& tree, const OracleLimits& limits = {});

/// True if two quartets on one 4-label set occur (never, for a valid Δ union).
bool has_conflict(const QuartetSet& set);

/// Singly-labeled tree built by keeping the lowest-id leaf of every repeated
/// label and giving each other copy a fresh name "<label>#<k>" that is not
/// already in use. Original label ids are preserved.
MulTree relabeled_single_tree(const MulTree& tree);

bool is_prunable_oracle(const MulTree& tree, NodeId leaf, const OracleLimits& limits = {});
bool is_contractible_oracle(const MulTree& tree, Edge e, const OracleLimits& limits = {});
bool is_maximally_reduced_oracle(const MulTree& tree, const OracleLimits& limits = {});

/// Internal edges that resolve no quartet resolved by any other edge. In a
/// maximally reduced tree this is every internal edge.
std::vector<Edge> edges_without_unique_quartet(const MulTree& tree, const OracleLimits& limits = {});

}  // namespace multree
