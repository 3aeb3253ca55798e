#include "multree/quartet.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace multree {

Quartet::Quartet(LabelId a, LabelId b, LabelId c, LabelId d) {
  if (a == b || a == c || a == d || b == c || b == d || c == d)
    throw std::invalid_argument("quartet labels must be distinct");
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (std::pair(c, d) < std::pair(a, b)) {
    std::swap(a, c);
    std::swap(b, d);
  }
  ids_ = {a, b, c, d};
}

std::array<LabelId, 4> Quartet::support() const {
  auto s = ids_;
  std::sort(s.begin(), s.end());
  return s;
}

std::string Quartet::to_string(const MulTree& tree) const {
  std::array<std::string, 2> p1{tree.label_name(ids_[0]), tree.label_name(ids_[1])};
  std::array<std::string, 2> p2{tree.label_name(ids_[2]), tree.label_name(ids_[3])};
  std::sort(p1.begin(), p1.end());
  std::sort(p2.begin(), p2.end());
  if (p2 < p1) std::swap(p1, p2);
  return p1[0] + "," + p1[1] + "|" + p2[0] + "," + p2[1];
}

const std::vector<Quartet>& QuartetSet::view() const {
  if (!sorted_) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    sorted_ = true;
  }
  return items_;
}

void QuartetSet::merge(const QuartetSet& other) {
  items_.insert(items_.end(), other.view().begin(), other.view().end());
  sorted_ = false;
}

bool QuartetSet::contains(const Quartet& q) const {
  const auto& v = view();
  return std::binary_search(v.begin(), v.end(), q);
}

bool QuartetSet::includes(const QuartetSet& other) const {
  const auto& a = view();
  const auto& b = other.view();
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

QuartetSet QuartetSet::restricted(const std::function<bool(LabelId)>& keep) const {
  QuartetSet out;
  for (const Quartet& q : view()) {
    const auto& i = q.ids();
    if (keep(i[0]) && keep(i[1]) && keep(i[2]) && keep(i[3])) out.insert(q);
  }
  return out;
}

std::vector<std::string> QuartetSet::to_strings(const MulTree& tree) const {
  std::vector<std::string> out;
  for (const Quartet& q : view()) out.push_back(q.to_string(tree));
  std::sort(out.begin(), out.end());
  return out;
}

void check_oracle_size(const MulTree& tree, const OracleLimits& limits) {
  if (!limits.force && tree.leaf_count() > limits.max_leaves)
    throw OracleSizeError("quartet oracle refuses a tree with " + std::to_string(tree.leaf_count()) +
                          " leaves (limit " + std::to_string(limits.max_leaves) + ")");
}

QuartetSet edge_quartets(const EdgePartition& p) {
  QuartetSet out;
  if (!p.informative()) return out;
  for (std::size_t i = 0; i < p.m_u.size(); ++i)
    for (std::size_t j = i + 1; j < p.m_u.size(); ++j)
      for (std::size_t k = 0; k < p.m_v.size(); ++k)
        for (std::size_t l = k + 1; l < p.m_v.size(); ++l) out.insert(Quartet(p.m_u[i], p.m_u[j], p.m_v[k], p.m_v[l]));
  return out;
}

QuartetSet edge_quartets(const MulTree& tree, Edge e) { return edge_quartets(edge_label_partition(tree, e)); }

QuartetSet information_content(const MulTree& tree, const OracleLimits& limits) {
  check_oracle_size(tree, limits);
  QuartetSet out;
  for (const Edge& e : tree.edges()) out.merge(edge_quartets(tree, e));
  return out;
}

bool has_conflict(const QuartetSet& set) {
  const auto& items = set.items();
  std::vector<std::array<LabelId, 4>> supports;
  supports.reserve(items.size());
  for (const Quartet& q : items) supports.push_back(q.support());
  std::sort(supports.begin(), supports.end());
  return std::adjacent_find(supports.begin(), supports.end()) != supports.end();
}

MulTree relabeled_single_tree(const MulTree& tree) {
  MulTree out = tree;
  for (LabelId l : tree.labels()) {
    if (tree.multiplicity(l) < 2) continue;
    const auto copies = tree.leaves_with_label(l);
    std::size_t counter = 1;
    for (std::size_t i = 1; i < copies.size(); ++i) {
      std::string fresh;
      do {
        fresh = tree.label_name(l) + "#" + std::to_string(counter++);
      } while (out.find_label(fresh));
      out.relabel(copies[i], out.intern(fresh));
    }
  }
  return out;
}

bool is_prunable_oracle(const MulTree& tree, NodeId leaf, const OracleLimits& limits) {
  return information_content(prune_leaf(tree, leaf), limits) == information_content(tree, limits);
}

bool is_contractible_oracle(const MulTree& tree, Edge e, const OracleLimits& limits) {
  return information_content(contract_edge(tree, e), limits) == information_content(tree, limits);
}

bool is_maximally_reduced_oracle(const MulTree& tree, const OracleLimits& limits) {
  const QuartetSet info = information_content(tree, limits);
  for (NodeId leaf : tree.leaves())
    if (information_content(prune_leaf(tree, leaf), limits) == info) return false;
  for (const Edge& e : tree.internal_edges())
    if (information_content(contract_edge(tree, e), limits) == info) return false;
  return true;
}

std::vector<Edge> edges_without_unique_quartet(const MulTree& tree, const OracleLimits& limits) {
  check_oracle_size(tree, limits);
  const auto all = tree.edges();
  std::vector<QuartetSet> delta;
  std::map<Quartet, std::size_t> resolvers;
  for (const Edge& e : all) {
    delta.push_back(edge_quartets(tree, e));
    for (const Quartet& q : delta.back()) ++resolvers[q];
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!tree.is_internal_edge(all[i])) continue;
    const bool unique = std::any_of(delta[i].begin(), delta[i].end(),
                                    [&](const Quartet& q) { return resolvers[q] == 1; });
    if (!unique) out.push_back(all[i]);
  }
  return out;
}

}  // namespace multree
