#include "multree/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace multree {

namespace {

std::vector<bool> labels_present(const MulTree& tree, NodeId start, NodeId blocked) {
  std::vector<bool> seen(tree.label_universe(), false);
  for (NodeId n : side_nodes(tree, start, blocked))
    if (tree.is_leaf(n)) seen[tree.label(n)] = true;
  return seen;
}

}  // namespace

EdgePartition edge_label_partition(const MulTree& tree, Edge e) {
  if (!tree.adjacent(e.u, e.v)) throw std::invalid_argument("edge_label_partition: not an edge");
  const auto on_u = labels_present(tree, e.u, e.v);
  const auto on_v = labels_present(tree, e.v, e.u);
  EdgePartition p;
  p.edge = e;
  for (LabelId l : tree.labels()) {
    if (on_u[l] && on_v[l]) p.common.push_back(l);
    else if (on_u[l]) p.m_u.push_back(l);
    else p.m_v.push_back(l);
  }
  return p;
}

void CountTable::on_contract(NodeId keep, NodeId gone, const std::vector<NodeId>& moved) {
  for (NodeId z : moved) {
    auto out = map_.find(key(gone, z));
    auto in = map_.find(key(z, gone));
    if (out != map_.end()) {
      map_[key(keep, z)] = out->second;
      map_.erase(key(gone, z));
    }
    if (in != map_.end()) {
      map_[key(z, keep)] = in->second;
      map_.erase(key(z, gone));
    }
  }
  erase_edge(keep, gone);
}

CountTable distinct_label_counts(const MulTree& tree) {
  const std::size_t total = tree.label_count();
  CountTable table(total);
  if (tree.node_count() < 2) return table;

  // Root anywhere; leaf counts below each node decide which side is smaller.
  const auto all = tree.nodes();
  const NodeId root = all.front();
  std::vector<NodeId> parent(tree.id_bound(), kNoNode);
  std::vector<std::size_t> below(tree.id_bound(), 0);
  std::vector<NodeId> order;
  order.reserve(all.size());
  std::vector<NodeId> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    order.push_back(n);
    for (NodeId m : tree.neighbors(n)) {
      if (m == parent[n]) continue;
      parent[m] = n;
      stack.push_back(m);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (tree.is_leaf(*it)) below[*it] += 1;
    if (*it != root) below[parent[*it]] += below[*it];
  }
  const std::size_t leaves = tree.leaf_count();

  std::vector<std::uint32_t> tally(tree.label_universe(), 0);
  std::vector<LabelId> touched;
  std::vector<std::pair<NodeId, NodeId>> walk;
  for (NodeId child : order) {
    if (child == root) continue;
    const NodeId par = parent[child];
    // Traverse the side holding fewer leaves: the child's subtree, or the
    // rest of the tree seen from the parent.
    NodeId near = child, far = par;
    if (below[child] * 2 > leaves) std::swap(near, far);

    touched.clear();
    walk.assign(1, {near, far});
    while (!walk.empty()) {
      auto [n, from] = walk.back();
      walk.pop_back();
      if (tree.is_leaf(n)) {
        const LabelId l = tree.label(n);
        if (tally[l]++ == 0) touched.push_back(l);
      }
      for (NodeId m : tree.neighbors(n))
        if (m != from) walk.emplace_back(m, n);
    }
    std::size_t exclusive = 0;
    for (LabelId l : touched) {
      if (tally[l] == tree.multiplicity(l)) ++exclusive;
      tally[l] = 0;
    }
    // distinct labels on near's side, and on far's side = everything not
    // exclusive to near's side.
    table.set(far, near, touched.size());
    table.set(near, far, total - exclusive);
  }
  return table;
}

}  // namespace multree
