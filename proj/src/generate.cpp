#include "multree/generate.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace multree {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

// `distinct` labels, `leaves` leaves in total, no label on more than
// `max_mult` leaves.
MulTree build(std::mt19937_64& rng, std::size_t leaves, std::size_t distinct, std::size_t max_mult,
              double contract_probability) {
  MulTree tree;
  if (leaves == 0) return tree;
  std::vector<LabelId> label(distinct);
  for (std::size_t i = 0; i < distinct; ++i) label[i] = tree.intern("t" + std::to_string(i));

  // Random binary topology on the distinct labels.
  std::vector<Edge> edges;
  if (distinct == 1) {
    tree.add_leaf(label[0]);
  } else if (distinct == 2) {
    const NodeId a = tree.add_leaf(label[0]), b = tree.add_leaf(label[1]);
    tree.connect(a, b);
    edges.push_back({a, b});
  } else {
    const NodeId c = tree.add_internal();
    for (std::size_t i = 0; i < 3; ++i) {
      const NodeId l = tree.add_leaf(label[i]);
      tree.connect(c, l);
      edges.push_back({c, l});
    }
    for (std::size_t i = 3; i < distinct; ++i) {
      const std::size_t k = pick(rng, edges.size());
      const Edge e = edges[k];
      const NodeId w = tree.subdivide(e.u, e.v);
      const NodeId l = tree.add_leaf(label[i]);
      tree.connect(w, l);
      edges[k] = {e.u, w};
      edges.push_back({w, e.v});
      edges.push_back({w, l});
    }
  }

  if (contract_probability > 0.0) {
    for (const Edge& e : tree.internal_edges())
      if (tree.adjacent(e.u, e.v) && coin(rng, contract_probability)) tree.contract_edge(e.u, e.v);
    edges = tree.edges();
  }

  // Extra copies of random labels.
  std::vector<std::size_t> used(distinct, 1);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < distinct; ++i)
    if (used[i] < max_mult) open.push_back(i);
  std::vector<NodeId> internal = tree.internal_nodes();
  for (std::size_t added = distinct; added < leaves && !open.empty(); ++added) {
    const std::size_t slot = pick(rng, open.size());
    const std::size_t li = open[slot];
    if (++used[li] >= max_mult) {
      open[slot] = open.back();
      open.pop_back();
    }
    const NodeId l = tree.add_leaf(label[li]);
    if (edges.empty()) {
      // Only a lone leaf so far.
      const NodeId other = tree.leaves().front() == l ? tree.leaves().back() : tree.leaves().front();
      tree.connect(other, l);
      edges.push_back({other, l});
    } else if (!internal.empty() && coin(rng, 0.5)) {
      const NodeId at = internal[pick(rng, internal.size())];
      tree.connect(at, l);
      edges.push_back({at, l});
    } else {
      const std::size_t k = pick(rng, edges.size());
      const Edge e = edges[k];
      const NodeId w = tree.subdivide(e.u, e.v);
      tree.connect(w, l);
      edges[k] = {e.u, w};
      edges.push_back({w, e.v});
      edges.push_back({w, l});
      internal.push_back(w);
    }
  }
  return tree.compacted();
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

MulTree random_multree(std::mt19937_64& rng, std::size_t leaves, std::size_t max_multiplicity,
                       double contract_probability) {
  max_multiplicity = std::max<std::size_t>(1, max_multiplicity);
  if (leaves == 0) return {};
  const std::size_t lo = ceil_div(leaves, max_multiplicity);
  const std::size_t distinct = std::uniform_int_distribution<std::size_t>(lo, leaves)(rng);
  return build(rng, leaves, distinct, max_multiplicity, contract_probability);
}

MulTree random_multree(std::mt19937_64& rng, const GeneratorConfig& config) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(config.min_leaves, config.max_leaves)(rng);
  return random_multree(rng, n, config.max_multiplicity, config.contract_probability);
}

MulTree random_singly_tree(std::mt19937_64& rng, std::size_t leaves, double contract_probability) {
  return build(rng, leaves, leaves, 1, contract_probability);
}

MulTree random_multree_fixed(std::mt19937_64& rng, std::size_t leaves, std::size_t multiplicity) {
  multiplicity = std::max<std::size_t>(1, multiplicity);
  if (leaves == 0) return {};
  return build(rng, leaves, ceil_div(leaves, multiplicity), multiplicity, 0.0);
}

}  // namespace multree
