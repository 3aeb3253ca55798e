#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "multree/newick.hpp"
#include "multree/quartet.hpp"
#include "multree/tree.hpp"

namespace multree::test {

// Two cherries {b,c} on either side of the central edge.
inline constexpr const char* kE1 = "((a,f),(b,c),((b,c),(d,e)));";
// Two pendant nodes sharing the label f.
inline constexpr const char* kE2 = "((a,b,f),(c,d,f));";
// A pendant node carrying l between two pendant nodes that also carry l.
inline constexpr const char* kMiddleCopy = "((a,b,l),l,(d,e,l));";

inline MulTree tree(const char* newick) { return parse_newick(newick); }

inline std::vector<std::string> quartets(const MulTree& t) {
  return information_content(t, {64, true}).to_strings(t);
}

inline NodeId leaf_named(const MulTree& t, const std::string& name, std::size_t nth = 0) {
  for (NodeId n : t.leaves())
    if (t.name_of(n) == name && nth-- == 0) return n;
  return kNoNode;
}

/// Internal node adjacent to the given leaf.
inline NodeId pendant_of(const MulTree& t, NodeId leaf) { return t.neighbors(leaf).front(); }

/// Same tree with node ids and every adjacency list randomly permuted.
inline MulTree shuffled(const MulTree& t, std::mt19937_64& rng) {
  std::vector<NodeId> ids = t.nodes();
  std::shuffle(ids.begin(), ids.end(), rng);
  MulTree out;
  std::vector<NodeId> remap(t.id_bound(), kNoNode);
  for (NodeId n : ids) remap[n] = t.is_leaf(n) ? out.add_leaf(t.label_name(t.label(n))) : out.add_internal();
  auto edges = t.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const Edge& e : edges) out.connect(remap[e.u], remap[e.v]);
  return out;
}

}  // namespace multree::test
