#include "multree/tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace multree {

LabelId MulTree::intern(std::string_view name) {
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto id = static_cast<LabelId>(names_.size());
  names_.push_back(key);
  mult_.push_back(0);
  index_.emplace(std::move(key), id);
  return id;
}

NodeId MulTree::add_internal() {
  nodes_.push_back(Node{});
  ++live_nodes_;
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId MulTree::add_leaf(LabelId label) {
  if (label >= names_.size()) throw std::out_of_range("add_leaf: unknown label id");
  Node n;
  n.label = label;
  nodes_.push_back(std::move(n));
  ++live_nodes_;
  ++live_leaves_;
  if (mult_[label]++ == 0) ++live_labels_;
  return static_cast<NodeId>(nodes_.size() - 1);
}

void MulTree::connect(NodeId a, NodeId b) {
  if (!alive(a) || !alive(b) || a == b) throw std::invalid_argument("connect: bad endpoints");
  nodes_[a].adj.push_back(b);
  nodes_[b].adj.push_back(a);
}

bool MulTree::adjacent(NodeId a, NodeId b) const {
  if (!alive(a) || !alive(b)) return false;
  const auto& adj = nodes_[a].adj;
  return std::find(adj.begin(), adj.end(), b) != adj.end();
}

std::vector<NodeId> MulTree::nodes() const {
  std::vector<NodeId> out;
  out.reserve(live_nodes_);
  for (NodeId n = 0; n < nodes_.size(); ++n)
    if (nodes_[n].alive) out.push_back(n);
  return out;
}

std::vector<NodeId> MulTree::leaves() const {
  std::vector<NodeId> out;
  out.reserve(live_leaves_);
  for (NodeId n = 0; n < nodes_.size(); ++n)
    if (nodes_[n].alive && is_leaf(n)) out.push_back(n);
  return out;
}

std::vector<NodeId> MulTree::internal_nodes() const {
  std::vector<NodeId> out;
  for (NodeId n = 0; n < nodes_.size(); ++n)
    if (nodes_[n].alive && is_internal(n)) out.push_back(n);
  return out;
}

std::vector<Edge> MulTree::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId n = 0; n < nodes_.size(); ++n) {
    if (!nodes_[n].alive) continue;
    for (NodeId m : nodes_[n].adj)
      if (n < m) out.push_back({n, m});
  }
  return out;
}

std::vector<Edge> MulTree::internal_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges())
    if (is_internal_edge(e)) out.push_back(e);
  return out;
}

bool MulTree::is_internal_edge(Edge e) const {
  return adjacent(e.u, e.v) && is_internal(e.u) && is_internal(e.v);
}

bool MulTree::is_pendant_node(NodeId n) const {
  if (!alive(n) || is_leaf(n)) return false;
  for (NodeId m : nodes_[n].adj)
    if (is_leaf(m)) return true;
  return false;
}

std::optional<LabelId> MulTree::find_label(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<LabelId> MulTree::labels() const {
  std::vector<LabelId> out;
  out.reserve(live_labels_);
  for (LabelId l = 0; l < mult_.size(); ++l)
    if (mult_[l] > 0) out.push_back(l);
  return out;
}

std::vector<NodeId> MulTree::leaves_with_label(LabelId l) const {
  std::vector<NodeId> out;
  for (NodeId n = 0; n < nodes_.size(); ++n)
    if (nodes_[n].alive && nodes_[n].label == l) out.push_back(n);
  return out;
}

void MulTree::kill(NodeId n) {
  Node& node = nodes_[n];
  if (node.label != kNoLabel) {
    --live_leaves_;
    if (--mult_[node.label] == 0) --live_labels_;
  }
  node.alive = false;
  node.adj.clear();
  node.adj.shrink_to_fit();
  --live_nodes_;
}

void MulTree::replace_neighbor(NodeId n, NodeId from, NodeId to) {
  auto& adj = nodes_[n].adj;
  auto it = std::find(adj.begin(), adj.end(), from);
  if (it != adj.end()) *it = to;
}

void MulTree::erase_neighbor(NodeId n, NodeId which) {
  auto& adj = nodes_[n].adj;
  auto it = std::find(adj.begin(), adj.end(), which);
  if (it != adj.end()) adj.erase(it);
}

void MulTree::detach_leaf(NodeId leaf) {
  if (!alive(leaf) || !is_leaf(leaf)) throw std::invalid_argument("detach_leaf: not a live leaf");
  for (NodeId m : nodes_[leaf].adj) erase_neighbor(m, leaf);
  kill(leaf);
}

void MulTree::prune_leaf(NodeId leaf) {
  if (!alive(leaf) || !is_leaf(leaf)) throw std::invalid_argument("prune_leaf: not a live leaf");
  const NodeId nb = nodes_[leaf].adj.empty() ? kNoNode : nodes_[leaf].adj.front();
  detach_leaf(leaf);
  if (nb != kNoNode) normalize_at(nb);
}

NodeId MulTree::contract_edge(NodeId keep, NodeId gone) {
  if (!adjacent(keep, gone)) throw std::invalid_argument("contract_edge: not an edge");
  if (is_leaf(keep) || is_leaf(gone)) throw std::invalid_argument("contract_edge: pendant edge");
  auto& kadj = nodes_[keep].adj;
  auto pos = std::find(kadj.begin(), kadj.end(), gone);
  std::vector<NodeId> moved;
  for (NodeId m : nodes_[gone].adj) {
    if (m == keep) continue;
    moved.push_back(m);
    replace_neighbor(m, gone, keep);
  }
  pos = kadj.erase(pos);
  kadj.insert(pos, moved.begin(), moved.end());
  kill(gone);
  return keep;
}

void MulTree::relabel(NodeId leaf, LabelId label) {
  Node& node = nodes_[leaf];
  if (!node.alive || node.label == kNoLabel) throw std::invalid_argument("relabel: not a live leaf");
  if (--mult_[node.label] == 0) --live_labels_;
  node.label = label;
  if (mult_[label]++ == 0) ++live_labels_;
}

NodeId MulTree::subdivide(NodeId a, NodeId b) {
  if (!adjacent(a, b)) throw std::invalid_argument("subdivide: not an edge");
  const NodeId w = add_internal();
  replace_neighbor(a, b, w);
  replace_neighbor(b, a, w);
  nodes_[w].adj = {a, b};
  return w;
}

void MulTree::normalize_at(NodeId start) {
  std::vector<NodeId> work{start};
  while (!work.empty()) {
    const NodeId n = work.back();
    work.pop_back();
    if (!alive(n) || is_leaf(n)) continue;
    auto& adj = nodes_[n].adj;
    if (adj.size() >= 3) continue;
    if (adj.size() == 2) {
      const NodeId a = adj[0], b = adj[1];
      replace_neighbor(a, n, b);
      replace_neighbor(b, n, a);
      kill(n);
    } else {
      const NodeId a = adj.empty() ? kNoNode : adj[0];
      if (a != kNoNode) erase_neighbor(a, n);
      kill(n);
      if (a != kNoNode) work.push_back(a);
    }
  }
}

void MulTree::normalize() {
  for (NodeId n = 0; n < nodes_.size(); ++n)
    if (nodes_[n].alive && is_internal(n)) normalize_at(n);
}

MulTree MulTree::compacted() const {
  MulTree out;
  out.names_ = names_;
  out.index_ = index_;
  out.mult_.assign(mult_.size(), 0);
  std::vector<NodeId> remap(nodes_.size(), kNoNode);
  for (NodeId n = 0; n < nodes_.size(); ++n) {
    if (!nodes_[n].alive) continue;
    remap[n] = nodes_[n].label == kNoLabel ? out.add_internal() : out.add_leaf(nodes_[n].label);
  }
  for (NodeId n = 0; n < nodes_.size(); ++n) {
    if (!nodes_[n].alive) continue;
    auto& adj = out.nodes_[remap[n]].adj;
    for (NodeId m : nodes_[n].adj) adj.push_back(remap[m]);
  }
  return out;
}

MulTree prune_leaf(MulTree tree, NodeId leaf) {
  tree.prune_leaf(leaf);
  return tree;
}

MulTree contract_edge(MulTree tree, Edge e) {
  tree.contract_edge(e.u, e.v);
  return tree;
}

std::vector<NodeId> side_nodes(const MulTree& tree, NodeId start, NodeId blocked) {
  std::vector<NodeId> out;
  std::vector<std::pair<NodeId, NodeId>> stack{{start, blocked}};
  while (!stack.empty()) {
    auto [n, parent] = stack.back();
    stack.pop_back();
    out.push_back(n);
    for (NodeId m : tree.neighbors(n))
      if (m != parent) stack.emplace_back(m, n);
  }
  return out;
}

std::vector<NodeId> tree_path(const MulTree& tree, NodeId from, NodeId to) {
  std::vector<NodeId> parent(tree.id_bound(), kNoNode);
  std::vector<NodeId> stack{from};
  parent[from] = from;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    if (n == to) break;
    for (NodeId m : tree.neighbors(n)) {
      if (parent[m] != kNoNode) continue;
      parent[m] = n;
      stack.push_back(m);
    }
  }
  if (parent[to] == kNoNode) throw std::invalid_argument("tree_path: nodes not connected");
  std::vector<NodeId> path{to};
  for (NodeId n = to; n != from; n = parent[n]) path.push_back(parent[n]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string newick_label(std::string_view name) {
  constexpr std::string_view kSpecial = " \t\r\n()[]':;,";
  const bool bare = !name.empty() && name.find_first_of(kSpecial) == std::string_view::npos;
  if (bare) return std::string(name);
  std::string out = "'";
  for (char c : name) {
    if (c == '\'') out += '\'';
    out += c;
  }
  out += '\'';
  return out;
}

namespace {

// Encoding of the subtree hanging from `root` away from `blocked`.
std::string encode_from(const MulTree& tree, NodeId root, NodeId blocked) {
  struct Frame {
    NodeId node, parent;
  };
  // Post-order without recursion: deep caterpillars would otherwise blow the
  // stack on large inputs.
  std::vector<Frame> order;
  std::vector<Frame> stack{{root, blocked}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    order.push_back(f);
    for (NodeId m : tree.neighbors(f.node))
      if (m != f.parent) stack.push_back({m, f.node});
  }
  std::unordered_map<NodeId, std::string> enc;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<std::string> kids;
    for (NodeId m : tree.neighbors(it->node)) {
      if (m == it->parent) continue;
      kids.push_back(std::move(enc[m]));
      enc.erase(m);
    }
    std::sort(kids.begin(), kids.end());
    std::string s;
    if (!kids.empty()) {
      s += '(';
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i) s += ',';
        s += kids[i];
      }
      s += ')';
    }
    if (tree.is_leaf(it->node)) {
      // A leaf only has children when it is the root of a one-leaf tree.
      s = kids.empty() ? newick_label(tree.name_of(it->node))
                       : newick_label(tree.name_of(it->node)) + s;
    }
    enc[it->node] = std::move(s);
  }
  return std::move(enc[root]);
}

std::vector<NodeId> centers(const MulTree& tree) {
  std::vector<std::size_t> deg(tree.id_bound(), 0);
  std::vector<NodeId> layer;
  std::size_t remaining = tree.node_count();
  for (NodeId n : tree.nodes()) {
    deg[n] = tree.degree(n);
    if (deg[n] <= 1) layer.push_back(n);
  }
  while (remaining > 2) {
    std::vector<NodeId> next;
    remaining -= layer.size();
    for (NodeId n : layer) {
      for (NodeId m : tree.neighbors(n))
        if (--deg[m] == 1) next.push_back(m);
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

CanonicalForm canonical_form(const MulTree& tree) {
  if (tree.empty()) return {""};
  const auto c = centers(tree);
  if (c.size() == 1) {
    const NodeId root = c.front();
    if (tree.is_leaf(root) && tree.degree(root) == 0)
      return {"(" + newick_label(tree.name_of(root)) + ")"};
    return {encode_from(tree, root, kNoNode)};
  }
  std::string a = encode_from(tree, c[0], c[1]);
  std::string b = encode_from(tree, c[1], c[0]);
  if (b < a) std::swap(a, b);
  return {"(" + a + "," + b + ")"};
}

bool is_isomorphic(const MulTree& a, const MulTree& b) {
  if (a.leaf_count() != b.leaf_count() || a.node_count() != b.node_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace multree
