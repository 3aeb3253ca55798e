#include "multree/reduce.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace multree {

std::string_view to_string(DominanceOrdering d) {
  switch (d) {
    case DominanceOrdering::LeftSubsumed: return "LeftSubsumed";
    case DominanceOrdering::RightSubsumed: return "RightSubsumed";
    case DominanceOrdering::Equal: return "Equal";
    case DominanceOrdering::Incomparable: return "Incomparable";
  }
  return "?";
}

DominanceOrdering compare_adjacent(const CountTable& counts, Edge e1, Edge e2) {
  // Orient as (u, v) and (v, w).
  NodeId u, v, w;
  if (e1.v == e2.u) u = e1.u, v = e1.v, w = e2.v;
  else if (e1.v == e2.v) u = e1.u, v = e1.v, w = e2.u;
  else if (e1.u == e2.u) u = e1.v, v = e1.u, w = e2.v;
  else if (e1.u == e2.v) u = e1.v, v = e1.u, w = e2.u;
  else throw std::invalid_argument("compare_adjacent: edges do not share a node");
  if (u == w) throw std::invalid_argument("compare_adjacent: same edge twice");

  const bool left_in_right = counts.exclusive_beyond(u, v) == counts.exclusive_beyond(v, w);
  const bool right_in_left = counts.exclusive_beyond(w, v) == counts.exclusive_beyond(v, u);
  if (left_in_right && right_in_left) return DominanceOrdering::Equal;
  if (left_in_right) return DominanceOrdering::LeftSubsumed;
  if (right_in_left) return DominanceOrdering::RightSubsumed;
  return DominanceOrdering::Incomparable;
}

namespace {

// Contracts (keep, gone) and moves gone's table entries onto keep.
void contract_tracked(MulTree& tree, CountTable& counts, NodeId keep, NodeId gone) {
  std::vector<NodeId> moved;
  for (NodeId m : tree.neighbors(gone))
    if (m != keep) moved.push_back(m);
  tree.contract_edge(keep, gone);
  counts.on_contract(keep, gone, moved);
}

// Merge the lower-degree endpoint into the other; returns the survivor.
NodeId contract_cheap(MulTree& tree, CountTable& counts, NodeId a, NodeId b) {
  if (tree.degree(a) < tree.degree(b)) std::swap(a, b);
  contract_tracked(tree, counts, a, b);
  return a;
}

void prune_everything(MulTree& tree, std::size_t* pruned) {
  for (NodeId leaf : tree.leaves()) {
    if (!tree.alive(leaf)) continue;
    tree.prune_leaf(leaf);
    if (pruned) ++*pruned;
  }
  // Internal nodes can only survive here if the input was not normalized.
  tree.normalize();
}

bool any_informative(const MulTree& tree, const CountTable& counts) {
  for (const Edge& e : tree.internal_edges())
    if (counts.informative(e.u, e.v)) return true;
  return false;
}

}  // namespace

std::pair<MulTree, CountTable> preprocess(MulTree tree, ReductionReport* report) {
  CountTable counts = distinct_label_counts(tree);
  for (NodeId n : tree.internal_nodes()) {
    if (!tree.alive(n)) continue;
    bool again = true;
    while (again) {
      again = false;
      for (NodeId m : tree.neighbors(n)) {
        if (tree.is_leaf(m) || counts.informative(n, m)) continue;
        contract_tracked(tree, counts, n, m);
        if (report) ++report->contractions_uninformative;
        again = true;
        break;
      }
    }
  }
  return {std::move(tree), std::move(counts)};
}

MulTree contract_dominated_paths(MulTree tree, CountTable& counts, ReductionReport* report) {
  std::deque<NodeId> work;
  for (NodeId n : tree.internal_nodes()) work.push_back(n);

  struct Arm {
    NodeId node;
    std::size_t in;   // labels exclusive to the arm's side
    std::size_t out;  // labels exclusive to the center's side
  };
  std::vector<Arm> arms;
  std::unordered_multimap<std::size_t, std::size_t> by_in;

  while (!work.empty()) {
    const NodeId v = work.front();
    work.pop_front();
    if (!tree.alive(v) || tree.is_leaf(v)) continue;

    arms.clear();
    by_in.clear();
    for (NodeId a : tree.neighbors(v)) {
      if (tree.is_leaf(a) || !counts.informative(v, a)) continue;
      arms.push_back({a, counts.exclusive_beyond(v, a), counts.exclusive_beyond(a, v)});
    }
    if (arms.size() < 2) continue;
    // Arms at one node have pairwise disjoint exclusive sets of size >= 2, so
    // an arm is contained in at most one other arm.
    for (std::size_t k = 0; k < arms.size(); ++k) by_in.emplace(arms[k].in, k);

    for (std::size_t i = 0; i < arms.size(); ++i) {
      std::size_t j = arms.size();
      for (auto [it, end] = by_in.equal_range(arms[i].out); it != end; ++it)
        if (it->second != i) j = it->second;
      if (j == arms.size()) continue;
      const Arm sub = arms[i];
      const Arm dom = arms[j];
      const bool equal = dom.out == sub.in;

      // Whatever branches off v between the two arms resolves nothing:
      // collapse its internal edges into v.
      bool again = true;
      while (again) {
        again = false;
        for (NodeId z : tree.neighbors(v)) {
          if (z == sub.node || z == dom.node || tree.is_leaf(z)) continue;
          contract_tracked(tree, counts, v, z);
          if (report) ++report->contractions_uninformative;
          again = true;
          break;
        }
      }

      NodeId survivor;
      if (equal) {
        // Every leaf branching off v is then prunable; drop them and merge
        // v into the path.
        std::vector<NodeId> branch;
        for (NodeId z : tree.neighbors(v))
          if (z != sub.node && z != dom.node) branch.push_back(z);
        for (NodeId z : branch) {
          counts.erase_edge(v, z);
          tree.detach_leaf(z);
        }
        if (report) report->subtrees_deleted += branch.size();
        survivor = contract_cheap(tree, counts, v, dom.node);
      } else {
        survivor = contract_cheap(tree, counts, v, sub.node);
      }
      if (report) ++report->contractions_dominated;
      work.push_front(survivor);
      break;
    }
  }
  return tree;
}

std::vector<bool> participating_labels(const MulTree& tree) {
  std::vector<bool> out(tree.label_universe(), false);
  if (tree.empty()) return out;
  const CountTable counts = distinct_label_counts(tree);
  const auto edges = tree.internal_edges();
  const bool any = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return counts.informative(e.u, e.v); });
  if (!any) return out;

  std::vector<NodeId> parent(tree.id_bound(), kNoNode);
  std::vector<std::size_t> below(tree.id_bound(), 0);
  std::vector<NodeId> order;
  for (LabelId l : tree.labels()) {
    if (tree.multiplicity(l) == 1) {
      // A label that occurs once is exclusive to one side of every edge.
      out[l] = true;
      continue;
    }
    // The label is outside the spanning subtree of its copies exactly on the
    // edges with no copy below them, once rooted at one copy.
    const auto copies = tree.leaves_with_label(l);
    const NodeId root = copies.front();
    order.clear();
    std::vector<NodeId> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
      const NodeId n = stack.back();
      stack.pop_back();
      order.push_back(n);
      below[n] = tree.is_leaf(n) && tree.label(n) == l ? 1 : 0;
      for (NodeId m : tree.neighbors(n)) {
        if (m == parent[n]) continue;
        parent[m] = n;
        stack.push_back(m);
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (*it != root) below[parent[*it]] += below[*it];
    for (NodeId n : order) {
      if (n == root || below[n] != 0) continue;
      if (tree.is_internal(n) && tree.is_internal(parent[n]) && counts.informative(parent[n], n)) {
        out[l] = true;
        break;
      }
    }
  }
  return out;
}

MulTree prune_nonparticipating_labels(MulTree tree, ReductionReport* report) {
  if (tree.empty()) return tree;
  const CountTable counts = distinct_label_counts(tree);
  std::size_t* tally = report ? &report->leaves_pruned_nonparticipating : nullptr;
  if (!any_informative(tree, counts)) {
    prune_everything(tree, tally);
    return tree;
  }
  // With an informative edge present every label that occurs once is in one
  // of its exclusive sides, so only repeated labels can fail to participate,
  // and their copies are not individually prunable here.
  return tree;
}

MulTree dedup_pendant_leaves(MulTree tree, ReductionReport* report) {
  bool changed = true;
  std::unordered_map<LabelId, NodeId> first;
  std::vector<NodeId> extra;
  while (changed) {
    changed = false;
    for (NodeId p : tree.internal_nodes()) {
      if (!tree.alive(p)) continue;
      first.clear();
      extra.clear();
      for (NodeId m : tree.neighbors(p)) {
        if (!tree.is_leaf(m)) continue;
        if (!first.emplace(tree.label(m), m).second) extra.push_back(m);
      }
      if (extra.empty()) continue;
      for (NodeId x : extra) tree.detach_leaf(x);
      if (report) report->leaves_pruned_pendant_dup += extra.size();
      // Suppressing p can hand its remaining leaves to a neighbor that
      // already holds the same labels; the outer loop catches that.
      tree.normalize_at(p);
      changed = true;
    }
  }
  return tree;
}

MulTree prune_spanning_redundant(MulTree tree, ReductionReport* report) {
  const auto internal = tree.internal_nodes();
  if (internal.empty()) return tree;

  // Entry times from a fixed internal root; `last[n]` is the largest entry
  // time inside n's subtree. Pruning leaves and suppressing degree-2 nodes
  // keeps every surviving interval nested the same way, so the numbering
  // stays usable for the whole stage.
  // The children of each node, sorted by entry time, are kept as well: a
  // surviving neighbor below p always descends from exactly one of p's
  // original children, so those children name p's directions for good.
  const std::size_t bound = tree.id_bound();
  std::vector<std::uint32_t> tin(bound, 0), last(bound, 0);
  std::vector<std::size_t> first_kid(bound + 1, 0);
  std::vector<NodeId> kids;
  {
    std::uint32_t clock = 0;
    std::vector<std::pair<NodeId, NodeId>> stack{{internal.front(), kNoNode}};
    std::vector<NodeId> order, parent(bound, kNoNode);
    while (!stack.empty()) {
      auto [n, from] = stack.back();
      stack.pop_back();
      parent[n] = from;
      tin[n] = clock++;
      order.push_back(n);
      for (NodeId m : tree.neighbors(n))
        if (m != from) stack.push_back({m, n});
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      last[*it] = std::max(last[*it], tin[*it]);
      if (parent[*it] != kNoNode) last[parent[*it]] = std::max(last[parent[*it]], last[*it]);
    }
    for (NodeId n : order)
      if (parent[n] != kNoNode) ++first_kid[parent[n] + 1];
    for (std::size_t i = 0; i < bound; ++i) first_kid[i + 1] += first_kid[i];
    kids.resize(order.size());
    std::vector<std::size_t> fill(first_kid.begin(), first_kid.end() - 1);
    for (NodeId n : order)  // `order` is by entry time
      if (parent[n] != kNoNode) kids[fill[parent[n]]++] = n;
  }
  auto below = [&](NodeId m, NodeId p) { return tin[p] < tin[m] && tin[m] <= last[p]; };
  // Which of p's directions holds y: an original child of p, or kNoNode for
  // the side above p.
  auto direction = [&](NodeId p, NodeId y) {
    if (!below(y, p)) return kNoNode;
    const auto b = kids.begin() + first_kid[p], e = kids.begin() + first_kid[p + 1];
    return *(std::upper_bound(b, e, tin[y], [&](std::uint32_t t, NodeId c) { return t < tin[c]; }) - 1);
  };

  std::vector<std::vector<NodeId>> copies(tree.label_universe());
  for (NodeId x : tree.leaves()) copies[tree.label(x)].push_back(x);

  std::vector<std::uint32_t> times;
  std::vector<NodeId> seen;
  std::unordered_map<NodeId, std::size_t> span_degree;
  std::vector<NodeId> doomed;
  for (const auto& group : copies) {
    if (group.size() < 2) continue;
    times.clear();
    for (NodeId x : group) times.push_back(tin[x]);
    std::sort(times.begin(), times.end());
    auto inside = [&](NodeId n) {
      return std::size_t(std::upper_bound(times.begin(), times.end(), last[n]) -
                         std::lower_bound(times.begin(), times.end(), tin[n]));
    };

    // Degree of a node in the subtree spanning the copies: neighbors whose
    // far side holds a copy.
    span_degree.clear();
    doomed.clear();
    for (NodeId x : group) {
      const NodeId p = tree.neighbors(x).front();
      if (tree.is_leaf(p)) continue;
      auto [it, fresh] = span_degree.try_emplace(p, 0);
      if (fresh && group.size() < tree.degree(p)) {
        // Fewer copies than neighbors: count the directions the copies lie in.
        seen.clear();
        for (NodeId y : group) seen.push_back(direction(p, y));
        std::sort(seen.begin(), seen.end());
        it->second = std::size_t(std::unique(seen.begin(), seen.end()) - seen.begin());
      } else if (fresh) {
        for (NodeId m : tree.neighbors(p))
          if ((below(m, p) ? inside(m) : group.size() - inside(p)) > 0) ++it->second;
      }
      if (it->second >= 3) {
        doomed.push_back(x);
        --it->second;  // p loses its edge to x
      }
    }
    for (NodeId x : doomed) tree.prune_leaf(x);
    if (report) report->leaves_pruned_spanning += doomed.size();
  }
  return tree;
}

std::pair<MulTree, ReductionReport> reduce_to_mrf(const MulTree& input) {
  constexpr std::size_t kMaxPasses = 8;
  ReductionReport r;
  r.input_leaves = input.leaf_count();
  r.input_labels = input.label_count();

  MulTree tree = input;
  tree.normalize();
  auto activity = [](const ReductionReport& x) {
    return x.contractions_uninformative + x.contractions_dominated + x.subtrees_deleted +
           x.leaves_pruned_nonparticipating + x.leaves_pruned_pendant_dup + x.leaves_pruned_spanning;
  };
  r.converged = false;
  while (r.passes < kMaxPasses) {
    const std::size_t before = activity(r);
    auto [t, counts] = preprocess(std::move(tree), &r);
    t = contract_dominated_paths(std::move(t), counts, &r);
    // The table is still in sync here, so the participation test needs no
    // recount.
    if (!t.empty() && !any_informative(t, counts)) prune_everything(t, &r.leaves_pruned_nonparticipating);
    t = dedup_pendant_leaves(std::move(t), &r);
    t = prune_spanning_redundant(std::move(t), &r);
    tree = std::move(t);
    ++r.passes;
    if (activity(r) == before) {
      r.converged = true;
      break;
    }
  }

  r.output_leaves = tree.leaf_count();
  r.output_labels = tree.label_count();
  r.no_information = tree.empty();
  r.taxon_loss_step1_pct =
      r.input_labels == 0 ? 0.0 : 100.0 * double(r.input_labels - r.output_labels) / double(r.input_labels);
  return {std::move(tree), r};
}

}  // namespace multree
