#include "multree/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "multree/newick.hpp"
#include "multree/partition.hpp"
#include "multree/reduce.hpp"

namespace multree {

namespace {

// Edges of a small tree with their partitions and quartet sets, looked up by
// either orientation.
class EdgeAtlas {
 public:
  explicit EdgeAtlas(const MulTree& tree) {
    for (const Edge& e : tree.edges()) {
      index_[{e.u, e.v}] = parts_.size();
      index_[{e.v, e.u}] = parts_.size();
      parts_.push_back(edge_label_partition(tree, e));
      deltas_.push_back(edge_quartets(parts_.back()));
    }
  }

  const std::vector<EdgePartition>& partitions() const { return parts_; }

  /// Labels exclusive to `a`'s side of the edge (a, b).
  const std::vector<LabelId>& side(NodeId a, NodeId b) const {
    const EdgePartition& p = parts_[index_.at({a, b})];
    return p.edge.u == a ? p.m_u : p.m_v;
  }
  const QuartetSet& delta(NodeId a, NodeId b) const { return deltas_[index_.at({a, b})]; }
  bool informative(NodeId a, NodeId b) const { return parts_[index_.at({a, b})].informative(); }

 private:
  std::map<std::pair<NodeId, NodeId>, std::size_t> index_;
  std::vector<EdgePartition> parts_;
  std::vector<QuartetSet> deltas_;
};

struct OrientedPair {
  NodeId u, v, w, x;  // path u-v ... w-x
};

OrientedPair orient(const MulTree& tree, Edge e1, Edge e2) {
  OrientedPair p{};
  const auto first = tree_path(tree, e1.u, e2.u);
  if (first.size() > 1 && first[1] == e1.v) p.u = e1.u, p.v = e1.v;
  else p.u = e1.v, p.v = e1.u;
  const auto second = tree_path(tree, p.v, e2.u);
  if (std::find(second.begin(), second.end(), e2.v) != second.end()) p.w = e2.v, p.x = e2.u;
  else p.w = e2.u, p.x = e2.v;
  return p;
}

bool subset(const std::vector<LabelId>& a, const std::vector<LabelId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class F>
void for_each_edge_pair(const MulTree& tree, F&& f) {
  const auto edges = tree.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (i != j) f(orient(tree, edges[i], edges[j]));
}

MulTree normalized(const MulTree& tree) {
  MulTree t = tree;
  t.normalize();
  return t;
}

}  // namespace

bool dominance_verdicts_agree(const MulTree& tree) {
  const EdgeAtlas atlas(tree);
  const CountTable counts = distinct_label_counts(tree);
  for (NodeId v : tree.internal_nodes()) {
    const auto nb = tree.neighbors(v);
    for (NodeId a : nb) {
      for (NodeId b : nb) {
        if (a == b || !atlas.informative(a, v) || !atlas.informative(v, b)) continue;
        const bool left_in_right = atlas.delta(v, b).includes(atlas.delta(a, v));
        const bool right_in_left = atlas.delta(a, v).includes(atlas.delta(v, b));
        DominanceOrdering expected = DominanceOrdering::Incomparable;
        if (left_in_right && right_in_left) expected = DominanceOrdering::Equal;
        else if (left_in_right) expected = DominanceOrdering::LeftSubsumed;
        else if (right_in_left) expected = DominanceOrdering::RightSubsumed;
        if (compare_adjacent(counts, {a, v}, {v, b}) != expected) return false;
      }
    }
  }
  return true;
}

bool path_nesting_holds(const MulTree& tree) {
  const EdgeAtlas atlas(tree);
  bool ok = true;
  for_each_edge_pair(tree, [&](const OrientedPair& p) {
    if (!ok) return;
    const auto& mu = atlas.side(p.u, p.v);
    const auto& mw = atlas.side(p.w, p.x);
    const auto& mv = atlas.side(p.v, p.u);
    const auto& mx = atlas.side(p.x, p.w);
    if (!subset(mu, mw) || !subset(mx, mv)) ok = false;
    if ((mu.size() == mw.size()) != (mu == mw)) ok = false;
    if (atlas.informative(p.u, p.v)) {
      const bool contained = atlas.delta(p.w, p.x).includes(atlas.delta(p.u, p.v));
      if (contained != (mv == mx)) ok = false;
    }
  });
  return ok;
}

bool path_sandwich_holds(const MulTree& tree) {
  const EdgeAtlas atlas(tree);
  bool ok = true;
  for_each_edge_pair(tree, [&](const OrientedPair& p) {
    if (!ok) return;
    const QuartetSet& low = atlas.delta(p.u, p.v);
    const QuartetSet& high = atlas.delta(p.w, p.x);
    if (low.empty() || !high.includes(low)) return;
    const auto path = tree_path(tree, p.v, p.w);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const QuartetSet& mid = atlas.delta(path[k], path[k + 1]);
      if (!mid.includes(low) || !high.includes(mid)) ok = false;
    }
  });
  return ok;
}

bool relabeling_contains(const MulTree& tree, const OracleLimits& limits) {
  const QuartetSet info = information_content(tree, limits);
  const MulTree single = relabeled_single_tree(tree);
  if (!single.is_singly_labeled()) return false;
  const std::size_t universe = tree.label_universe();
  const QuartetSet lifted = information_content(single, limits).restricted([&](LabelId l) {
    return l < universe && tree.multiplicity(l) > 0;
  });
  return lifted.includes(info);
}

bool count_table_consistent(const MulTree& tree) {
  const CountTable counts = distinct_label_counts(tree);
  for (const Edge& e : tree.edges()) {
    const EdgePartition p = edge_label_partition(tree, e);
    if (counts.exclusive_beyond(e.v, e.u) != p.m_u.size()) return false;
    if (counts.exclusive_beyond(e.u, e.v) != p.m_v.size()) return false;
    if (counts.distinct_beyond(e.u, e.v) != p.m_v.size() + p.common.size()) return false;
    if (p.m_u.size() + p.m_v.size() + p.common.size() != tree.label_count()) return false;
  }
  return true;
}

MulTree random_preserving_edits(const MulTree& tree, std::size_t edits, std::mt19937_64& rng,
                                const OracleLimits& limits) {
  MulTree t = normalized(tree);
  struct Move {
    bool prune;
    Edge e;
  };
  std::vector<Move> moves;
  for (std::size_t k = 0; k < edits; ++k) {
    moves.clear();
    for (NodeId leaf : t.leaves())
      if (is_prunable_oracle(t, leaf, limits)) moves.push_back({true, {leaf, kNoNode}});
    for (const Edge& e : t.internal_edges())
      if (is_contractible_oracle(t, e, limits)) moves.push_back({false, e});
    if (moves.empty()) break;
    const Move m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    if (m.prune) t.prune_leaf(m.e.u);
    else t.contract_edge(m.e.u, m.e.v);
    t = t.compacted();
  }
  return t;
}

std::vector<std::string> outcome_violations(const MulTree& input, const PipelineOutcome& o) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const char* what) {
    if (!ok) bad.emplace_back(what);
  };
  const bool mrf_empty = o.mrf.empty();
  const bool mrf_singly = !mrf_empty && o.mrf.is_singly_labeled();
  const bool has_singly = o.singly.has_value() && !o.singly->empty();

  const bool is_a = o.classification == Classification::SinglyMRF;
  const bool is_b = o.classification == Classification::SecondStepSingly;
  const bool is_none = o.classification == Classification::NoInformation;
  expect(int(is_a) + int(is_b) + int(is_none) == 1, "classification is not exactly one class");
  expect(is_a == mrf_singly, "SinglyMRF does not match a singly-labeled MRF");
  expect(is_b == (!mrf_empty && !mrf_singly && has_singly), "SecondStepSingly does not match the second step");
  expect(is_none == (mrf_empty || !has_singly), "NoInformation does not match an empty result");
  expect(!o.singly.has_value() || has_singly, "empty singly-labeled tree reported as present");
  if (has_singly) expect(o.singly->is_singly_labeled(), "second-step tree repeats a label");

  expect(o.input_labels == input.label_count(), "input label count");
  expect(o.mrf_labels == o.mrf.label_count(), "MRF label count");
  expect(o.singly_labels == (has_singly ? o.singly->label_count() : 0), "second-step label count");
  expect(o.singly_labels <= o.mrf_labels && o.mrf_labels <= o.input_labels, "label counts not nested");
  const std::size_t lost1 = o.input_labels - o.mrf_labels;
  const std::size_t lost2 = o.mrf_labels - o.singly_labels;
  expect(o.singly_labels + lost1 + lost2 == o.input_labels, "label accounting");

  std::size_t mul = 0;
  for (LabelId l : input.labels())
    if (input.multiplicity(l) >= 2) ++mul;
  expect(o.mul_labels_input == mul, "repeated label recount");
  const double denom = double(o.input_labels);
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9; };
  const double naive = o.input_labels == 0 ? 0.0 : 100.0 * double(mul) / denom;
  const double step1 = o.input_labels == 0 ? 0.0 : 100.0 * double(lost1) / denom;
  const double total = o.input_labels == 0 ? 0.0 : 100.0 * double(lost1 + lost2) / denom;
  expect(close(o.naive_loss_pct, naive), "naive loss recount");
  expect(close(o.taxon_loss_step1_pct, step1), "step-one loss recount");
  expect(close(o.taxon_loss_total_pct, total), "total loss recount");
  expect(o.taxon_loss_total_pct + 1e-12 >= o.taxon_loss_step1_pct, "total loss below step-one loss");

  const ReductionReport& r = o.report;
  expect(r.output_leaves <= r.input_leaves && r.output_labels <= r.input_labels, "report bounds");
  expect(r.output_leaves == o.mrf.leaf_count() && r.output_labels == o.mrf_labels, "report output counts");
  expect(close(r.taxon_loss_step1_pct, step1), "report step-one loss");
  expect(r.no_information == mrf_empty, "report information flag");
  return bad;
}

Verifier::Verifier(VerifyOptions options) : options_(options) {
  for (const char* name : {kPropInformation, kPropMaximal, kPropUniqueQuartet, kPropIdempotent, kPropConflictFree,
                           kPropDominance, kPropNesting, kPropSandwich, kPropRelabeling, kPropCounts,
                           kPropUniqueness, kPropSinglyInput, kPropSinglyStep, kPropOutcome})
    tallies_.push_back({name, 0, 0, {}});
}

const PropertyTally& Verifier::tally(const std::string& name) const {
  for (const auto& t : tallies_)
    if (t.name == name) return t;
  throw std::out_of_range("unknown property " + name);
}

bool Verifier::all_passed() const {
  return std::all_of(tallies_.begin(), tallies_.end(), [](const PropertyTally& t) { return t.failed == 0; });
}

void Verifier::record(const char* name, bool ok, const MulTree& tree, std::vector<std::string>& failed) {
  for (auto& t : tallies_) {
    if (t.name != name) continue;
    ++t.checked;
    if (!ok) {
      ++t.failed;
      failed.emplace_back(name);
      if (t.examples.size() < options_.examples_kept) t.examples.push_back(write_newick(tree));
    }
    return;
  }
}

std::vector<std::string> Verifier::check(const MulTree& input, std::mt19937_64& rng) {
  std::vector<std::string> failed;
  if (input.leaf_count() > options_.limits.max_leaves && !options_.limits.force) {
    ++skipped_;
    return failed;
  }
  ++trees_;
  // Everything below stays within the caller's budget.
  const OracleLimits limits{std::max(options_.limits.max_leaves, input.leaf_count()), true};
  const MulTree tree = normalized(input);

  const QuartetSet info = information_content(tree, limits);
  const auto [mrf, report] = reduce_to_mrf(tree);
  const QuartetSet mrf_info = information_content(mrf, limits);

  record(kPropInformation, mrf_info == info, tree, failed);
  record(kPropMaximal, is_maximally_reduced_oracle(mrf, limits), tree, failed);
  record(kPropUniqueQuartet, edges_without_unique_quartet(mrf, limits).empty(), tree, failed);
  record(kPropIdempotent, is_isomorphic(reduce_to_mrf(mrf).first, mrf), tree, failed);
  record(kPropConflictFree, !has_conflict(info) && !has_conflict(mrf_info), tree, failed);
  record(kPropDominance, dominance_verdicts_agree(tree), tree, failed);
  record(kPropNesting, path_nesting_holds(tree), tree, failed);
  record(kPropSandwich, path_sandwich_holds(tree), tree, failed);
  record(kPropRelabeling, relabeling_contains(tree, limits), tree, failed);
  record(kPropCounts, count_table_consistent(tree), tree, failed);

  if (options_.max_edits > 0) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, options_.max_edits)(rng);
    const MulTree edited = random_preserving_edits(tree, k, rng, limits);
    const bool same_info = information_content(edited, limits) == info;
    record(kPropUniqueness, same_info && is_isomorphic(reduce_to_mrf(edited).first, mrf), tree, failed);
  }

  if (tree.is_singly_labeled()) {
    const bool resolved = !tree.internal_edges().empty();
    record(kPropSinglyInput, resolved ? is_isomorphic(mrf, tree) : mrf.empty(), tree, failed);
  }

  const PipelineOutcome outcome = classify_and_measure(tree, mrf, report);
  {
    const QuartetSet kept = mrf_info.restricted([&](LabelId l) { return mrf.multiplicity(l) == 1; });
    const QuartetSet singly_info = outcome.singly ? information_content(*outcome.singly, limits) : QuartetSet{};
    record(kPropSinglyStep, singly_info == kept, tree, failed);
  }
  record(kPropOutcome, outcome_violations(tree, outcome).empty(), tree, failed);
  return failed;
}

}  // namespace multree
