#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "multree/generate.hpp"
#include "multree/partition.hpp"
#include "multree/reduce.hpp"
#include "multree/verify.hpp"

using namespace multree;
using namespace multree::test;

namespace {

// Internal edges as (node, node) pairs whose far sides are exactly the given
// exclusive label sets.
Edge edge_between(const MulTree& t, const std::vector<std::string>& near, const std::vector<std::string>& far) {
  for (const Edge& e : t.internal_edges()) {
    for (const Edge& o : {e, e.reversed()}) {
      const EdgePartition p = edge_label_partition(t, o);
      std::vector<std::string> u, v;
      for (LabelId l : p.m_u) u.push_back(t.label_name(l));
      for (LabelId l : p.m_v) v.push_back(t.label_name(l));
      std::sort(u.begin(), u.end());
      std::sort(v.begin(), v.end());
      if (u == near && v == far) return o;
    }
  }
  return {};
}

std::size_t internal_degree(const MulTree& t, NodeId n) {
  std::size_t k = 0;
  for (NodeId m : t.neighbors(n)) k += t.is_internal(m);
  return k;
}

}  // namespace

TEST(CompareAdjacent, E1CentralEdgeIsSubsumedBothWays) {
  auto [t, counts] = preprocess(tree(kE1));
  const Edge central = edge_between(t, {"a", "f"}, {"d", "e"});
  ASSERT_NE(central.u, kNoNode);
  // The neighbor toward {a,f}: shares central.u.
  for (NodeId m : t.neighbors(central.u)) {
    if (m == central.v || t.is_leaf(m)) continue;
    EXPECT_EQ(compare_adjacent(counts, central, {central.u, m}), DominanceOrdering::LeftSubsumed);
    EXPECT_EQ(compare_adjacent(counts, {central.u, m}, central), DominanceOrdering::RightSubsumed);
  }
  for (NodeId m : t.neighbors(central.v)) {
    if (m == central.u || t.is_leaf(m)) continue;
    EXPECT_EQ(compare_adjacent(counts, central, {central.v, m}), DominanceOrdering::LeftSubsumed);
  }
}

TEST(CompareAdjacent, CaterpillarIsIncomparable) {
  const MulTree t = tree("(a,b,(c,(d,(e,(f,g)))));");
  const CountTable counts = distinct_label_counts(t);
  for (NodeId v : t.internal_nodes()) {
    std::vector<NodeId> inner;
    for (NodeId m : t.neighbors(v))
      if (t.is_internal(m)) inner.push_back(m);
    if (inner.size() == 2) {
      EXPECT_EQ(compare_adjacent(counts, {inner[0], v}, {v, inner[1]}), DominanceOrdering::Incomparable);
    }
  }
}

TEST(CompareAdjacent, EqualCase) {
  auto [t, counts] = preprocess(tree(kMiddleCopy));
  const NodeId a = pendant_of(t, leaf_named(t, "a"));
  const NodeId d = pendant_of(t, leaf_named(t, "d"));
  NodeId mid = kNoNode;
  for (NodeId m : t.neighbors(a))
    if (t.is_internal(m)) mid = m;
  EXPECT_EQ(compare_adjacent(counts, {a, mid}, {mid, d}), DominanceOrdering::Equal);
}

TEST(CompareAdjacent, RejectsNonAdjacentEdges) {
  const MulTree t = tree("(a,b,(c,(d,(e,f))));");
  const CountTable counts = distinct_label_counts(t);
  const auto internal = t.internal_edges();
  ASSERT_GE(internal.size(), 2u);
  Edge x = internal.front(), y{};
  for (const Edge& e : internal)
    if (e.u != x.u && e.u != x.v && e.v != x.u && e.v != x.v) y = e;
  ASSERT_NE(y.u, kNoNode);
  EXPECT_THROW(compare_adjacent(counts, x, y), std::invalid_argument);
  EXPECT_THROW(compare_adjacent(counts, x, x), std::invalid_argument);
}

TEST(CompareAdjacent, AgreesWithOracleOnRandomTrees) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) EXPECT_TRUE(dominance_verdicts_agree(random_multree(rng, GeneratorConfig{})));
}

TEST(Preprocess, E1ContractsDuplicatedCherries) {
  ReductionReport r;
  auto [t, counts] = preprocess(tree(kE1), &r);
  EXPECT_EQ(r.contractions_uninformative, 2u);
  EXPECT_EQ(t.leaf_count(), 8u);
  // Four internal nodes on a path: three internal edges left.
  EXPECT_EQ(t.internal_nodes().size(), 4u);
  EXPECT_EQ(t.internal_edges().size(), 3u);
  for (NodeId n : t.internal_nodes()) EXPECT_LE(internal_degree(t, n), 2u);
  EXPECT_EQ(quartets(t).size(), 11u);
  for (const Edge& e : t.internal_edges()) EXPECT_TRUE(counts.informative(e.u, e.v));
}

TEST(Preprocess, ResolvedSinglyLabeledTreeUnchanged) {
  const MulTree t = tree("((a,b),(c,d),(e,(f,g)));");
  auto [p, counts] = preprocess(t);
  EXPECT_TRUE(is_isomorphic(p, t));
}

TEST(Preprocess, TableStaysValid) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    auto [t, counts] = preprocess(random_multree(rng, GeneratorConfig{4, 20, 3, 0.1}));
    const CountTable fresh = distinct_label_counts(t);
    for (const Edge& e : t.edges()) {
      EXPECT_EQ(counts.distinct_beyond(e.u, e.v), fresh.distinct_beyond(e.u, e.v));
      EXPECT_EQ(counts.distinct_beyond(e.v, e.u), fresh.distinct_beyond(e.v, e.u));
    }
  }
}

TEST(ContractDominatedPaths, E1MergesDuplicates) {
  ReductionReport r;
  auto [t, counts] = preprocess(tree(kE1), &r);
  const MulTree out = contract_dominated_paths(t, counts, &r);
  EXPECT_EQ(r.contractions_dominated, 1u);
  EXPECT_EQ(out.internal_nodes().size(), 3u);
  const NodeId b = leaf_named(out, "b");
  const NodeId hub = pendant_of(out, b);
  std::vector<std::string> at_hub;
  for (NodeId m : out.neighbors(hub))
    if (out.is_leaf(m)) at_hub.push_back(out.name_of(m));
  std::sort(at_hub.begin(), at_hub.end());
  EXPECT_EQ(at_hub, (std::vector<std::string>{"b", "b", "c", "c"}));
  EXPECT_EQ(quartets(out).size(), 11u);
}

TEST(ContractDominatedPaths, EqualCaseDeletesBranch) {
  ReductionReport r;
  auto [t, counts] = preprocess(tree(kMiddleCopy), &r);
  const MulTree out = contract_dominated_paths(t, counts, &r);
  EXPECT_EQ(r.subtrees_deleted, 1u);
  EXPECT_EQ(r.contractions_dominated, 1u);
  EXPECT_EQ(write_newick(out), "((a,b,l),(d,e,l));");
  EXPECT_EQ(quartets(out), quartets(tree(kMiddleCopy)));
}

TEST(ContractDominatedPaths, FixedPointUnchanged) {
  const MulTree t = tree(kE2);
  auto [p, counts] = preprocess(t);
  EXPECT_TRUE(is_isomorphic(contract_dominated_paths(p, counts), t));
}

TEST(ParticipatingLabels, Fixtures) {
  const MulTree e1 = tree(kE1);
  const auto part = participating_labels(e1);
  for (LabelId l : e1.labels()) EXPECT_TRUE(part[l]) << e1.label_name(l);
  const MulTree star = tree("(a,b,c,d);");
  for (LabelId l : star.labels()) EXPECT_FALSE(participating_labels(star)[l]);
}

TEST(PruneNonparticipating, StarEmpties) {
  ReductionReport r;
  const MulTree out = prune_nonparticipating_labels(tree("(a,b,c,d,e);"), &r);
  EXPECT_TRUE(out.empty());
  EXPECT_EQ(r.leaves_pruned_nonparticipating, 5u);
}

TEST(PruneNonparticipating, UniqueTaxonBehindUninformativeEdges) {
  // x occurs once and every edge around it resolves nothing, as does the
  // whole tree: everything goes.
  const MulTree t = tree("((a,b,x),(a,b,y));");
  EXPECT_TRUE(quartets(t).empty());
  EXPECT_TRUE(prune_nonparticipating_labels(t).empty());
}

TEST(PruneNonparticipating, E1Unchanged) {
  auto [t, counts] = preprocess(tree(kE1));
  t = contract_dominated_paths(std::move(t), counts);
  EXPECT_TRUE(is_isomorphic(prune_nonparticipating_labels(t), t));
}

TEST(DedupPendantLeaves, E1Hub) {
  ReductionReport r;
  const MulTree out = dedup_pendant_leaves(tree("((a,f),b,c,b,c,(d,e));"), &r);
  EXPECT_EQ(r.leaves_pruned_pendant_dup, 2u);
  EXPECT_EQ(write_newick(out), "((a,f),(d,e),b,c);");
}

TEST(DedupPendantLeaves, DistinctLabelsUnchanged) {
  const MulTree t = tree("((a,b),(c,d),e);");
  EXPECT_TRUE(is_isomorphic(dedup_pendant_leaves(t), t));
}

TEST(DedupPendantLeaves, TripleCopy) {
  const MulTree out = dedup_pendant_leaves(tree("((x,x,x),(a,b));"));
  EXPECT_EQ(out.multiplicity(*out.find_label("x")), 1u);
  EXPECT_EQ(out.leaf_count(), 3u);
}

TEST(PruneSpanningRedundant, E2Unchanged) {
  ReductionReport r;
  const MulTree out = prune_spanning_redundant(tree(kE2), &r);
  EXPECT_EQ(r.leaves_pruned_spanning, 0u);
  EXPECT_TRUE(is_isomorphic(out, tree(kE2)));
}

TEST(PruneSpanningRedundant, MiddleCopyPruned) {
  const MulTree t = tree(kMiddleCopy);
  // Only the copy hanging off the middle node is prunable.
  for (NodeId x : t.leaves()) {
    const bool middle = t.name_of(x) == "l" && internal_degree(t, pendant_of(t, x)) == 2;
    EXPECT_EQ(is_prunable_oracle(t, x), middle) << t.name_of(x);
  }
  ReductionReport r;
  const MulTree out = prune_spanning_redundant(t, &r);
  EXPECT_EQ(r.leaves_pruned_spanning, 1u);
  EXPECT_EQ(write_newick(out), "((a,b,l),(d,e,l));");
}

TEST(PruneSpanningRedundant, UniqueLabelsUntouched) {
  const MulTree t = tree("((a,b),(c,d),e);");
  EXPECT_TRUE(is_isomorphic(prune_spanning_redundant(t), t));
}

TEST(ReduceToMrf, E1) {
  const MulTree in = tree(kE1);
  auto [mrf, r] = reduce_to_mrf(in);
  EXPECT_TRUE(mrf.is_singly_labeled());
  EXPECT_EQ(mrf.leaf_count(), 6u);
  EXPECT_EQ(mrf.internal_nodes().size(), 3u);
  EXPECT_EQ(write_newick(mrf), "((a,f),(d,e),b,c);");
  EXPECT_EQ(quartets(mrf), quartets(in));
  EXPECT_EQ(r.input_leaves, 8u);
  EXPECT_EQ(r.output_leaves, 6u);
  EXPECT_EQ(r.output_labels, 6u);
  EXPECT_DOUBLE_EQ(r.taxon_loss_step1_pct, 0.0);
  EXPECT_TRUE(r.converged);
}

TEST(ReduceToMrf, E2IsItsOwnMrf) {
  auto [mrf, r] = reduce_to_mrf(tree(kE2));
  EXPECT_TRUE(is_isomorphic(mrf, tree(kE2)));
  EXPECT_FALSE(mrf.is_singly_labeled());
  EXPECT_EQ(r.passes, 1u);
}

TEST(ReduceToMrf, NoInformationGivesEmptyTree) {
  for (const char* s : {"(a);", "(a,b);", "(a,b,c);", "(a,b,c,d,e);", "((a,b,x),(a,b,y));"}) {
    auto [mrf, r] = reduce_to_mrf(tree(s));
    EXPECT_TRUE(mrf.empty()) << s;
    EXPECT_TRUE(r.no_information) << s;
    EXPECT_EQ(write_newick(mrf), ";");
  }
  auto [mrf, r] = reduce_to_mrf(MulTree{});
  EXPECT_TRUE(mrf.empty());
}

TEST(ReduceToMrf, ReportBounds) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const MulTree t = random_multree(rng, GeneratorConfig{4, 40, 4, 0.2});
    auto [mrf, r] = reduce_to_mrf(t);
    EXPECT_LE(r.output_leaves, r.input_leaves);
    EXPECT_LE(r.output_labels, r.input_labels);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.taxon_loss_step1_pct, 100.0 * double(r.input_labels - r.output_labels) / double(r.input_labels),
                1e-12);
  }
}

TEST(ReduceToMrf, DoesNotMutateInput) {
  const MulTree t = tree(kE1);
  const std::string before = write_newick(t);
  (void)reduce_to_mrf(t);
  EXPECT_EQ(write_newick(t), before);
}
