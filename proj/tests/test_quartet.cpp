#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "multree/generate.hpp"
#include "multree/partition.hpp"
#include "multree/verify.hpp"

using namespace multree;
using namespace multree::test;

namespace {

std::vector<std::string> names(const MulTree& t, const std::vector<LabelId>& ids) {
  std::vector<std::string> out;
  for (LabelId l : ids) out.push_back(t.label_name(l));
  std::sort(out.begin(), out.end());
  return out;
}

// The E1 edge whose sides are {a,f,b,c} and {b,c,d,e}.
Edge e1_central(const MulTree& t) {
  for (const Edge& e : t.internal_edges()) {
    const EdgePartition p = edge_label_partition(t, e);
    if (p.m_u.size() == 2 && p.m_v.size() == 2 && p.common.size() == 2) return e;
  }
  return {};
}

using Strings = std::vector<std::string>;

}  // namespace

TEST(EdgePartition, E1CentralEdge) {
  const MulTree t = tree(kE1);
  const Edge e = e1_central(t);
  ASSERT_NE(e.u, kNoNode);
  EdgePartition p = edge_label_partition(t, e);
  if (names(t, p.m_u) != Strings{"a", "f"}) std::swap(p.m_u, p.m_v);
  EXPECT_EQ(names(t, p.m_u), (Strings{"a", "f"}));
  EXPECT_EQ(names(t, p.m_v), (Strings{"d", "e"}));
  EXPECT_EQ(names(t, p.common), (Strings{"b", "c"}));
}

TEST(EdgePartition, E2InternalEdge) {
  const MulTree t = tree(kE2);
  EdgePartition p = edge_label_partition(t, t.internal_edges().front());
  if (names(t, p.m_u) != Strings{"a", "b"}) std::swap(p.m_u, p.m_v);
  EXPECT_EQ(names(t, p.m_u), (Strings{"a", "b"}));
  EXPECT_EQ(names(t, p.m_v), (Strings{"c", "d"}));
  EXPECT_EQ(names(t, p.common), (Strings{"f"}));
}

TEST(EdgePartition, PendantEdgeOfRepeatedLabel) {
  const MulTree t = tree(kE2);
  const NodeId f = leaf_named(t, "f");
  const EdgePartition p = edge_label_partition(t, {f, pendant_of(t, f)});
  EXPECT_TRUE(p.m_u.empty());
  EXPECT_FALSE(p.informative());
}

TEST(CountTable, E1CentralEdge) {
  const MulTree t = tree(kE1);
  const Edge e = e1_central(t);
  const CountTable c = distinct_label_counts(t);
  EXPECT_EQ(c.distinct_beyond(e.u, e.v), 4u);
  EXPECT_EQ(c.distinct_beyond(e.v, e.u), 4u);
  EXPECT_EQ(c.exclusive_beyond(e.u, e.v), 2u);
  EXPECT_EQ(c.exclusive_beyond(e.v, e.u), 2u);
}

TEST(CountTable, TwoLeaves) {
  const MulTree t = tree("(a,b);");
  const Edge e = t.edges().front();
  const CountTable c = distinct_label_counts(t);
  EXPECT_EQ(c.distinct_beyond(e.u, e.v), 1u);
  EXPECT_EQ(c.exclusive_beyond(e.u, e.v), 1u);
  EXPECT_EQ(c.exclusive_beyond(e.v, e.u), 1u);
}

TEST(CountTable, MatchesPartitionsOnRandomTrees) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 300; ++i) EXPECT_TRUE(count_table_consistent(random_multree(rng, GeneratorConfig{2, 16, 4, 0.2})));
}

TEST(Quartet, Canonical) {
  EXPECT_EQ(Quartet(0, 1, 2, 3), Quartet(3, 2, 1, 0));
  EXPECT_EQ(Quartet(0, 1, 2, 3), Quartet(2, 3, 1, 0));
  EXPECT_NE(Quartet(0, 1, 2, 3), Quartet(0, 2, 1, 3));
  EXPECT_THROW(Quartet(0, 0, 2, 3), std::invalid_argument);
}

TEST(EdgeQuartets, E2) {
  const MulTree t = tree(kE2);
  EXPECT_EQ(edge_quartets(t, t.internal_edges().front()).to_strings(t), (Strings{"a,b|c,d"}));
}

TEST(EdgeQuartets, E1AfSide) {
  const MulTree t = tree(kE1);
  const NodeId a = leaf_named(t, "a");
  const NodeId p = pendant_of(t, a);
  NodeId other = kNoNode;
  for (NodeId m : t.neighbors(p))
    if (t.is_internal(m)) other = m;
  EXPECT_EQ(edge_quartets(t, {p, other}).to_strings(t),
            (Strings{"a,f|b,c", "a,f|b,d", "a,f|b,e", "a,f|c,d", "a,f|c,e", "a,f|d,e"}));
}

TEST(InformationContent, E1) {
  const MulTree t = tree(kE1);
  const Strings expected{"a,b|d,e", "a,c|d,e", "a,f|b,c", "a,f|b,d", "a,f|b,e", "a,f|c,d",
                         "a,f|c,e", "a,f|d,e", "b,c|d,e", "b,f|d,e", "c,f|d,e"};
  EXPECT_EQ(quartets(t), expected);
  EXPECT_EQ(quartets(t).size(), 11u);
  // b and c sit on both sides of the central edge, so bd|ce is never resolved.
  const QuartetSet info = information_content(t);
  const LabelId b = *t.find_label("b"), c = *t.find_label("c"), d = *t.find_label("d"), e = *t.find_label("e");
  EXPECT_FALSE(info.contains(Quartet(b, d, c, e)));
  EXPECT_FALSE(has_conflict(info));
}

TEST(InformationContent, StarAndResolvedQuartet) {
  EXPECT_TRUE(quartets(tree("(a,b,c,d,e);")).empty());
  EXPECT_EQ(quartets(tree("((a,b),(c,d));")), (Strings{"a,b|c,d"}));
}

TEST(InformationContent, SizeGuard) {
  std::mt19937_64 rng(1);
  const MulTree big = random_singly_tree(rng, 20);
  EXPECT_THROW(information_content(big), OracleSizeError);
  EXPECT_NO_THROW(information_content(big, {16, true}));
}

TEST(HasConflict, DetectsTwoTopologies) {
  QuartetSet s;
  s.insert(Quartet(0, 1, 2, 3));
  EXPECT_FALSE(has_conflict(s));
  s.insert(Quartet(0, 2, 1, 3));
  EXPECT_TRUE(has_conflict(s));
}

TEST(RelabeledSingleTree, E2) {
  const MulTree t = tree(kE2);
  const MulTree r = relabeled_single_tree(t);
  EXPECT_TRUE(r.is_singly_labeled());
  EXPECT_EQ(r.leaf_count(), 6u);
  EXPECT_EQ(r.label_count(), 6u);
  EXPECT_TRUE(r.find_label("f#1"));
  EXPECT_TRUE(relabeling_contains(t));
}

TEST(RelabeledSingleTree, SinglyLabeledUnchanged) {
  const MulTree t = tree("((a,b),(c,d),e);");
  EXPECT_TRUE(is_isomorphic(relabeled_single_tree(t), t));
}

TEST(RelabeledSingleTree, E1Superset) {
  const MulTree t = tree(kE1);
  const MulTree r = relabeled_single_tree(t);
  EXPECT_EQ(r.leaf_count(), 8u);
  EXPECT_TRUE(r.is_singly_labeled());
  EXPECT_TRUE(relabeling_contains(t));
}

TEST(RelabeledSingleTree, FreshNamesAvoidExistingLabels) {
  const MulTree t = tree("((a,b,f),(c,d,f),'f#1');");
  const MulTree r = relabeled_single_tree(t);
  EXPECT_TRUE(r.is_singly_labeled());
  EXPECT_EQ(r.label_count(), 7u);
}

TEST(PrunableOracle, Fixtures) {
  const MulTree e2 = tree(kE2);
  EXPECT_FALSE(is_prunable_oracle(e2, leaf_named(e2, "f", 0)));
  EXPECT_FALSE(is_prunable_oracle(e2, leaf_named(e2, "f", 1)));
  const MulTree q = tree("((a,b),(c,d));");
  for (NodeId x : q.leaves()) EXPECT_FALSE(is_prunable_oracle(q, x));
  // Duplicates brought onto one pendant node.
  const MulTree merged = tree("((a,f),b,c,b,c,(d,e));");
  EXPECT_TRUE(is_prunable_oracle(merged, leaf_named(merged, "b", 1)));
}

TEST(ContractibleOracle, Fixtures) {
  const MulTree e2 = tree(kE2);
  EXPECT_FALSE(is_contractible_oracle(e2, e2.internal_edges().front()));
  const MulTree e1 = tree(kE1);
  EXPECT_TRUE(is_contractible_oracle(e1, e1_central(e1)));
  // Edges resolving nothing are always contractible.
  for (const Edge& e : e1.internal_edges())
    if (!edge_label_partition(e1, e).informative()) EXPECT_TRUE(is_contractible_oracle(e1, e));
}

TEST(MaximallyReducedOracle, Fixtures) {
  EXPECT_TRUE(is_maximally_reduced_oracle(tree(kE2)));
  EXPECT_FALSE(is_maximally_reduced_oracle(tree(kE1)));
  EXPECT_TRUE(is_maximally_reduced_oracle(tree("((a,f),b,c,(d,e));")));
}

TEST(EdgesWithoutUniqueQuartet, E1CentralEdge) {
  const MulTree t = tree(kE1);
  const auto edges = edges_without_unique_quartet(t);
  const Edge c = e1_central(t);
  EXPECT_TRUE(std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e == c || e == c.reversed(); }));
  EXPECT_TRUE(edges_without_unique_quartet(tree(kE2)).empty());
}
