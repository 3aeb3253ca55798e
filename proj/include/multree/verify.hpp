#pragma once
// Oracle-backed property checks for small trees. Shared by `multree verify`
// and the test suites.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "multree/quartet.hpp"
#include "multree/singly.hpp"
#include "multree/tree.hpp"

namespace multree {

/// Property names, in report order.
inline constexpr const char* kPropInformation = "information_preserved";
inline constexpr const char* kPropMaximal = "maximally_reduced";
inline constexpr const char* kPropUniqueQuartet = "unique_quartet_per_edge";
inline constexpr const char* kPropIdempotent = "idempotent";
inline constexpr const char* kPropConflictFree = "conflict_free";
inline constexpr const char* kPropDominance = "dominance_verdicts";
inline constexpr const char* kPropNesting = "path_nesting";
inline constexpr const char* kPropSandwich = "path_sandwich";
inline constexpr const char* kPropRelabeling = "relabeling_containment";
inline constexpr const char* kPropCounts = "count_table";
inline constexpr const char* kPropUniqueness = "unique_mrf";
inline constexpr const char* kPropSinglyInput = "singly_input_fixed";
inline constexpr const char* kPropSinglyStep = "singly_step";
inline constexpr const char* kPropOutcome = "outcome_invariants";

struct PropertyTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  /// Newick of the first few offending inputs.
  std::vector<std::string> examples;
};

struct VerifyOptions {
  OracleLimits limits{12, false};
  /// Information-preserving edits applied for the uniqueness check: a random
  /// count in [1, max_edits]. Zero turns the check off.
  std::size_t max_edits = 5;
  std::size_t examples_kept = 3;
};

/**
 * Runs every property on each tree it is given and keeps per-property tallies.
 * A tree above the oracle limit is counted as skipped and left unchecked.
 */
class Verifier {
 public:
  explicit Verifier(VerifyOptions options = {});

  /// Returns the names of the properties that failed on this tree.
  std::vector<std::string> check(const MulTree& tree, std::mt19937_64& rng);

  const std::vector<PropertyTally>& tallies() const { return tallies_; }
  const PropertyTally& tally(const std::string& name) const;
  std::size_t trees_checked() const { return trees_; }
  std::size_t trees_skipped() const { return skipped_; }
  bool all_passed() const;

 private:
  void record(const char* name, bool ok, const MulTree& tree, std::vector<std::string>& failed);

  VerifyOptions options_;
  std::vector<PropertyTally> tallies_;
  std::size_t trees_ = 0;
  std::size_t skipped_ = 0;
};

// Individual checks, each true when the property holds.

/// Every constant-time verdict on adjacent informative edges agrees with the
/// subset relations of the explicit quartet sets.
bool dominance_verdicts_agree(const MulTree& tree);
/// For every pair of edges oriented along their connecting path
/// u-v ... w-x: M_u ⊆ M_w with equality iff the sizes match, and for an
/// informative (u, v), Δ(u,v) ⊆ Δ(w,x) iff M_v^{uv} = M_x^{wx}.
bool path_nesting_holds(const MulTree& tree);
/// Δ(u,v) ⊆ Δ(w,x) implies Δ(u,v) ⊆ Δ(y,z) ⊆ Δ(w,x) for every edge (y,z)
/// between them.
bool path_sandwich_holds(const MulTree& tree);
/// 𝓘(T) ⊆ 𝓘(relabeled_single_tree(T)) restricted to T's labels.
bool relabeling_contains(const MulTree& tree, const OracleLimits& limits = {});
/// distinct_label_counts agrees with edge_label_partition on every edge.
bool count_table_consistent(const MulTree& tree);
/// Applies `edits` random prunings and contractions, each accepted only when
/// the oracle confirms 𝓘 is unchanged. Stops early when none is left.
MulTree random_preserving_edits(const MulTree& tree, std::size_t edits, std::mt19937_64& rng,
                                const OracleLimits& limits = {});

/// Violations of the outcome invariants for one tree (empty when consistent):
/// exclusive and exhaustive classification, exact label accounting, the
/// naive-loss recount, loss ordering and report bounds.
std::vector<std::string> outcome_violations(const MulTree& input, const PipelineOutcome& outcome);

}  // namespace multree
