#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "multree/tree.hpp"

namespace multree {

struct GeneratorConfig {
  std::size_t min_leaves = 4;
  std::size_t max_leaves = 12;
  /// Largest number of leaves sharing one label.
  std::size_t max_multiplicity = 3;
  /// Chance that an internal edge of the grown binary topology is contracted,
  /// giving polytomies.
  double contract_probability = 0.15;
};

/// Grows a random singly-labeled unrooted topology by repeatedly splitting a
/// random edge, contracts some internal edges, then grafts extra copies of
/// random labels onto random edges or internal nodes until the tree has
/// `leaves` leaves. Labels are named t0, t1, ...
MulTree random_multree(std::mt19937_64& rng, std::size_t leaves, std::size_t max_multiplicity,
                       double contract_probability = 0.15);

/// Leaf count drawn uniformly from the configured range.
MulTree random_multree(std::mt19937_64& rng, const GeneratorConfig& config);

/// Singly-labeled special case.
MulTree random_singly_tree(std::mt19937_64& rng, std::size_t leaves, double contract_probability = 0.15);

/// Tree with exactly `leaves` leaves where labels repeat about `multiplicity`
/// times each (ceil(leaves / multiplicity) distinct labels). Used for scaling
/// runs where the label multiplicity is the controlled variable.
MulTree random_multree_fixed(std::mt19937_64& rng, std::size_t leaves, std::size_t multiplicity);

}  // namespace multree
