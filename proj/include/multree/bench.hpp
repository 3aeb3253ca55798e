#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <vector>

namespace multree {

struct BenchConfig {
  std::vector<std::size_t> sizes{100, 300, 1000, 3000, 10000};
  std::vector<std::size_t> multiplicities{1};
  std::uint64_t seed = 1;
  /// Distinct random trees timed per (size, multiplicity) cell.
  std::size_t trees = 3;
  /// The cell's trees are reduced again until this much time has passed, so
  /// small sizes are not lost in clock noise.
  double min_seconds = 0.05;
};

struct BenchPoint {
  std::size_t leaves = 0;
  std::size_t multiplicity = 0;
  std::size_t runs = 0;
  double seconds = 0.0;         // mean wall time of one reduction
  std::size_t peak_nodes = 0;   // largest tree handled in the cell
  double output_leaves = 0.0;   // mean MRF size
};

/// Times reduce_to_mrf over the size ladder for every multiplicity. Tree
/// generation is not timed.
std::vector<BenchPoint> run_bench(const BenchConfig& config);

/// Least-squares slope of log(seconds) against log(leaves) over the points
/// with the given multiplicity. NaN with fewer than two points.
double loglog_slope(const std::vector<BenchPoint>& points, std::size_t multiplicity);

/// Header plus one row per point.
void write_bench_csv(std::ostream& out, const std::vector<BenchPoint>& points);

}  // namespace multree
