#include "multree/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include "multree/generate.hpp"
#include "multree/reduce.hpp"

namespace multree {

std::vector<BenchPoint> run_bench(const BenchConfig& config) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchPoint> out;
  for (std::size_t m : config.multiplicities) {
    for (std::size_t n : config.sizes) {
      std::mt19937_64 rng(config.seed ^ (std::uint64_t(n) << 20) ^ m);
      std::vector<MulTree> trees;
      BenchPoint p;
      p.leaves = n;
      p.multiplicity = m;
      for (std::size_t k = 0; k < std::max<std::size_t>(1, config.trees); ++k) {
        trees.push_back(random_multree_fixed(rng, n, m));
        p.peak_nodes = std::max(p.peak_nodes, trees.back().node_count());
      }
      double elapsed = 0.0;
      std::size_t produced = 0;
      do {
        for (const MulTree& t : trees) {
          const auto start = Clock::now();
          auto [mrf, report] = reduce_to_mrf(t);
          elapsed += std::chrono::duration<double>(Clock::now() - start).count();
          produced += mrf.leaf_count();
          ++p.runs;
        }
      } while (elapsed < config.min_seconds);
      p.seconds = elapsed / double(p.runs);
      p.output_leaves = double(produced) / double(p.runs);
      out.push_back(p);
    }
  }
  return out;
}

double loglog_slope(const std::vector<BenchPoint>& points, std::size_t multiplicity) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t k = 0;
  for (const BenchPoint& p : points) {
    if (p.multiplicity != multiplicity || p.seconds <= 0.0) continue;
    const double x = std::log(double(p.leaves)), y = std::log(p.seconds);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
    ++k;
  }
  const double den = double(k) * sxx - sx * sx;
  if (k < 2 || den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (double(k) * sxy - sx * sy) / den;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchPoint>& points) {
  out << "leaves,multiplicity,runs,seconds,peak_nodes,output_leaves\r\n";
  char buf[160];
  for (const BenchPoint& p : points) {
    std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.9f,%zu,%.1f\r\n", p.leaves, p.multiplicity, p.runs, p.seconds,
                  p.peak_nodes, p.output_leaves);
    out << buf;
  }
}

}  // namespace multree
