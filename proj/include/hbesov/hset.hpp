#ifndef HBESOV_HSET_HPP
#define HBESOV_HSET_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hbesov/gauge.hpp"

namespace hbesov {

/// Finite-depth dyadic tree on [0,1] carrying a probability measure whose
/// level-j node masses track a target level sequence.  Nodes at level j are
/// dyadic intervals [m 2^-j, (m+1) 2^-j]; children split the interval, a
/// single child keeps the left half.
struct DyadicTree {
  int depth = 0;
  std::vector<std::vector<std::uint8_t>> child_counts;  // levels 0..depth-1, per node: 1 or 2
  std::vector<std::vector<std::uint64_t>> nodes;        // positions per level, sorted
  std::vector<std::vector<double>> masses;              // aligned with nodes
  std::vector<double> htilde;                           // build target (empty for loaded trees)
  double mass_ratio_bound = 0.0;  // B with mass/htilde in [2^-B, 2^B] at build time
};

struct NormalizedLevels {
  std::vector<double> values;  // h~_0..J with h~_0 = 1 and ratios in [1, 2^n]
  double max_distortion = 1.0;  // max over j of max(h~/h, h/h~) after rescaling
};

/// Clamp raw level values into the buildable cone: unit start, per-level decay
/// ratio between 1 and 2^n.
NormalizedLevels normalize_levels(const std::vector<double>& h, int n);

/// Level sequence of a measure-function gauge, normalized for construction.
NormalizedLevels normalize_gauge(const GaugeExpr& g, int levels);

/// Greedy construction: walking down, a node splits exactly when its mass
/// exceeds the next level's target.  Masses stay within a factor 2 of the
/// target at every node.
DyadicTree build_cantor(const std::vector<double>& htilde, int depth);

/// Mass of the closed ball of radius 2^-j around the point addressed by the
/// given binary path (its left endpoint), measured through level-j nodes.
double ball_mass(const DyadicTree& tree, const std::string& address, int j);

struct HCheckStats {
  double min_ratio = 0.0;     // ball mass / h(2^-j)
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  double doubling_max = 0.0;  // mass(2r)/mass(r)
  int samples = 0;
};

/// Empirical ball-mass statistics against the gauge over random
/// (address, level) pairs, plus doubling ratios.
HCheckStats empirical_h_check(const DyadicTree& tree, const GaugeExpr& g, int samples,
                              std::uint64_t seed);

/// Random leaf address drawn by walking the tree.
std::string random_address(const DyadicTree& tree, std::uint64_t seed);

/// Right-continuous non-increasing rearrangement of a depth-level value
/// assignment with respect to the tree measure.
struct StepFunction {
  std::vector<double> breaks;  // cumulative masses, increasing
  std::vector<double> values;  // value on [breaks[i-1], breaks[i])
  double operator()(double t) const;
};

StepFunction rearrange(const DyadicTree& tree, const std::vector<double>& leaf_values);

/// Text format: one line per level, child counts as a string of '1'/'2'.
void serialize(const DyadicTree& tree, std::ostream& os);
DyadicTree deserialize(std::istream& is);

}  // namespace hbesov

#endif
