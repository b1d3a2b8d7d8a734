#include "hbesov/hset.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>

namespace hbesov {

NormalizedLevels normalize_levels(const std::vector<double>& h, int n) {
  if (h.size() < 2) throw std::invalid_argument("normalize_levels: need at least two levels");
  for (double v : h)
    if (!(v > 0.0)) throw std::invalid_argument("normalize_levels: levels must be positive");
  const double cap = std::exp2(static_cast<double>(n));
  NormalizedLevels out;
  out.values.resize(h.size());
  out.values[0] = 1.0;
  double cur = 1.0;
  double distortion = 1.0;
  for (std::size_t j = 0; j + 1 < h.size(); ++j) {
    const double ratio = std::clamp(h[j] / h[j + 1], 1.0, cap);
    cur /= ratio;
    out.values[j + 1] = cur;
    const double rel = cur / (h[j + 1] / h[0]);
    distortion = std::max(distortion, std::max(rel, 1.0 / rel));
  }
  out.max_distortion = distortion;
  return out;
}

NormalizedLevels normalize_gauge(const GaugeExpr& g, int levels) {
  if (is_measure_function(g).status != Tri::Holds)
    throw std::domain_error("normalize_gauge: gauge is not a measure function");
  if (levels < 1) throw std::invalid_argument("normalize_gauge: levels >= 1");
  const SeqExpr h = hseq(g);
  std::vector<double> hv(static_cast<std::size_t>(levels) + 1);
  for (int j = 0; j <= levels; ++j) hv[static_cast<std::size_t>(j)] = eval(h, j);
  return normalize_levels(hv, g.n);
}

DyadicTree build_cantor(const std::vector<double>& htilde, int depth) {
  if (depth < 1) throw std::invalid_argument("build_cantor: depth >= 1");
  if (static_cast<int>(htilde.size()) < depth + 1)
    throw std::invalid_argument("build_cantor: htilde too short for depth");

  DyadicTree t;
  t.depth = depth;
  t.htilde.assign(htilde.begin(), htilde.begin() + depth + 1);
  t.nodes.resize(static_cast<std::size_t>(depth) + 1);
  t.masses.resize(static_cast<std::size_t>(depth) + 1);
  t.child_counts.resize(static_cast<std::size_t>(depth));

  t.nodes[0] = {0};
  t.masses[0] = {1.0};
  double bound = std::fabs(std::log2(1.0 / htilde[0]));
  for (int j = 0; j < depth; ++j) {
    const std::size_t lj = static_cast<std::size_t>(j);
    const auto& cur = t.nodes[lj];
    const auto& curm = t.masses[lj];
    auto& cc = t.child_counts[lj];
    auto& nxt = t.nodes[lj + 1];
    auto& nxtm = t.masses[lj + 1];
    cc.resize(cur.size());
    const double target = htilde[lj + 1];
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const bool split = curm[i] > target;
      cc[i] = split ? 2 : 1;
      const double child_mass = split ? curm[i] / 2.0 : curm[i];
      nxt.push_back(cur[i] * 2);
      nxtm.push_back(child_mass);
      if (split) {
        nxt.push_back(cur[i] * 2 + 1);
        nxtm.push_back(child_mass);
      }
      bound = std::max(bound, std::fabs(std::log2(child_mass / target)));
    }
  }
  t.mass_ratio_bound = bound;
  return t;
}

namespace {

double node_mass_at(const DyadicTree& t, int level, std::uint64_t pos) {
  const auto& v = t.nodes[static_cast<std::size_t>(level)];
  const auto it = std::lower_bound(v.begin(), v.end(), pos);
  if (it == v.end() || *it != pos) return 0.0;
  return t.masses[static_cast<std::size_t>(level)][static_cast<std::size_t>(it - v.begin())];
}

}  // namespace

double ball_mass(const DyadicTree& tree, const std::string& address, int j) {
  if (j < 0 || j > tree.depth) throw std::invalid_argument("ball_mass: level out of range");
  if (static_cast<int>(address.size()) < j)
    throw std::invalid_argument("ball_mass: address shorter than level");
  for (char c : address)
    if (c != '0' && c != '1') throw std::invalid_argument("ball_mass: address must be binary");

  // Left endpoint of the addressed cell, scaled to level j: y = x * 2^j.
  double y = 0.0;
  for (std::size_t i = 0; i < address.size(); ++i)
    if (address[i] == '1') y += std::exp2(static_cast<double>(j) - static_cast<double>(i) - 1.0);

  // Cells [q 2^-j, (q+1) 2^-j] meeting the closed ball [x - 2^-j, x + 2^-j]:
  // q in [ceil(y) - 2, floor(y) + 1].
  const std::int64_t qlo = static_cast<std::int64_t>(std::ceil(y)) - 2;
  const std::int64_t qhi = static_cast<std::int64_t>(std::floor(y)) + 1;
  const std::int64_t qmax = (static_cast<std::int64_t>(1) << j) - 1;
  double mass = 0.0;
  for (std::int64_t q = std::max<std::int64_t>(qlo, 0); q <= std::min(qhi, qmax); ++q)
    mass += node_mass_at(tree, j, static_cast<std::uint64_t>(q));
  return mass;
}

std::string random_address(const DyadicTree& tree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::string addr;
  std::uint64_t pos = 0;
  for (int j = 0; j < tree.depth; ++j) {
    const auto& lvl = tree.nodes[static_cast<std::size_t>(j)];
    const auto it = std::lower_bound(lvl.begin(), lvl.end(), pos);
    const std::size_t idx = static_cast<std::size_t>(it - lvl.begin());
    const bool split = tree.child_counts[static_cast<std::size_t>(j)][idx] == 2;
    const int bit = split ? static_cast<int>(rng() & 1u) : 0;
    addr.push_back(bit ? '1' : '0');
    pos = pos * 2 + static_cast<std::uint64_t>(bit);
  }
  return addr;
}

HCheckStats empirical_h_check(const DyadicTree& tree, const GaugeExpr& g, int samples,
                              std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("empirical_h_check: samples >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level_dist(1, tree.depth);
  std::vector<double> ratios;
  ratios.reserve(static_cast<std::size_t>(samples));
  double doubling_max = 0.0;
  for (int i = 0; i < samples; ++i) {
    const std::string addr = random_address(tree, rng());
    const int j = level_dist(rng);
    const double bm = ball_mass(tree, addr, j);
    ratios.push_back(bm / gauge_eval(g, std::exp2(-j)));
    if (j >= 2) {
      const double bigger = ball_mass(tree, addr, j - 1);
      doubling_max = std::max(doubling_max, bigger / bm);
    }
  }
  std::sort(ratios.begin(), ratios.end());
  HCheckStats st;
  st.min_ratio = ratios.front();
  st.max_ratio = ratios.back();
  st.median_ratio = ratios[ratios.size() / 2];
  st.doubling_max = doubling_max;
  st.samples = samples;
  return st;
}

double StepFunction::operator()(double t) const {
  if (t < 0.0) throw std::invalid_argument("StepFunction: t >= 0");
  // right-continuous: value on [breaks[i-1], breaks[i])
  const auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
  const std::size_t idx = static_cast<std::size_t>(it - breaks.begin());
  if (idx >= values.size()) return 0.0;
  return values[idx];
}

StepFunction rearrange(const DyadicTree& tree, const std::vector<double>& leaf_values) {
  const auto& leaves = tree.nodes[static_cast<std::size_t>(tree.depth)];
  const auto& lm = tree.masses[static_cast<std::size_t>(tree.depth)];
  if (leaf_values.size() != leaves.size())
    throw std::invalid_argument("rearrange: one value per depth-level node required");
  std::vector<std::size_t> order(leaves.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return leaf_values[a] > leaf_values[b];
  });
  StepFunction f;
  double acc = 0.0;
  for (std::size_t i : order) {
    acc += lm[i];
    if (!f.values.empty() && f.values.back() == leaf_values[i])
      f.breaks.back() = acc;  // merge equal plateaus
    else {
      f.values.push_back(leaf_values[i]);
      f.breaks.push_back(acc);
    }
  }
  return f;
}

void serialize(const DyadicTree& tree, std::ostream& os) {
  for (const auto& level : tree.child_counts) {
    std::string line(level.size(), '1');
    for (std::size_t i = 0; i < level.size(); ++i) line[i] = level[i] == 2 ? '2' : '1';
    os << line << '\n';
  }
}

DyadicTree deserialize(std::istream& is) {
  DyadicTree t;
  t.nodes.push_back({0});
  t.masses.push_back({1.0});
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto& cur = t.nodes.back();
    const auto& curm = t.masses.back();
    if (line.size() != cur.size())
      throw std::invalid_argument("deserialize: level width does not match node count");
    std::vector<std::uint8_t> cc(line.size());
    std::vector<std::uint64_t> nxt;
    std::vector<double> nxtm;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] != '1' && line[i] != '2')
        throw std::invalid_argument("deserialize: child counts must be '1' or '2'");
      cc[i] = static_cast<std::uint8_t>(line[i] - '0');
      const bool split = cc[i] == 2;
      const double child_mass = split ? curm[i] / 2.0 : curm[i];
      nxt.push_back(cur[i] * 2);
      nxtm.push_back(child_mass);
      if (split) {
        nxt.push_back(cur[i] * 2 + 1);
        nxtm.push_back(child_mass);
      }
    }
    t.child_counts.push_back(std::move(cc));
    t.nodes.push_back(std::move(nxt));
    t.masses.push_back(std::move(nxtm));
  }
  t.depth = static_cast<int>(t.child_counts.size());
  if (t.depth == 0) throw std::invalid_argument("deserialize: empty tree");
  return t;
}

}  // namespace hbesov
