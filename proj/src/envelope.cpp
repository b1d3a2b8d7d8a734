#include "hbesov/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hbesov/trace_gamma.hpp"

namespace hbesov {

double EnvelopePair::value_at_level(int k) const {
  const int idx = k - first_level;
  if (idx < 0 || idx >= static_cast<int>(grid.size()))
    throw std::out_of_range("EnvelopePair::value_at_level: level outside grid");
  return grid[static_cast<std::size_t>(idx)].value;
}

int level_floor(const GaugeExpr& g) {
  const SeqExpr h = hseq(g);
  for (int j = 0; j <= 1 << 20; ++j)
    if (eval(h, static_cast<std::size_t>(j)) < 1.0) return j;
  throw std::domain_error("level_floor: gauge does not drop below 1");
}

double SigmaStep::operator()(double y) const {
  if (!(y >= inv_levels.front()))
    throw std::invalid_argument("SigmaStep: argument below the grid");
  const auto it = std::upper_bound(inv_levels.begin(), inv_levels.end(), y);
  const std::size_t j = static_cast<std::size_t>(it - inv_levels.begin()) - 1;
  if (j + 1 >= inv_levels.size()) throw std::invalid_argument("SigmaStep: argument beyond the grid");
  return eval(sigma, j);
}

SigmaStep sigma_step(const SeqExpr& sigma, const GaugeExpr& g, int levels) {
  if (levels < 1) throw std::invalid_argument("sigma_step: levels >= 1");
  const SeqExpr h = hseq(g);
  SigmaStep st;
  st.sigma = sigma;
  st.first_level = level_floor(g);
  st.inv_levels.resize(static_cast<std::size_t>(levels) + 1);
  for (int j = 0; j <= levels; ++j)
    st.inv_levels[static_cast<std::size_t>(j)] = 1.0 / eval(h, static_cast<std::size_t>(j));
  for (std::size_t j = 0; j + 1 < st.inv_levels.size(); ++j)
    if (!(st.inv_levels[j] < st.inv_levels[j + 1]))
      throw std::domain_error("sigma_step: levels must decay strictly");
  return st;
}

double psi_ru(const SeqExpr& sigma, const GaugeExpr& g, double r, double u, int k) {
  if (!(r > 0.0)) throw std::invalid_argument("psi_ru: r must be positive");
  require_exponent(u, "psi_ru");
  if (!(g.d > 0.0)) throw std::domain_error("psi_ru: requires strictly decaying levels (d > 0)");
  const int j0 = level_floor(g);
  if (k < j0) throw std::invalid_argument("psi_ru: level below the grid floor");

  const SeqExpr h = hseq(g);
  if (std::isinf(u)) {
    double best = -kInfExp;
    for (int j = j0; j <= k; ++j) {
      const std::size_t jj = static_cast<std::size_t>(j);
      best = std::max(best, -log2_eval(h, jj) / r - log2_eval(sigma, jj));
    }
    return std::exp2(best);
  }
  // log-domain accumulation; the summands can span hundreds of binary orders
  double mx = -kInfExp;
  std::vector<double> lt(static_cast<std::size_t>(k - j0 + 1));
  for (int j = j0; j <= k; ++j) {
    const std::size_t jj = static_cast<std::size_t>(j);
    const double t = -u / r * log2_eval(h, jj) - u * log2_eval(sigma, jj);
    lt[static_cast<std::size_t>(j - j0)] = t;
    mx = std::max(mx, t);
  }
  double acc = 0.0;
  for (double t : lt) acc += std::exp2(t - mx);
  return std::exp2((mx + std::log2(acc)) / u);
}

EnvelopePair growth_envelope_lp(const GaugeExpr& g, double p, int levels) {
  if (!(p > 0.0) || std::isinf(p)) throw std::invalid_argument("growth_envelope_lp: p in (0,inf)");
  const int j0 = level_floor(g);
  if (levels < j0) throw std::invalid_argument("growth_envelope_lp: levels below grid floor");
  const SeqExpr h = hseq(g);
  EnvelopePair pair;
  pair.first_level = j0;
  pair.index_u = p;
  pair.closed_form = ClosedFormTag{ClosedFormTag::Kind::Power, -1.0 / p};
  for (int k = j0; k <= levels; ++k) {
    const double t = eval(h, static_cast<std::size_t>(k));
    pair.grid.push_back({t, std::pow(t, -1.0 / p)});
  }
  return pair;
}

GammaEnvelope growth_envelope_gamma(const SpaceGamma& x, int levels) {
  validate(x);
  if (trace_exists(x).status == Tri::Fails)
    throw std::domain_error("growth_envelope_gamma: trace space does not exist");
  const HIndexReport hr = h_index_conditions(x.gauge);
  if (!(hr.upind_h < 0.0))
    throw std::domain_error("growth_envelope_gamma: requires strictly decaying levels");

  const SeqExpr h = hseq(x.gauge);
  const double qp = dual_exponent(x.q);
  const LqDecision t2 = lq_membership(mul(pow_seq(x.sigma, -1.0), pow_seq(h, -1.0 / x.p)), qp);

  GammaEnvelope out;
  if (t2.in()) {
    // The space embeds into L_inf; the envelope stays bounded and the
    // blow-up grid is meaningless.
    out.mode = EnvelopeMode::Bounded;
    out.pair.first_level = level_floor(x.gauge);
    out.pair.index_u = x.q;
    return out;
  }

  const bool porous = porosity(x.gauge).status == Tri::Holds;
  const bool t3 = x.sigma.rate > x.gauge.d * positive_part(1.0 / x.p - 1.0);
  out.mode = (porous && hr.t1 && t3) ? EnvelopeMode::Exact : EnvelopeMode::LowerBoundOnly;

  const int j0 = level_floor(x.gauge);
  if (levels < j0) throw std::invalid_argument("growth_envelope_gamma: levels below grid floor");
  out.pair.first_level = j0;
  out.pair.index_u = x.q;
  for (int k = j0; k <= levels; ++k)
    out.pair.grid.push_back(
        {eval(h, static_cast<std::size_t>(k)), psi_ru(x.sigma, x.gauge, x.p, qp, k)});

  // Closed-form tag for the pure power family only.
  if (x.sigma.poly == 0.0 && x.sigma.loglog == 0.0 && x.gauge.logexp == 0.0) {
    const double s = x.sigma.rate, d = x.gauge.d;
    if (s < d / x.p)
      out.pair.closed_form = ClosedFormTag{ClosedFormTag::Kind::Power, s / d - 1.0 / x.p};
    else if (s == d / x.p && !std::isinf(qp))
      out.pair.closed_form = ClosedFormTag{ClosedFormTag::Kind::LogPower, 1.0 / qp};
  }
  return out;
}

double env_measure_mass(const EnvelopePair& pair, int k, int iota0) {
  if (iota0 < 1) throw std::invalid_argument("env_measure_mass: iota0 >= 1");
  return std::log2(pair.value_at_level((k + 1) * iota0) / pair.value_at_level(k * iota0));
}

CorrespondenceReport envelope_correspondence(double d, double beta, double s, double p, double q,
                                             int n, int kmin, int kmax) {
  const GaugeExpr g = make_gauge(d, beta, n);
  if (!(s < d / p && s > d * positive_part(1.0 / p - 1.0)))
    throw std::invalid_argument("envelope_correspondence: parameters must be sub-critical");
  const SeqExpr sigma = make_seq(1.0, s, beta);  // 2^(js) Psi(2^-j)
  const double qp = dual_exponent(q);
  const double stilde = s + (static_cast<double>(n) - d) / p;

  CorrespondenceReport rep;
  rep.max_ratio = -kInfExp;
  rep.min_ratio = kInfExp;
  const int j0 = level_floor(g);
  for (int k = std::max(kmin, j0); k <= kmax; ++k) {
    // Fractal side at argument t^d Psi(t) = h_k, i.e. the level-k grid value.
    const double lhs = psi_ru(sigma, g, p, qp, k);
    // Ambient side closed form at t^n = 2^-kn.
    const double kn = static_cast<double>(k) * n;
    const double rhs =
        std::exp2(-kn * (stilde / n - 1.0 / p)) * std::pow(1.0 + kn, -beta * (1.0 + 1.0 / p));
    const double ratio = lhs / rhs;
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    rep.min_ratio = std::min(rep.min_ratio, ratio);
  }
  return rep;
}

}  // namespace hbesov
