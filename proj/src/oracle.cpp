#include "hbesov/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hbesov {

namespace {

double lq_norm_log2(const std::vector<double>& log2v, double q) {
  if (log2v.empty()) return 0.0;
  double mx = -kInfExp;
  for (double t : log2v) mx = std::max(mx, t);
  if (mx == -kInfExp) return 0.0;  // all zero
  if (std::isinf(q)) return std::exp2(mx);
  double acc = 0.0;
  for (double t : log2v) acc += std::exp2(q * (t - mx));
  return std::exp2(mx + std::log2(acc) / q);
}

}  // namespace

double lq_norm(const std::vector<double>& v, double q) {
  require_exponent(q, "lq_norm");
  std::vector<double> lv;
  lv.reserve(v.size());
  for (double x : v) lv.push_back(x == 0.0 ? -kInfExp : std::log2(std::fabs(x)));
  return lq_norm_log2(lv, q);
}

double bnorm(const CoeffProfile& profile, const SeqExpr& sigma, double p, double q) {
  if (!(p > 0.0)) throw std::invalid_argument("bnorm: p must be positive");
  require_exponent(q, "bnorm");
  std::vector<double> weighted(profile.values.size());
  for (std::size_t j = 0; j < profile.values.size(); ++j)
    weighted[j] = eval(sigma, j) * std::fabs(profile.values[j]);
  return lq_norm(weighted, q);
}

double diag_opnorm_exact(const SeqExpr& alpha, double q1, double q2, int J) {
  if (J < 0) throw std::invalid_argument("diag_opnorm_exact: J >= 0");
  const double qs = q_star(q1, q2);
  std::vector<double> lv(static_cast<std::size_t>(J) + 1);
  for (int j = 0; j <= J; ++j) lv[static_cast<std::size_t>(j)] = log2_eval(alpha, j);
  return lq_norm_log2(lv, qs);
}

double diag_opnorm_search(const SeqExpr& alpha, double q1, double q2, int J, int trials,
                          std::uint64_t seed) {
  if (J < 0) throw std::invalid_argument("diag_opnorm_search: J >= 0");
  if (trials < 1) throw std::invalid_argument("diag_opnorm_search: trials >= 1");
  const double qs = q_star(q1, q2);
  const std::size_t m = static_cast<std::size_t>(J) + 1;

  std::vector<double> la(m);
  for (std::size_t j = 0; j < m; ++j) la[j] = log2_eval(alpha, j);

  // ||alpha * beta||_q2 for beta given in log2, normalised to ||beta||_q1 = 1.
  auto value_of = [&](std::vector<double> lb) {
    const double nrm = lq_norm_log2(lb, q1);
    const double shift = std::log2(nrm);
    std::vector<double> prod(m);
    for (std::size_t j = 0; j < m; ++j) prod[j] = la[j] + lb[j] - shift;
    return lq_norm_log2(prod, q2);
  };

  double best = 0.0;
  // Duality witness: attains the sup exactly.
  if (std::isinf(qs)) {
    std::size_t arg = 0;
    for (std::size_t j = 1; j < m; ++j)
      if (la[j] > la[arg]) arg = j;
    std::vector<double> lb(m, -kInfExp);
    lb[arg] = 0.0;
    best = std::max(best, value_of(std::move(lb)));
  } else if (std::isinf(q1)) {
    best = std::max(best, value_of(std::vector<double>(m, 0.0)));
  } else {
    std::vector<double> lb(m);
    for (std::size_t j = 0; j < m; ++j) lb[j] = qs / q1 * la[j];
    best = std::max(best, value_of(std::move(lb)));
  }

  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1));
    std::uniform_real_distribution<double> u(-8.0, 4.0);
    std::vector<double> lb(m);
    for (std::size_t j = 0; j < m; ++j) lb[j] = u(rng);
    best = std::max(best, value_of(std::move(lb)));
  }
  return best;
}

LandauWitness landau_witness(const SeqExpr& alpha, double q1, double q2, int T) {
  require_exponent(q1, "landau_witness");
  require_exponent(q2, "landau_witness");
  if (T < 1) throw std::invalid_argument("landau_witness: T >= 1");
  const bool unbounded = alpha.rate > 0.0 || (alpha.rate == 0.0 && alpha.poly > 0.0) ||
                         (alpha.rate == 0.0 && alpha.poly == 0.0 && alpha.loglog > 0.0);
  if (!unbounded)
    throw std::invalid_argument("landau_witness: alpha is bounded, no witness at this scale");

  // Continuous-level evaluation of log2 alpha; levels are treated as reals
  // since the doubling indices quickly leave the exact integer range.
  auto lval = [&](double l) {
    if (l < static_cast<double>(alpha.prefix.size()))
      return std::log2(alpha.prefix[static_cast<std::size_t>(l)]);
    double v = std::log2(alpha.scale) + alpha.rate * l;
    if (alpha.poly != 0.0) v += alpha.poly * std::log2(1.0 + l);
    if (alpha.loglog != 0.0) v += alpha.loglog * std::log2(std::log(M_E + l));
    return v;
  };

  // Smallest level l > prev with log2 alpha_l >= target: doubling search then
  // integer bisection on the eventually monotone tail.  Once the indices leave
  // the double range the level is reported as inf and the value sits exactly
  // on the doubling target (the family's relative overshoot vanishes there).
  auto next_level = [&](double prev, double log2_target) {
    if (!(prev < 1e250)) return std::pair<double, double>{kInfExp, log2_target};
    double hi = prev + 1.0;
    if (lval(hi) >= log2_target) return std::pair<double, double>{hi, lval(hi)};
    double lo = hi;
    hi = 2.0 * hi;
    while (lval(hi) < log2_target) {
      lo = hi;
      hi *= 2.0;
      if (!(hi < 1e250)) return std::pair<double, double>{kInfExp, log2_target};
    }
    while (hi - lo > 1.0) {
      const double mid = std::floor(lo + (hi - lo) / 2.0);
      if (mid <= lo || mid >= hi) break;  // double precision exhausted
      if (lval(mid) >= log2_target) hi = mid; else lo = mid;
    }
    return std::pair<double, double>{hi, lval(hi)};
  };

  LandauWitness w;
  double prev_level = 0.0;
  double prev_log2a = lval(0.0);
  double beta_acc = 0.0;     // sum of j * alpha^{-q1} (finite q1)
  double beta_sup = 0.0;     // sup for q1 = inf
  double prod_acc = 0.0;     // sum of j^{q2/q1} (finite q2)
  double prod_sup = 0.0;
  for (int j = 1; j <= T; ++j) {
    auto [lvl, l2a] = next_level(prev_level, prev_log2a + 1.0);  // target 2*alpha_prev
    LandauWitness::Term term;
    term.level = lvl;
    term.alpha = std::exp2(l2a);
    const double log2_beta = std::log2(static_cast<double>(j)) * inv_exp(q1) - l2a;
    term.beta = std::exp2(log2_beta);
    w.terms.push_back(term);
    prev_level = lvl;
    prev_log2a = l2a;

    if (std::isinf(q1)) {
      beta_sup = std::max(beta_sup, term.beta);
      w.beta_norm_partials.push_back(beta_sup);
    } else {
      beta_acc += static_cast<double>(j) * std::exp2(-q1 * l2a);
      w.beta_norm_partials.push_back(std::pow(beta_acc, 1.0 / q1));
    }
    const double log2_prod = std::log2(static_cast<double>(j)) * inv_exp(q1);
    if (std::isinf(q2)) {
      prod_sup = std::max(prod_sup, std::exp2(log2_prod));
      w.product_norm_partials.push_back(prod_sup);
    } else {
      prod_acc += std::exp2(q2 * log2_prod);
      w.product_norm_partials.push_back(std::pow(prod_acc, 1.0 / q2));
    }
  }

  if (std::isinf(q1)) {
    w.beta_norm_bound = 1.0 / w.terms.front().alpha;
  } else {
    // sum_{j>=1} j * 2^{-(j-1)q1} = (1 - 2^{-q1})^{-2}
    const double x = std::exp2(-q1);
    w.beta_norm_bound = std::pow(1.0 / ((1.0 - x) * (1.0 - x)), 1.0 / q1) / w.terms.front().alpha;
  }
  return w;
}

std::vector<double> trace_lowerbound_profile(const std::vector<double>& b, const SeqExpr& sigma,
                                             const GaugeExpr& g, double p1, int iota0, int T) {
  if (iota0 < 1 || T < 1) throw std::invalid_argument("trace_lowerbound_profile: iota0,T >= 1");
  if (static_cast<int>(b.size()) < T)
    throw std::invalid_argument("trace_lowerbound_profile: b too short");
  const SeqExpr h = hseq(g);
  std::vector<double> out(static_cast<std::size_t>(T));
  double acc = 0.0;
  for (int r = 1; r <= T; ++r) {
    const std::size_t m = static_cast<std::size_t>(r * iota0);
    acc += b[static_cast<std::size_t>(r - 1)] *
           std::exp2(-log2_eval(sigma, m) - log2_eval(h, m) / p1);
    out[static_cast<std::size_t>(r - 1)] = acc;
  }
  return out;
}

namespace {

void check_envelope_args(const std::vector<double>& b, double q2, int iota0, int k0, int K) {
  if (!(q2 > 1.0) || std::isinf(q2))
    throw std::invalid_argument("envelope_integral: q2 must be in (1,inf)");
  if (iota0 < 1) throw std::invalid_argument("envelope_integral: iota0 >= 1");
  if (k0 < 1 || K < k0) throw std::invalid_argument("envelope_integral: need 1 <= k0 <= K");
  if (static_cast<int>(b.size()) < K) throw std::invalid_argument("envelope_integral: b too short");
}

}  // namespace

double envelope_integral(const std::vector<double>& b, const SeqExpr& sigma, const SeqExpr& tau,
                         const GaugeExpr& g, double p1, double p2, double q2, int iota0, int k0,
                         int K) {
  check_envelope_args(b, q2, iota0, k0, K);
  const double q2p = dual_exponent(q2);
  const SeqExpr h = hseq(g);

  // log2 of w_m = h_m^(-q2'/p2) tau_m^(-q2') and of the head sums W_m.
  const int top = K * iota0;
  std::vector<double> log2W(static_cast<std::size_t>(top) + 1, -kInfExp);
  double lse = -kInfExp;
  for (int m = 1; m <= top; ++m) {
    const std::size_t mm = static_cast<std::size_t>(m);
    const double lw = -q2p / p2 * log2_eval(h, mm) - q2p * log2_eval(tau, mm);
    const double mx = std::max(lse, lw);
    lse = mx + std::log2(std::exp2(lse - mx) + std::exp2(lw - mx));
    log2W[mm] = lse;
  }

  double S = 0.0;
  std::vector<double> log2_terms;
  log2_terms.reserve(static_cast<std::size_t>(K - k0 + 1));
  for (int k = 1; k <= K; ++k) {
    const std::size_t m = static_cast<std::size_t>(k * iota0);
    S += b[static_cast<std::size_t>(k - 1)] *
         std::exp2(-log2_eval(sigma, m) - log2_eval(h, m) / p1);
    if (k < k0) continue;
    const double lw = -q2p / p2 * log2_eval(h, m) - q2p * log2_eval(tau, m);
    log2_terms.push_back(q2 * std::log2(S) - q2 * log2W[m] + lw);
  }
  double mx = -kInfExp;
  for (double t : log2_terms) mx = std::max(mx, t);
  if (mx == -kInfExp) return 0.0;
  double acc = 0.0;
  for (double t : log2_terms) acc += std::exp2(t - mx);
  return std::exp2((mx + std::log2(acc)) / q2);
}

int smallest_growth_stride(const SeqExpr& tau, const GaugeExpr& g, double p2, double factor,
                           int range, int cap) {
  if (!(factor > 1.0)) throw std::invalid_argument("smallest_growth_stride: factor > 1");
  if (range < 1 || cap < 1) throw std::invalid_argument("smallest_growth_stride: range,cap >= 1");
  const SeqExpr h = hseq(g);
  const double need = std::log2(factor);
  for (int i0 = 1; i0 <= cap; ++i0) {
    bool ok = true;
    for (int k = 1; k <= range && ok; ++k) {
      const std::size_t lo = static_cast<std::size_t>(k * i0);
      const std::size_t hi = static_cast<std::size_t>((k + 1) * i0);
      const double gain = (-log2_eval(tau, hi) - log2_eval(h, hi) / p2) -
                          (-log2_eval(tau, lo) - log2_eval(h, lo) / p2);
      ok = gain >= need;
    }
    if (ok) return i0;
  }
  throw std::domain_error("smallest_growth_stride: no stride up to the cap suffices");
}

double envelope_integral_collapsed(const std::vector<double>& b, const SeqExpr& sigma,
                                   const SeqExpr& tau, const GaugeExpr& g, double p1, double p2,
                                   double q2, int iota0, int k0, int K) {
  check_envelope_args(b, q2, iota0, k0, K);
  const SeqExpr h = hseq(g);
  std::vector<double> log2_terms;
  log2_terms.reserve(static_cast<std::size_t>(K - k0 + 1));
  for (int k = k0; k <= K; ++k) {
    const double bk = b[static_cast<std::size_t>(k - 1)];
    if (bk == 0.0) continue;
    const std::size_t m = static_cast<std::size_t>(k * iota0);
    const double core = -log2_eval(sigma, m) + log2_eval(tau, m) +
                        (1.0 / p2 - 1.0 / p1) * log2_eval(h, m);
    log2_terms.push_back(q2 * (std::log2(bk) + core));
  }
  double mx = -kInfExp;
  for (double t : log2_terms) mx = std::max(mx, t);
  if (mx == -kInfExp) return 0.0;
  double acc = 0.0;
  for (double t : log2_terms) acc += std::exp2(t - mx);
  return std::exp2((mx + std::log2(acc)) / q2);
}

}  // namespace hbesov
