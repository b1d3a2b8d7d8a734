#include "hbesov/seq.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hbesov {

namespace {

void check_seq(const SeqExpr& s) {
  if (!(s.scale > 0.0)) throw std::invalid_argument("SeqExpr: scale must be > 0");
  for (double v : s.prefix)
    if (!(v > 0.0)) throw std::invalid_argument("SeqExpr: prefix entries must be > 0");
}

}  // namespace

SeqExpr paren(double a) { return SeqExpr{1.0, a, 0.0, 0.0, {}}; }

SeqExpr make_seq(double scale, double rate, double poly, double loglog,
                 std::vector<double> prefix) {
  SeqExpr s{scale, rate, poly, loglog, std::move(prefix)};
  check_seq(s);
  return s;
}

double log2_eval(const SeqExpr& s, std::size_t j) {
  if (j < s.prefix.size()) return std::log2(s.prefix[j]);
  double v = std::log2(s.scale) + s.rate * static_cast<double>(j);
  if (s.poly != 0.0) v += s.poly * std::log2(1.0 + static_cast<double>(j));
  if (s.loglog != 0.0) v += s.loglog * std::log2(std::log(M_E + static_cast<double>(j)));
  return v;
}

double eval(const SeqExpr& s, std::size_t j) {
  if (j < s.prefix.size()) return s.prefix[j];
  double v = s.scale * std::exp2(s.rate * static_cast<double>(j));
  if (s.poly != 0.0) v *= std::pow(1.0 + static_cast<double>(j), s.poly);
  if (s.loglog != 0.0) v *= std::pow(std::log(M_E + static_cast<double>(j)), s.loglog);
  return v;
}

SeqExpr mul(const SeqExpr& x, const SeqExpr& y) {
  SeqExpr r{x.scale * y.scale, x.rate + y.rate, x.poly + y.poly, x.loglog + y.loglog, {}};
  const std::size_t n = std::max(x.prefix.size(), y.prefix.size());
  r.prefix.resize(n);
  for (std::size_t j = 0; j < n; ++j) r.prefix[j] = eval(x, j) * eval(y, j);
  return r;
}

SeqExpr mul(const SeqExpr& x, const SeqExpr& y, const SeqExpr& z) { return mul(mul(x, y), z); }

SeqExpr pow_seq(const SeqExpr& s, double r) {
  SeqExpr out{std::pow(s.scale, r), s.rate * r, s.poly * r, s.loglog * r, {}};
  out.prefix.resize(s.prefix.size());
  for (std::size_t j = 0; j < s.prefix.size(); ++j) out.prefix[j] = std::pow(s.prefix[j], r);
  return out;
}

IndexPair indices(const SeqExpr& s) { return IndexPair{s.rate, s.rate}; }

IndexPair boyd_indices(const SeqExpr& s) { return IndexPair{s.rate, s.rate}; }

IndexPair boyd_indices_numeric(const SeqExpr& s, std::size_t j, std::size_t shift_cap) {
  if (j == 0) throw std::invalid_argument("boyd_indices_numeric: j must be >= 1");
  double sup = -kInfExp, inf = kInfExp;
  for (std::size_t k = 0; k <= shift_cap; k = (k == 0 ? 1 : k * 2)) {
    const double d = log2_eval(s, j + k) - log2_eval(s, k);
    sup = std::max(sup, d);
    inf = std::min(inf, d);
  }
  const double jj = static_cast<double>(j);
  return IndexPair{inf / jj, sup / jj};
}

std::pair<double, double> admissibility_bounds(const SeqExpr& s, std::size_t probe) {
  double lo = std::exp2(s.rate), hi = lo;
  for (std::size_t j = 0; j < probe; ++j) {
    const double r = eval(s, j + 1) / eval(s, j);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

LqDecision lq_membership(const SeqExpr& s, double q) {
  require_exponent(q, "lq_membership");
  LqDecision d;
  d.q = q;
  const double a = s.rate, b = s.poly, c = s.loglog;
  if (std::isinf(q)) {
    if (a < 0.0) { d.verdict = Membership::In; d.reason = "rate-negative"; }
    else if (a > 0.0) { d.verdict = Membership::Out; d.reason = "rate-positive"; }
    else if (b < 0.0) { d.verdict = Membership::In; d.reason = "poly-decay-bounded"; }
    else if (b > 0.0) { d.verdict = Membership::Out; d.reason = "poly-growth-unbounded"; }
    else if (c <= 0.0) { d.verdict = Membership::In; d.reason = "loglog-bounded"; }
    else { d.verdict = Membership::Out; d.reason = "loglog-growth-unbounded"; }
    return d;
  }
  if (a < 0.0) { d.verdict = Membership::In; d.reason = "rate-negative"; return d; }
  if (a > 0.0) { d.verdict = Membership::Out; d.reason = "rate-positive"; return d; }
  const double bq = b * q;
  if (bq < -1.0) { d.verdict = Membership::In; d.reason = "poly-summable"; return d; }
  if (bq > -1.0) { d.verdict = Membership::Out; d.reason = "poly-divergent"; return d; }
  const double cq = c * q;
  if (cq < -1.0) { d.verdict = Membership::In; d.reason = "loglog-summable"; return d; }
  // c*q == -1 is the iterated-log critical line; the series still diverges.
  d.verdict = Membership::Out;
  d.reason = cq == -1.0 ? "loglog-critical-divergent" : "poly-critical-divergent";
  return d;
}

LqDecision landau_dual(const SeqExpr& alpha, double q1, double q2) {
  return lq_membership(alpha, q_star(q1, q2));
}

TabulatedIndices tabulated_indices(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 8) throw std::invalid_argument("tabulated_indices: need at least 8 values");
  for (double v : values)
    if (!(v > 0.0)) throw std::invalid_argument("tabulated_indices: values must be > 0");

  std::vector<double> ratios(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) ratios[j] = std::log2(values[j + 1] / values[j]);

  auto window_minmax = [&](std::size_t lo, std::size_t hi) {
    double mn = kInfExp, mx = -kInfExp;
    for (std::size_t j = lo; j < hi; ++j) {
      mn = std::min(mn, ratios[j]);
      mx = std::max(mx, ratios[j]);
    }
    return std::pair<double, double>{mn, mx};
  };

  const std::size_t m = ratios.size();
  const auto last = window_minmax(m / 2, m);
  const auto prev = window_minmax(m / 4, m / 2);
  TabulatedIndices out;
  out.indices = IndexPair{last.first, last.second};
  out.window_gap = std::max(std::fabs(last.first - prev.first), std::fabs(last.second - prev.second));
  out.stable = out.window_gap <= 1e-3;
  return out;
}

}  // namespace hbesov
