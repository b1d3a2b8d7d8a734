#include "hbesov/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hbesov {

GaugeExpr make_gauge(double d, double logexp, int n, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("make_gauge: scale must be > 0");
  if (!(d >= 0.0)) throw std::invalid_argument("make_gauge: d must be >= 0");
  if (n < 1) throw std::invalid_argument("make_gauge: ambient dimension must be >= 1");
  if (d > static_cast<double>(n))
    throw std::invalid_argument("make_gauge: d > n violates the doubling lower bound");
  return GaugeExpr{scale, d, logexp, n};
}

bool in_gauge_class(const GaugeExpr& g) {
  return g.d > 0.0 || (g.d == 0.0 && g.logexp < 0.0);
}

double gauge_eval(const GaugeExpr& g, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("gauge_eval: r must be in (0,1]");
  const double l = std::log2(r);
  // exp2(d*log2 r) rather than pow(r,d): bit-identical to the level sequence
  // at dyadic r, where log2 is exact.
  return g.scale * std::exp2(g.d * l) * std::pow(1.0 + std::fabs(l), g.logexp);
}

SeqExpr hseq(const GaugeExpr& g) {
  if (!in_gauge_class(g)) throw std::domain_error("hseq: gauge is not in the admissible class");
  return SeqExpr{g.scale, -g.d, g.logexp, 0.0, {}};
}

Verdict is_measure_function(const GaugeExpr& g) {
  if (!in_gauge_class(g))
    throw std::domain_error("is_measure_function: gauge is not in the admissible class");
  Verdict v;
  v.citation = "measure-function-criterion";
  const double n = static_cast<double>(g.n);
  if (g.d < n) {
    v.status = Tri::Holds;
    v.notes.push_back("d < n: level ratios dominate 2^(-kn) with room to spare");
  } else if (g.logexp >= 0.0) {  // d == n
    v.status = Tri::Holds;
    v.notes.push_back("d = n with non-negative log exponent");
  } else {
    v.status = Tri::Fails;
    v.notes.push_back("d = n with decaying log factor violates the doubling lower bound");
  }
  return v;
}

Verdict porosity(const GaugeExpr& g) {
  if (is_measure_function(g).status != Tri::Holds)
    throw std::domain_error("porosity: gauge is not a measure function");
  Verdict v;
  v.citation = "porosity-criterion";
  if (g.d < static_cast<double>(g.n)) {
    v.status = Tri::Holds;
    v.notes.push_back("ratio bound with epsilon = (n-d)/2");
  } else {
    v.status = Tri::Fails;
    v.notes.push_back("d = n leaves no epsilon margin");
  }
  return v;
}

Verdict strong_isotropy(const GaugeExpr& g) {
  if (!in_gauge_class(g))
    throw std::domain_error("strong_isotropy: gauge is not in the admissible class");
  Verdict v;
  v.citation = "strong-isotropy-criterion";
  if (g.d > 0.0) {
    v.status = Tri::Holds;
    v.notes.push_back("halving after k=" + std::to_string(halving_levels(g)) + " levels");
  } else {
    v.status = Tri::Fails;
    v.notes.push_back("pure log gauge never halves within a fixed number of levels");
  }
  return v;
}

int halving_levels(const GaugeExpr& g) {
  if (!(g.d > 0.0)) throw std::domain_error("halving_levels: requires d > 0");
  // 2^(-dk) * ((1+j+k)/(1+j))^beta <= 1/2 for all large j.  The polynomial
  // factor tends to 1, from above when beta > 0, so the margin must be strict
  // in that case.
  const double k = 1.0 / g.d;
  const double kc = std::ceil(k);
  if (g.logexp > 0.0) return static_cast<int>(kc == k ? kc + 1 : kc);
  return static_cast<int>(kc);
}

HIndexReport h_index_conditions(const GaugeExpr& g) {
  const IndexPair ip = indices(hseq(g));
  HIndexReport r;
  r.upind_h = ip.upper;
  r.lowind_h = ip.lower;
  r.t1 = g.d > 0.0 && g.d <= static_cast<double>(g.n);
  return r;
}

IsotropyReport numeric_strong_isotropy_equivalences(const GaugeExpr& g, int levels) {
  if (levels < 1) throw std::invalid_argument("numeric_strong_isotropy_equivalences: levels >= 1");
  const SeqExpr h = hseq(g);
  std::vector<double> hv(static_cast<std::size_t>(levels) + 1);
  for (int j = 0; j <= levels; ++j) hv[j] = eval(h, j);

  IsotropyReport rep;
  rep.forward_max = rep.backward_max = -kInfExp;
  rep.forward_min = rep.backward_min = kInfExp;
  double tail = 0.0;
  for (int l = levels; l >= 0; --l) {
    tail += hv[l];
    const double ratio = tail / hv[l];
    rep.forward_max = std::max(rep.forward_max, ratio);
    rep.forward_min = std::min(rep.forward_min, ratio);
  }
  double head = 0.0;
  for (int m = 0; m <= levels; ++m) {
    head += 1.0 / hv[m];
    const double ratio = head * hv[m];
    rep.backward_max = std::max(rep.backward_max, ratio);
    rep.backward_min = std::min(rep.backward_min, ratio);
  }
  return rep;
}

}  // namespace hbesov
