#ifndef HBESOV_GAUGE_HPP
#define HBESOV_GAUGE_HPP

#include "hbesov/seq.hpp"
#include "hbesov/verdict.hpp"

namespace hbesov {

/// Gauge h(r) = C * r^d * (1 + |log2 r|)^beta on (0,1], in ambient dimension n.
/// Exponents d > n are rejected at construction: no measure with the required
/// lower doubling bound can exist for them.
struct GaugeExpr {
  double scale = 1.0;   // C > 0
  double d = 0.0;       // dimension-type exponent, >= 0
  double logexp = 0.0;  // beta
  int n = 1;            // ambient dimension

  bool operator==(const GaugeExpr&) const = default;
};

GaugeExpr make_gauge(double d, double logexp = 0.0, int n = 1, double scale = 1.0);

/// Membership in the gauge class: positive, continuous, non-decreasing near 0,
/// vanishing at 0+.  On the family: d > 0, or d = 0 with beta < 0.
bool in_gauge_class(const GaugeExpr& g);

double gauge_eval(const GaugeExpr& g, double r);

/// Level sequence h_j = h(2^-j); exact within the SeqExpr family (c = 0).
SeqExpr hseq(const GaugeExpr& g);

/// Does some compact set carry a measure with ball masses ~ h?  Family rule:
/// d < n always, d = n only with beta >= 0.
Verdict is_measure_function(const GaugeExpr& g);

/// Porosity of the corresponding h-sets.  Family rule: d < n.
Verdict porosity(const GaugeExpr& g);

/// Strong isotropy: h decays by a factor >= 2 every fixed number of levels.
/// Family rule: d > 0.
Verdict strong_isotropy(const GaugeExpr& g);

/// Smallest k with 2*h_{j+k} <= h_j for all large j; throws unless d > 0.
int halving_levels(const GaugeExpr& g);

struct HIndexReport {
  double upind_h = 0.0;
  double lowind_h = 0.0;
  bool t1 = false;  // -n <= lowind_h <= upind_h < 0
};

HIndexReport h_index_conditions(const GaugeExpr& g);

struct IsotropyReport {
  double forward_max = 0.0;   // max over l of sum_{j=l..J} h_j / h_l
  double forward_min = 0.0;
  double backward_max = 0.0;  // max over m of sum_{j=0..m} h_j^-1 * h_m
  double backward_min = 0.0;
};

/// Discrete forms of the two geometric-sum characterisations of strong
/// isotropy; bounded ratios for d > 0, growing in J for log gauges.
IsotropyReport numeric_strong_isotropy_equivalences(const GaugeExpr& g, int levels);

}  // namespace hbesov

#endif
