#ifndef HBESOV_ENVELOPE_HPP
#define HBESOV_ENVELOPE_HPP

#include <optional>
#include <vector>

#include "hbesov/spaces.hpp"
#include "hbesov/verdict.hpp"

namespace hbesov {

struct EnvelopePoint {
  double t = 0.0;
  double value = 0.0;
};

struct ClosedFormTag {
  enum class Kind { Power, LogPower } kind = Kind::Power;
  double exponent = 0.0;  // t^exponent resp. |log2 t|^exponent
};

struct EnvelopePair {
  std::vector<EnvelopePoint> grid;  // t = h_k, k in [first_level, last_level], t decreasing
  int first_level = 0;
  std::optional<ClosedFormTag> closed_form;
  double index_u = kInfExp;

  double value_at_level(int k) const;
};

enum class EnvelopeMode { Exact, LowerBoundOnly, Bounded };

struct GammaEnvelope {
  EnvelopePair pair;
  EnvelopeMode mode = EnvelopeMode::LowerBoundOnly;
};

/// Smallest level with h_j < 1.
int level_floor(const GaugeExpr& g);

/// Step function carrying sigma along the reciprocal level grid:
/// value sigma_j on [h_j^-1, h_{j+1}^-1).  The building block behind the
/// envelope-defining integral.
struct SigmaStep {
  SeqExpr sigma;
  std::vector<double> inv_levels;  // h_j^-1 for j = 0..max_level, increasing
  int first_level = 0;             // J0

  double operator()(double y) const;
};

SigmaStep sigma_step(const SeqExpr& sigma, const GaugeExpr& g, int levels);

/// Discretised envelope-defining function at t = h_k:
///   u < inf : (sum_{j=J0..k} h_j^(-u/r) sigma_j^(-u))^(1/u),
///   u = inf : max_{J0<=j<=k} h_j^(-1/r) sigma_j^(-1).
/// Requires strictly decaying levels (d > 0) and k >= J0.
double psi_ru(const SeqExpr& sigma, const GaugeExpr& g, double r, double u, int k);

/// Growth envelope of L_p over the fractal: (t^(-1/p), p) on the level grid.
EnvelopePair growth_envelope_lp(const GaugeExpr& g, double p, int levels);

/// Growth envelope of the trace space.  Exact under the full hypothesis
/// profile; lower-bound-only with just decaying levels and existence; Bounded
/// marks spaces that land in L_inf (the envelope cannot blow up).
GammaEnvelope growth_envelope_gamma(const SpaceGamma& x, int levels = 64);

/// Mass the envelope's log-derivative measure assigns to
/// [h_{(k+1)i0}, h_{k i0}]: the log2 ratio of envelope values.
double env_measure_mass(const EnvelopePair& pair, int k, int iota0);

struct CorrespondenceReport {
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  double variation() const { return max_ratio / min_ratio; }
};

/// Ratio of the fractal-side envelope evaluated at t^d (1+|log2 t|)^beta to
/// the ambient-side closed form evaluated at t^n, over t = 2^-k.  Sub-critical
/// parameters required; the ratio must stay within a bounded window.
CorrespondenceReport envelope_correspondence(double d, double beta, double s, double p, double q,
                                             int n, int kmin = 10, int kmax = 60);

}  // namespace hbesov

#endif
