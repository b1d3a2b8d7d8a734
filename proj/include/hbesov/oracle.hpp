#ifndef HBESOV_ORACLE_HPP
#define HBESOV_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "hbesov/gauge.hpp"
#include "hbesov/seq.hpp"

namespace hbesov {

/// Coefficient profile with one active position per level (index = level).
struct CoeffProfile {
  std::vector<double> values;
};

/// Stable l_q norm (max-factored); q = inf gives the sup.
double lq_norm(const std::vector<double>& v, double q);

/// Sequence-space norm of a single-position profile: the p-normalisations
/// cancel and the norm is the l_q norm of (sigma_j * |lambda_j|)_j.
double bnorm(const CoeffProfile& profile, const SeqExpr& sigma, double p, double q);

/// Exact norm of the diagonal map beta -> alpha*beta from l_q1 to l_q2 on
/// levels 0..J: the l_{q*} norm of (alpha_j)_{j<=J}.
double diag_opnorm_exact(const SeqExpr& alpha, double q1, double q2, int J);

/// Randomised verification of diag_opnorm_exact: max of ||alpha*beta||_q2 over
/// seeded random unit-l_q1 profiles plus the duality witness.  Deterministic
/// given the seed; never exceeds the exact value beyond rounding.
double diag_opnorm_search(const SeqExpr& alpha, double q1, double q2, int J, int trials,
                          std::uint64_t seed);

struct LandauWitness {
  struct Term {
    double level;  // selected index (approximate once it exceeds 2^53)
    double alpha;  // alpha at that index
    double beta;   // j^(1/q1) / alpha
  };
  std::vector<Term> terms;
  double beta_norm_bound = 0.0;            // closed bound on ||beta||_q1
  std::vector<double> beta_norm_partials;  // ||beta^(T)||_q1 for T = 1..terms
  std::vector<double> product_norm_partials;  // ||alpha*beta^(T)||_q2
};

/// Extremal sequence disproving the diagonal bound for unbounded alpha:
/// doubling subsequence t_j with beta_{t_j} = j^(1/q1) alpha_{t_j}^-1.
/// ||beta||_q1 stays under the closed bound while ||alpha*beta||_q2 grows
/// without limit.  Throws if alpha is bounded.
LandauWitness landau_witness(const SeqExpr& alpha, double q1, double q2, int T);

/// Partial sums S_k = sum_{r<=k} b_r sigma_{r*i0}^-1 h_{r*i0}^(-1/p1),
/// the rearrangement lower-bound profile of the extremal trace witnesses.
std::vector<double> trace_lowerbound_profile(const std::vector<double>& b, const SeqExpr& sigma,
                                             const GaugeExpr& g, double p1, int iota0, int T);

/// Discretised envelope integral of the necessity machinery (q2 > 1):
/// ( sum_{k=k0..K} S_k^q2 * W_{k i0}^{-q2} * w_{k i0} )^(1/q2)
/// with w_m = h_m^(-q2'/p2) tau_m^(-q2') and W its head sum.
double envelope_integral(const std::vector<double>& b, const SeqExpr& sigma, const SeqExpr& tau,
                         const GaugeExpr& g, double p1, double p2, double q2, int iota0, int k0,
                         int K);

/// Collapsed form ( sum_k b_k^q2 (sigma^-1 tau h^(1/p2-1/p1))_{k i0}^q2 )^(1/q2):
/// what the integral reduces to when the head sums track their last terms.
double envelope_integral_collapsed(const std::vector<double>& b, const SeqExpr& sigma,
                                   const SeqExpr& tau, const GaugeExpr& g, double p1, double p2,
                                   double q2, int iota0, int k0, int K);

/// Smallest stride i0 such that tau^-1 h^(-1/p2) grows by at least the given
/// factor across every i0-block of the probed range.  The proofs only assert
/// "large enough"; this reports the concrete threshold.  Throws if no stride
/// up to the cap works.
int smallest_growth_stride(const SeqExpr& tau, const GaugeExpr& g, double p2, double factor,
                           int range, int cap = 64);

}  // namespace hbesov

#endif
