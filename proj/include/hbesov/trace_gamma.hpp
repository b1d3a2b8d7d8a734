#ifndef HBESOV_TRACE_GAMMA_HPP
#define HBESOV_TRACE_GAMMA_HPP

#include "hbesov/spaces.hpp"
#include "hbesov/verdict.hpp"

namespace hbesov {

/// Does the trace space of the lifted ambient space exist inside L_p?
/// With porosity and strictly decaying gauge levels the answer is an iff in
/// terms of sigma^-1 (exponent q' or v_p depending on the (p,q) region).
/// Without those hypotheses only the sufficient route is available: the
/// defining condition, with its existential over an intermediate r, is
/// evaluated analytically; a failure then reports Inconclusive, and an exact
/// threshold coincidence does too.
Verdict trace_exists(const SpaceGamma& x);

/// Boundedness of the trace operator into L_r; four parameter regimes carry
/// iff-rules, anything else is Inconclusive.  Necessity in the small-r
/// regimes leans on porosity, in the large-r regimes on decaying gauge levels;
/// sufficiency is unconditional throughout.
Verdict trace_into_lr(const SpaceGamma& x, double r);

/// Embedding into L_inf over the fractal: sigma^-1 * h^(-1/p) in l_{q'}.
/// Sufficiency unconditional; necessity needs decaying gauge levels plus
/// existence of the trace space.
Verdict embed_into_linfty(const SpaceGamma& x);

/// Trace existence combined with embedding into L_max(p,1):
/// sigma^-1 * h^(-(1/p-1)_+) in l_{q'}; iff under porosity + decaying levels.
Verdict embed_into_lmax_gamma(const SpaceGamma& x);

/// Embedding between two trace spaces over the same gauge.  For p1 <= p2 the
/// characterisation is sharp under the hypothesis profile (porosity, index
/// window, decay of tau*h^(1/p2), moment condition); shortfalls downgrade the
/// verdict to one-sided.  For p1 > p2 sufficient and necessary conditions
/// differ by the h-power and the gap is reported as Inconclusive.
Verdict embed_gamma_gamma(const SpaceGamma& x1, const SpaceGamma& x2);

/// Composite sequences governing embed_gamma_gamma, exposed for replay:
/// sigma^-1 * tau * h^(-(1/p1-1/p2))  (sharp/necessary form) and
/// sigma^-1 * tau * h^(-(1/p1-1/p2)_+) (sufficient form).
SeqExpr gamma_test_sequence(const SpaceGamma& x1, const SpaceGamma& x2);
SeqExpr gamma_test_sequence_plus(const SpaceGamma& x1, const SpaceGamma& x2);

/// Numeric stand-in for the geometric-sum hypothesis behind the collapse
/// identity: head sums of (tau_r h_r^(1/p2))^(-q') stay comparable to their
/// last term over the probed range.  Part of the weaker-hypothesis necessity
/// profile; within the symbolic family it is equivalent to the decay
/// condition on tau*h^(1/p2).
bool collapse_sum_stable(const SpaceGamma& x2, int levels);

}  // namespace hbesov

#endif
