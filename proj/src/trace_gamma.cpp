#include "hbesov/trace_gamma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hbesov {

namespace {

Tri tri(bool b) { return b ? Tri::Holds : Tri::Fails; }

HypothesisLedger geometry_ledger(const GaugeExpr& g) {
  HypothesisLedger led;
  led.porosity = porosity(g).status;
  const HIndexReport hr = h_index_conditions(g);
  led.t1 = tri(hr.t1);
  led.upind_h_negative = tri(hr.upind_h < 0.0);
  return led;
}

enum class ExistentialResult { In, Out, Boundary };

// Membership of sigma^-1 * h^(1/r - 1/p) in l_{v_r}, 1/v_r = 1/r - 1/q,
// decided from the tail parameters at a fixed r.
ExistentialResult membership_at_r(const SpaceGamma& x, double r) {
  const SeqExpr h = hseq(x.gauge);
  const SeqExpr comp = mul(pow_seq(x.sigma, -1.0), pow_seq(h, 1.0 / r - 1.0 / x.p));
  const double vr = exp_from_inv(1.0 / r - 1.0 / x.q);
  const LqDecision dec = lq_membership(comp, vr);
  if (dec.in()) return ExistentialResult::In;
  // Exact triple-threshold coincidence: zero rate, polynomial part exactly on
  // the l_{v_r} line.  Rule-level Out, but flagged for the caller.
  if (comp.rate == 0.0) {
    if (std::isinf(vr)) {
      if (comp.poly == 0.0 && comp.loglog == 0.0) return ExistentialResult::Boundary;
    } else if (comp.poly * vr == -1.0 && comp.loglog * vr == -1.0) {
      return ExistentialResult::Boundary;
    }
  }
  return ExistentialResult::Out;
}

// The defining condition's existential over r in [p, min(q,1)] for the region
// 0 < p < 1, p < q.  The composite's rate -a + d(1/p - 1/r) is increasing in
// r, so rate-negative membership is settled at r = p; for zero rate the
// polynomial threshold F(r) = -b + (beta+1)/r - beta/p - 1/q is affine in 1/r
// and extremal at an endpoint.  Candidates {p, min(q,1)} therefore suffice.
ExistentialResult exists_intermediate_r(const SpaceGamma& x) {
  const double a = x.sigma.rate;
  const double d = x.gauge.d;
  const double R = std::min(x.q, 1.0);
  if (a > 0.0) return ExistentialResult::In;   // rate negative already at r = p
  if (a < 0.0) return ExistentialResult::Out;  // rate positive for every r

  if (d > 0.0) return membership_at_r(x, x.p);  // r > p gives positive rate

  // d == 0: rate vanishes identically; scan both endpoints.
  const ExistentialResult at_p = membership_at_r(x, x.p);
  const ExistentialResult at_R = membership_at_r(x, R);
  if (at_p == ExistentialResult::In || at_R == ExistentialResult::In) return ExistentialResult::In;
  if (at_p == ExistentialResult::Boundary || at_R == ExistentialResult::Boundary)
    return ExistentialResult::Boundary;
  return ExistentialResult::Out;
}

void push_condition(Verdict& v, std::string name, SeqExpr seq, double e) {
  LqDecision dec = lq_membership(seq, e);
  v.conditions.push_back({std::move(name), std::move(seq), e, std::move(dec)});
}

}  // namespace

Verdict trace_exists(const SpaceGamma& x) {
  validate(x);
  Verdict v;
  v.ledger = geometry_ledger(x.gauge);
  const bool region_one = x.p >= 1.0 || x.q <= x.p;  // else 0 < p < 1 and p < q
  // Necessity leans on porosity in region one and on decaying levels in
  // region two; neither direction needs the other hypothesis.
  const bool geometry_ok = region_one ? v.ledger->porosity == Tri::Holds
                                      : v.ledger->upind_h_negative == Tri::Holds;
  const SeqExpr sigma_inv = pow_seq(x.sigma, -1.0);

  if (geometry_ok) {
    v.citation = "trace-existence-iff";
    v.hypotheses_assumed = {region_one ? "porosity" : "upind_h_negative"};
    const double e = region_one ? dual_exponent(x.q) : exp_from_inv(1.0 / x.p - 1.0 / x.q);
    push_condition(v, region_one ? "sigma^-1 in l_q'" : "sigma^-1 in l_v_p", sigma_inv, e);
    v.status = v.conditions.back().decision.in() ? Tri::Holds : Tri::Fails;
    return v;
  }

  v.citation = "trace-existence-sufficient";
  if (region_one) {
    const double e = dual_exponent(x.q);
    push_condition(v, "sigma^-1 in l_q'", sigma_inv, e);
    if (v.conditions.back().decision.in()) {
      v.status = Tri::Holds;
    } else {
      v.status = Tri::Inconclusive;
      v.notes.push_back("sufficient condition fails; necessity needs porosity and decaying levels");
    }
    return v;
  }

  switch (exists_intermediate_r(x)) {
    case ExistentialResult::In:
      v.status = Tri::Holds;
      v.notes.push_back("defining condition satisfied for some intermediate r");
      break;
    case ExistentialResult::Boundary:
      v.status = Tri::Inconclusive;
      v.notes.push_back("exact threshold coincidence in the intermediate-r condition");
      break;
    case ExistentialResult::Out:
      v.status = Tri::Inconclusive;
      v.notes.push_back("defining condition fails for every intermediate r; no necessity available");
      break;
  }
  return v;
}

Verdict trace_into_lr(const SpaceGamma& x, double r) {
  validate(x);
  if (!(r > 0.0) || std::isinf(r)) throw std::invalid_argument("trace_into_lr: r must be in (0,inf)");

  Verdict v;
  v.ledger = geometry_ledger(x.gauge);
  const SeqExpr h = hseq(x.gauge);
  const SeqExpr sigma_inv = pow_seq(x.sigma, -1.0);
  const bool porous = v.ledger->porosity == Tri::Holds;
  const bool decaying = v.ledger->upind_h_negative == Tri::Holds;

  auto decide = [&](bool necessity_ok, const char* hypothesis) {
    if (v.conditions.back().decision.in()) {
      v.status = Tri::Holds;
    } else if (necessity_ok) {
      v.status = Tri::Fails;
      v.hypotheses_assumed.push_back(hypothesis);
    } else {
      v.status = Tri::Inconclusive;
      v.notes.push_back(std::string("condition fails but necessity needs ") + hypothesis);
    }
  };

  if (x.p >= 1.0 && r <= x.p) {
    v.citation = "trace-into-lr-small-r-iff";
    push_condition(v, "sigma^-1 in l_q'", sigma_inv, dual_exponent(x.q));
    decide(porous, "porosity");
  } else if (x.p < 1.0 && x.q <= x.p && r <= x.p) {
    v.citation = "trace-into-lr-small-r-iff";
    push_condition(v, "sigma^-1 in l_q'", sigma_inv, dual_exponent(x.q));
    decide(porous, "porosity");
  } else if (x.p <= r && x.q <= std::min(r, 1.0)) {
    v.citation = "trace-into-lr-large-r-sup-iff";
    push_condition(v, "sigma^-1 h^(1/r-1/p) in l_inf",
                   mul(sigma_inv, pow_seq(h, 1.0 / r - 1.0 / x.p)), kInfExp);
    decide(decaying, "upind_h_negative");
  } else if (x.p <= r && r <= std::min(x.q, 1.0)) {
    v.citation = "trace-into-lr-large-r-lq-iff";
    push_condition(v, "sigma^-1 h^(1/r-1/p) in l_v_r",
                   mul(sigma_inv, pow_seq(h, 1.0 / r - 1.0 / x.p)),
                   exp_from_inv(1.0 / r - 1.0 / x.q));
    decide(decaying, "upind_h_negative");
  } else {
    v.citation = "trace-into-lr-uncovered";
    v.status = Tri::Inconclusive;
    v.notes.push_back("no rule covers this (p,q,r) combination");
  }
  return v;
}

Verdict embed_into_linfty(const SpaceGamma& x) {
  validate(x);
  Verdict v;
  v.citation = "gamma-into-linfty-iff";
  v.ledger = geometry_ledger(x.gauge);
  const SeqExpr comp = mul(pow_seq(x.sigma, -1.0), pow_seq(hseq(x.gauge), -1.0 / x.p));
  push_condition(v, "sigma^-1 h^(-1/p) in l_q'", comp, dual_exponent(x.q));
  if (v.conditions.back().decision.in()) {
    v.status = Tri::Holds;  // sufficiency needs no geometry at all
    return v;
  }
  const bool decaying = v.ledger->upind_h_negative == Tri::Holds;
  if (decaying && trace_exists(x).status == Tri::Holds) {
    v.status = Tri::Fails;
    v.hypotheses_assumed = {"upind_h_negative", "trace-exists"};
  } else {
    v.status = Tri::Inconclusive;
    v.notes.push_back("necessity needs decaying levels and an existing trace space");
  }
  return v;
}

Verdict embed_into_lmax_gamma(const SpaceGamma& x) {
  validate(x);
  Verdict v;
  v.citation = "gamma-into-lmax-iff";
  v.ledger = geometry_ledger(x.gauge);
  const SeqExpr comp =
      mul(pow_seq(x.sigma, -1.0), pow_seq(hseq(x.gauge), -positive_part(1.0 / x.p - 1.0)));
  push_condition(v, "sigma^-1 h^(-(1/p-1)+) in l_q'", comp, dual_exponent(x.q));
  if (v.conditions.back().decision.in()) {
    v.status = Tri::Holds;
    return v;
  }
  // necessity routes through the L_1 trace: porosity for p >= 1, level decay
  // for p < 1
  const bool necessity_ok = x.p >= 1.0 ? v.ledger->porosity == Tri::Holds
                                       : v.ledger->upind_h_negative == Tri::Holds;
  if (necessity_ok) {
    v.status = Tri::Fails;
    v.hypotheses_assumed = {x.p >= 1.0 ? "porosity" : "upind_h_negative"};
    v.notes.push_back("equivalence covers existence and embedding jointly");
  } else {
    v.status = Tri::Inconclusive;
    v.notes.push_back("necessity needs porosity (p>=1) or decaying levels (p<1)");
  }
  return v;
}

SeqExpr gamma_test_sequence(const SpaceGamma& x1, const SpaceGamma& x2) {
  return mul(pow_seq(x1.sigma, -1.0), x2.sigma,
             pow_seq(hseq(x1.gauge), -(1.0 / x1.p - 1.0 / x2.p)));
}

SeqExpr gamma_test_sequence_plus(const SpaceGamma& x1, const SpaceGamma& x2) {
  return mul(pow_seq(x1.sigma, -1.0), x2.sigma,
             pow_seq(hseq(x1.gauge), -positive_part(1.0 / x1.p - 1.0 / x2.p)));
}

bool collapse_sum_stable(const SpaceGamma& x2, int levels) {
  const double q2p = dual_exponent(x2.q);
  if (std::isinf(q2p)) return false;
  const SeqExpr w = pow_seq(mul(x2.sigma, pow_seq(hseq(x2.gauge), 1.0 / x2.p)), -q2p);
  double ratio_half = 0.0, ratio_full = 0.0;
  double lse = -kInfExp;  // log2 of the running sum
  for (int r = 1; r <= levels; ++r) {
    const double lw = log2_eval(w, static_cast<std::size_t>(r));
    const double m = std::max(lse, lw);
    lse = m + std::log2(std::exp2(lse - m) + std::exp2(lw - m));
    const double ratio = std::exp2(lse - lw);
    if (r == levels / 2) ratio_half = ratio;
    if (r == levels) ratio_full = ratio;
  }
  return ratio_full <= 100.0 && ratio_full <= 1.1 * ratio_half;
}

Verdict embed_gamma_gamma(const SpaceGamma& x1, const SpaceGamma& x2) {
  validate(x1);
  validate(x2);
  if (!(x1.gauge == x2.gauge))
    throw std::invalid_argument("embed_gamma_gamma: spaces live over different gauges");

  Verdict v;
  if (x1.sigma == x2.sigma && x1.p == x2.p && x1.q == x2.q) {
    v.status = Tri::Holds;
    v.citation = "identity-embedding";
    return v;
  }

  HypothesisLedger led = geometry_ledger(x1.gauge);
  const double d = x1.gauge.d;
  const double a_tau = x2.sigma.rate;
  led.e3a = tri(a_tau - d / x2.p < 0.0);
  led.lowind_tau_positive = tri(a_tau > 0.0);
  // The moment condition degenerates for p2 >= 1; its h-power vanishes and the
  // ledger marks it vacuously satisfied.  Positivity of the tau index is
  // tracked separately and still gates the sharp route.
  const bool e3b_strict = a_tau > d * positive_part(1.0 / x2.p - 1.0);
  led.e3b = x2.p >= 1.0 ? Tri::Holds : tri(e3b_strict);
  v.ledger = led;

  const SeqExpr a_seq = gamma_test_sequence(x1, x2);
  const SeqExpr ap_seq = gamma_test_sequence_plus(x1, x2);
  const double qs = q_star(x1.q, x2.q);
  const LqDecision dec_a = lq_membership(a_seq, qs);
  const LqDecision dec_ap = lq_membership(ap_seq, qs);
  v.conditions.push_back({"sharp composite", a_seq, qs, dec_a});
  if (x1.p > x2.p) v.conditions.push_back({"sufficient composite", ap_seq, qs, dec_ap});

  const bool geometry_ok = led.porosity == Tri::Holds && led.t1 == Tri::Holds;
  // Necessity profile: geometry, decay of tau h^(1/p2), and for p2 < 1 the
  // strict moment condition (for p2 >= 1 the strict reading is tau-positivity).
  bool necessity_ok =
      geometry_ok && led.e3a == Tri::Holds &&
      (x2.p >= 1.0 ? led.lowind_tau_positive == Tri::Holds : e3b_strict);
  std::vector<std::string> necessity_hyp = {"porosity", "t1", "e3a", "e3b"};
  if (!necessity_ok && geometry_ok && x2.q > 1.0 && e3b_strict &&
      !lq_membership(pow_seq(mul(x2.sigma, pow_seq(hseq(x2.gauge), 1.0 / x2.p)), -1.0),
                     dual_exponent(x2.q))
           .in() &&
      collapse_sum_stable(x2, 256)) {
    necessity_ok = true;
    necessity_hyp = {"porosity", "t1", "tau^-1 h^(-1/p2) not in l_q2'", "collapse-sum-stable"};
    v.notes.push_back("weaker-hypothesis necessity profile used");
  }

  if (x1.p <= x2.p) {
    const bool iff_gate = necessity_ok && led.lowind_tau_positive == Tri::Holds &&
                          led.e3a == Tri::Holds && led.e3b == Tri::Holds;
    if (iff_gate) {
      v.citation = "gamma-embedding-iff";
      v.hypotheses_assumed = {"porosity", "t1", "e3a", "e3b", "lowind_tau_positive"};
      v.status = dec_a.in() ? Tri::Holds : Tri::Fails;
      return v;
    }
    if (led.lowind_tau_positive == Tri::Holds && dec_ap.in()) {
      v.citation = "gamma-embedding-sufficient";
      v.hypotheses_assumed = {"lowind_tau_positive"};
      v.status = Tri::Holds;
      return v;
    }
    if (necessity_ok && !dec_a.in() && trace_exists(x1).status != Tri::Fails) {
      v.citation = "gamma-embedding-necessary";
      v.hypotheses_assumed = necessity_hyp;
      v.status = Tri::Fails;
      return v;
    }
    v.citation = "gamma-embedding-undecided";
    v.status = Tri::Inconclusive;
    v.notes.push_back("hypothesis shortfall leaves only one-sided information");
    return v;
  }

  // p1 > p2: sufficiency and necessity test different composites.
  if (dec_ap.in()) {
    const bool tau_route = led.lowind_tau_positive == Tri::Holds;
    bool existence_route = false;
    if (!tau_route) {
      SpaceGamma mixed{x2.sigma, x1.p, x2.q, x2.gauge};
      existence_route = trace_exists(x2).status == Tri::Holds &&
                        trace_exists(mixed).status == Tri::Holds;
    }
    if (tau_route || existence_route) {
      v.citation = "gamma-embedding-sufficient";
      v.hypotheses_assumed = {tau_route ? "lowind_tau_positive" : "target-traces-exist"};
      v.status = Tri::Holds;
      return v;
    }
  }
  if (necessity_ok && !dec_a.in() && trace_exists(x1).status != Tri::Fails) {
    v.citation = "gamma-embedding-necessary";
    v.hypotheses_assumed = necessity_hyp;
    v.status = Tri::Fails;
    return v;
  }
  v.citation = "gamma-embedding-gap";
  v.status = Tri::Inconclusive;
  if (!dec_ap.in() && dec_a.in())
    v.notes.push_back("p1 > p2 gap: sufficient composite diverges, necessary one converges");
  else
    v.notes.push_back("hypothesis shortfall leaves only one-sided information");
  return v;
}

}  // namespace hbesov
