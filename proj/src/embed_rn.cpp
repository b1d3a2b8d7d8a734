#include "hbesov/embed_rn.hpp"

#include <cmath>
#include <stdexcept>

namespace hbesov {

Verdict embed_besov_rn(const SpaceRn& src, const SpaceRn& tgt) {
  validate(src);
  validate(tgt);
  if (src.n != tgt.n) throw std::invalid_argument("embed_besov_rn: ambient dimensions differ");

  const double n = static_cast<double>(src.n);
  const SeqExpr alpha =
      mul(pow_seq(src.sigma, -1.0), tgt.sigma, paren(n * (1.0 / src.p - 1.0 / tgt.p)));
  const double qs = q_star(src.q, tgt.q);
  const LqDecision dec = lq_membership(alpha, qs);

  Verdict v;
  v.citation = "rn-embedding-iff";
  v.conditions.push_back({"composite", alpha, qs, dec});
  v.notes.push_back("never-compact");
  if (src.p > tgt.p) {
    v.status = Tri::Fails;
    v.notes.push_back("p1 > p2 rules the embedding out");
  } else {
    v.status = dec.in() ? Tri::Holds : Tri::Fails;
  }
  return v;
}

Verdict embed_into_lmax(const SpaceRn& src) {
  validate(src);
  const double n = static_cast<double>(src.n);
  const double p = src.p, q = src.q;

  Verdict v;
  v.citation = "rn-into-lmax-iff";
  SeqExpr alpha;
  double e;
  std::string branch;
  if (p <= 1.0) {
    alpha = mul(pow_seq(src.sigma, -1.0), paren(n * (1.0 / p - 1.0)));
    e = dual_exponent(q);
    branch = "p<=1";
  } else if (q <= std::min(p, 2.0)) {
    alpha = pow_seq(src.sigma, -1.0);
    e = kInfExp;
    branch = "1<p, q<=min(p,2)";
  } else if (p <= 2.0) {
    alpha = pow_seq(src.sigma, -1.0);
    e = exp_from_inv(1.0 / p - inv_exp(q));
    branch = "1<p<=2, q>p";
  } else {
    alpha = pow_seq(src.sigma, -1.0);
    e = exp_from_inv(0.5 - inv_exp(q));
    branch = "2<p, q>2";
  }
  const LqDecision dec = lq_membership(alpha, e);
  v.conditions.push_back({"branch " + branch, alpha, e, dec});
  v.status = dec.in() ? Tri::Holds : Tri::Fails;
  return v;
}

Verdict embed_into_continuous(const SpaceRn& src) {
  validate(src);
  const SeqExpr alpha =
      mul(pow_seq(src.sigma, -1.0), paren(static_cast<double>(src.n) / src.p));
  const double e = dual_exponent(src.q);
  const LqDecision dec = lq_membership(alpha, e);
  Verdict v;
  v.citation = "rn-into-continuous-iff";
  v.conditions.push_back({"composite", alpha, e, dec});
  v.status = dec.in() ? Tri::Holds : Tri::Fails;
  return v;
}

}  // namespace hbesov
