#include <doctest.h>

#include <cmath>
#include <random>

#include "hbesov/embed_rn.hpp"
#include "hbesov/oracle.hpp"

using namespace hbesov;

namespace {

SpaceRn space(SeqExpr s, double p, double q, int n = 1) { return SpaceRn{std::move(s), p, q, n}; }

}  // namespace

TEST_CASE("ambient embedding criterion") {
  // identity embedding: constant composite, q* = inf
  const SpaceRn x = space(make_seq(1.0, 0.7, -1.0), 2.0, 1.5);
  CHECK(embed_besov_rn(x, x).status == Tri::Holds);

  // classical grid: delta = 0 needs q1 <= q2
  for (double q1 : {0.5, 1.0, 2.0, kInfExp})
    for (double q2 : {0.5, 1.0, 2.0, kInfExp}) {
      const Verdict v = embed_besov_rn(space(paren(0.5), 2.0, q1), space(paren(0.5), 2.0, q2));
      CHECK((v.status == Tri::Holds) == (inv_exp(q2) <= inv_exp(q1)));
    }

  // p1 > p2 fails regardless of smoothness gain
  CHECK(embed_besov_rn(space(paren(5.0), 2.0, 1.0), space(paren(0.1), 1.0, 1.0)).status ==
        Tri::Fails);

  // slowly-varying loss at equal rate: composite (1+j)^1 unbounded, q* = inf
  const Verdict slow = embed_besov_rn(space(mul(paren(0.5), make_seq(1.0, 0.0, -1.0)), 2.0, 2.0),
                                      space(paren(0.5), 2.0, 2.0));
  CHECK(slow.status == Tri::Fails);
  // oracle cross-check at J up to 2^10: truncated norms diverge on Fails
  const SeqExpr& alpha = slow.conditions.front().sequence;
  CHECK(diag_opnorm_exact(alpha, 2.0, 2.0, 1 << 10) >
        10.0 * diag_opnorm_exact(alpha, 2.0, 2.0, 4));
  // ...and stabilize on Holds
  const Verdict held = embed_besov_rn(space(paren(0.6), 2.0, 2.0), space(paren(0.2), 2.0, 2.0));
  REQUIRE(held.status == Tri::Holds);
  const SeqExpr& beta = held.conditions.front().sequence;
  CHECK(diag_opnorm_exact(beta, 2.0, 2.0, 1 << 10) ==
        doctest::Approx(diag_opnorm_exact(beta, 2.0, 2.0, 64)).epsilon(1e-9));

  CHECK_THROWS_AS(embed_besov_rn(space(paren(1.0), 1.0, 1.0, 1), space(paren(0.0), 1.0, 1.0, 2)),
                  std::invalid_argument);

  for (const std::string& note : embed_besov_rn(x, x).notes)
    if (note == "never-compact") return;
  FAIL("missing never-compact annotation");
}

TEST_CASE("embedding into L_max(p,1)") {
  // decisive decay wins in every branch
  for (double p : {0.5, 1.0, 1.5, 2.0, 3.0})
    for (double q : {0.5, 1.0, 2.0, 4.0, kInfExp}) {
      const double s = 1.0 * positive_part(1.0 / p - 1.0) + 0.4;
      CHECK(embed_into_lmax(space(paren(s), p, q)).status == Tri::Holds);
    }

  // p=2, q=1, constant sequence: branch with the sup-condition
  CHECK(embed_into_lmax(space(paren(0.0), 2.0, 1.0)).status == Tri::Holds);

  // p=1/2, sigma = (2^{jn}): governing sequence constant, needs q <= 1
  for (double q : {0.5, 1.0, 2.0, kInfExp}) {
    const Verdict v = embed_into_lmax(space(paren(1.0), 0.5, q));
    CHECK((v.status == Tri::Holds) == (q <= 1.0));
  }

  // fine branch structure: 1<p<=2, q>p uses 1/e = 1/p - 1/q
  const Verdict b3 = embed_into_lmax(space(make_seq(1.0, 0.0, 1.0), 1.5, 3.0));
  CHECK(b3.conditions.front().exponent == doctest::Approx(3.0));  // 1/(2/3 - 1/3)
  CHECK(b3.status == Tri::Holds);  // sigma^-1 = (1+j)^-1 lies in l_3

  const Verdict b4 = embed_into_lmax(space(make_seq(1.0, 0.0, 0.4), 3.0, kInfExp));
  CHECK(b4.conditions.front().exponent == doctest::Approx(2.0));  // 1/(1/2 - 0)
  CHECK(b4.status == Tri::Fails);  // sigma^-1 = (1+j)^-0.4 not in l_2
}

TEST_CASE("embedding into bounded continuous functions") {
  CHECK(embed_into_continuous(space(paren(0.8), 2.0, 2.0)).status == Tri::Holds);  // s > n/p
  CHECK(embed_into_continuous(space(paren(0.5), 2.0, 1.0)).status == Tri::Holds);  // critical, q<=1
  CHECK(embed_into_continuous(space(paren(0.5), 2.0, 2.0)).status == Tri::Fails);  // constant, q'=2
}

TEST_CASE("transitivity and q-monotonicity over random family triples") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> us(-1.0, 1.0), ub(-1.5, 1.5);
  const double pg[] = {0.5, 1.0, 2.0, 4.0};
  const double qg[] = {0.5, 1.0, 2.0, kInfExp};
  int holds_chains = 0;
  for (int i = 0; i < 1000; ++i) {
    double p[3] = {pg[rng() % 4], pg[rng() % 4], pg[rng() % 4]};
    std::sort(p, p + 3);
    const SpaceRn X = space(make_seq(1.0, us(rng), ub(rng)), p[0], qg[rng() % 4]);
    const SpaceRn Y = space(make_seq(1.0, us(rng), ub(rng)), p[1], qg[rng() % 4]);
    const SpaceRn Z = space(make_seq(1.0, us(rng), ub(rng)), p[2], qg[rng() % 4]);
    if (embed_besov_rn(X, Y).holds() && embed_besov_rn(Y, Z).holds()) {
      ++holds_chains;
      CHECK(embed_besov_rn(X, Z).holds());
    }
    // enlarging q2 can only help
    if (embed_besov_rn(X, Y).holds())
      CHECK(embed_besov_rn(X, space(Y.sigma, Y.p, kInfExp, Y.n)).holds());
  }
  CHECK(holds_chains > 20);  // the sample actually exercises the property
}
