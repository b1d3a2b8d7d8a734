#include "hbesov/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "hbesov/dsl.hpp"
#include "hbesov/oracle.hpp"

namespace hbesov {

RnConsistencyCase make_rn_case(std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1));
  const double pgrid[] = {0.5, 1.0, 2.0, 4.0};
  const double qgrid[] = {0.5, 1.0, 2.0, 4.0, kInfExp};
  auto pick = [&](const auto& grid) { return grid[rng() % std::size(grid)]; };

  double p1 = pick(pgrid), p2 = pick(pgrid);
  if (p1 > p2) std::swap(p1, p2);
  const double q1 = pick(qgrid), q2 = pick(qgrid);
  const double qs = q_star(q1, q2);
  const int n = 1;
  const double D = n * (1.0 / p1 - 1.0 / p2);

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int kind = static_cast<int>(rng() % 4);

  SeqExpr sigma, tau;
  if (kind == 0) {
    // decisive decay: composite rate <= -0.4 (and <= -0.7/q* when q* < inf)
    double target = -(0.4 + 1.1 * unif(rng));
    if (!std::isinf(qs)) target = std::min(target, -0.7 / qs);
    const double s1 = -1.0 + 2.0 * unif(rng);
    const double b1 = -1.0 + 2.0 * unif(rng);
    sigma = make_seq(0.5 + 1.5 * unif(rng), s1, b1);
    tau = make_seq(0.5 + 1.5 * unif(rng), target + s1 - D, b1 - 1.0 + 2.0 * unif(rng));
  } else if (kind == 1) {
    // decisive growth: composite rate >= 0.05
    const double target = 0.05 + 0.9 * unif(rng);
    const double s1 = -1.0 + 2.0 * unif(rng);
    sigma = make_seq(0.5 + 1.5 * unif(rng), s1, -1.0 + 2.0 * unif(rng));
    tau = make_seq(0.5 + 1.5 * unif(rng), target + s1 - D, -1.0 + 2.0 * unif(rng));
  } else if (kind == 2 && std::isinf(qs)) {
    // flat rate, bounded composite (only meaningful for q* = inf):
    // exact cancellation by construction, polynomial part <= -0.1
    sigma = make_seq(1.0, 0.0, 0.0);
    tau = make_seq(0.5 + 1.5 * unif(rng), -D, -(0.1 + 1.4 * unif(rng)));
  } else {
    // flat rate, divergent composite with decidable growth margins
    double b;
    if (std::isinf(qs)) {
      b = 0.1 + 0.9 * unif(rng);
    } else {
      // b*q* in [-0.5, 1.0]
      b = (-0.5 + 1.5 * unif(rng)) / qs;
    }
    sigma = make_seq(1.0, 0.0, 0.0);
    tau = make_seq(0.5 + 1.5 * unif(rng), -D, b);
  }

  RnConsistencyCase c;
  c.src = SpaceRn{sigma, p1, q1, n};
  c.tgt = SpaceRn{tau, p2, q2, n};
  c.verdict_holds = embed_besov_rn(c.src, c.tgt).status == Tri::Holds;
  return c;
}

bool check_rn_case(const RnConsistencyCase& c, std::string* diagnostic) {
  const Verdict v = embed_besov_rn(c.src, c.tgt);
  const SeqExpr& alpha = v.conditions.front().sequence;

  const int ladder[] = {64, 128, 256, 512};
  double norms[4];
  for (int i = 0; i < 4; ++i) norms[i] = diag_opnorm_exact(alpha, c.src.q, c.tgt.q, ladder[i]);

  bool cauchy = true;
  for (int i = 1; i < 4; ++i)
    if (!((norms[i] - norms[i - 1]) / norms[i] < 1e-6)) cauchy = false;

  bool ok = true;
  std::ostringstream why;
  if (v.status == Tri::Holds) {
    if (!cauchy) {
      ok = false;
      why << "verdict Holds but norms not Cauchy";
    }
  } else {
    if (cauchy) {
      ok = false;
      why << "verdict Fails but norms Cauchy";
    }
    if (!(norms[3] >= 1.05 * norms[0])) {
      ok = false;
      why << " insufficient growth " << norms[3] / norms[0];
    }
  }

  const double exact256 = norms[2];
  const double searched = diag_opnorm_search(alpha, c.src.q, c.tgt.q, 256, 8,
                                             0xabcdef1234567890ULL);
  if (!(std::fabs(searched - exact256) <= 1e-6 * exact256)) {
    ok = false;
    why << " search/exact mismatch " << searched << " vs " << exact256;
  }

  if (!ok && diagnostic) {
    *diagnostic = "sigma=" + print_seq(c.src.sigma) + " tau=" + print_seq(c.tgt.sigma) +
                  " alpha=" + print_seq(alpha) + ": " + why.str();
  }
  return ok;
}

RnConsistencyResult run_rn_consistency(std::uint64_t seed, int count) {
  RnConsistencyResult r;
  r.total = count;
  for (int i = 0; i < count; ++i) {
    const RnConsistencyCase c = make_rn_case(seed, i);
    std::string diag;
    if (check_rn_case(c, &diag)) {
      ++r.consistent;
    } else {
      r.failures.push_back("case " + std::to_string(i) + ": " + diag);
    }
  }
  return r;
}

}  // namespace hbesov
