#include "hbesov/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace hbesov {

void validate(const SpaceRn& x) {
  if (!(x.p > 0.0) || std::isinf(x.p))
    throw std::invalid_argument("SpaceRn: p must be in (0,inf)");
  require_exponent(x.q, "SpaceRn q");
  if (x.n < 1) throw std::invalid_argument("SpaceRn: n must be >= 1");
  if (!(x.sigma.scale > 0.0)) throw std::invalid_argument("SpaceRn: sigma scale must be > 0");
}

void validate(const SpaceGamma& x) {
  if (!(x.p > 0.0) || std::isinf(x.p))
    throw std::invalid_argument("SpaceGamma: p must be in (0,inf)");
  if (!(x.q > 0.0) || std::isinf(x.q))
    throw std::invalid_argument("SpaceGamma: q must be in (0,inf)");
  if (!(x.sigma.scale > 0.0)) throw std::invalid_argument("SpaceGamma: sigma scale must be > 0");
  if (is_measure_function(x.gauge).status != Tri::Holds)
    throw std::invalid_argument("SpaceGamma: gauge is not a measure function");
}

SeqExpr lifted_sigma(const SpaceGamma& x) {
  return mul(x.sigma, pow_seq(hseq(x.gauge), 1.0 / x.p),
             paren(static_cast<double>(x.gauge.n) / x.p));
}

SpaceRn lifted_space(const SpaceGamma& x) {
  return SpaceRn{lifted_sigma(x), x.p, x.q, x.gauge.n};
}

}  // namespace hbesov
