#ifndef HBESOV_SPACES_HPP
#define HBESOV_SPACES_HPP

#include "hbesov/gauge.hpp"
#include "hbesov/seq.hpp"

namespace hbesov {

/// Parameter record of a generalised-smoothness space on R^n.
/// Only parameters are represented, never functions.
struct SpaceRn {
  SeqExpr sigma;
  double p = 1.0;  // in (0, inf)
  double q = 1.0;  // in (0, inf]
  int n = 1;
};

void validate(const SpaceRn& x);

/// Parameter record of a trace-type space on a fractal set carrying the gauge.
/// Both integrability exponents are finite here.
struct SpaceGamma {
  SeqExpr sigma;
  double p = 1.0;
  double q = 1.0;
  GaugeExpr gauge;
};

void validate(const SpaceGamma& x);

/// Smoothness sequence of the ambient space whose trace realises x:
/// sigma * h^(1/p) * (2^(jn/p))_j.
SeqExpr lifted_sigma(const SpaceGamma& x);

SpaceRn lifted_space(const SpaceGamma& x);

}  // namespace hbesov

#endif
