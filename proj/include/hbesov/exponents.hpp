#ifndef HBESOV_EXPONENTS_HPP
#define HBESOV_EXPONENTS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hbesov {

// Integrability exponents live in (0, inf]; inf is a first-class value.
inline constexpr double kInfExp = std::numeric_limits<double>::infinity();

inline bool is_valid_exponent(double q) { return q > 0.0; }

inline void require_exponent(double q, const char* what) {
  if (!(q > 0.0)) throw std::invalid_argument(std::string(what) + ": exponent must be in (0,inf]");
}

// 1/q with 1/inf = 0.
inline double inv_exp(double q) { return std::isinf(q) ? 0.0 : 1.0 / q; }

// Exponent from its reciprocal; nonpositive reciprocals mean inf.
inline double exp_from_inv(double x) { return x <= 0.0 ? kInfExp : 1.0 / x; }

// Conjugate-type exponent: 1/q' = (1 - 1/q)_+, so q' = inf for q <= 1.
inline double dual_exponent(double q) {
  require_exponent(q, "dual_exponent");
  return exp_from_inv(1.0 - inv_exp(q));
}

// Interpolation-type exponent: 1/q* = (1/q2 - 1/q1)_+; q* = inf when q1 <= q2.
inline double q_star(double q1, double q2) {
  require_exponent(q1, "q_star");
  require_exponent(q2, "q_star");
  return exp_from_inv(inv_exp(q2) - inv_exp(q1));
}

inline double positive_part(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace hbesov

#endif
