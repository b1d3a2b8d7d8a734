#ifndef HBESOV_SEQ_HPP
#define HBESOV_SEQ_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hbesov/exponents.hpp"

namespace hbesov {

/// Structured admissible sequence
///   sigma_j = C * 2^(a*j) * (1+j)^b * ln(e+j)^c,
/// optionally overridden by a finite positive prefix for small j.
/// Admissibility (bounded consecutive ratios) is automatic for every
/// member of the family; the tail parameters alone decide indices and
/// l_q membership, the prefix never does.
struct SeqExpr {
  double scale = 1.0;   // C > 0
  double rate = 0.0;    // a, base-2 exponential rate per level
  double poly = 0.0;    // b, exponent on (1+j)
  double loglog = 0.0;  // c, exponent on ln(e+j)
  std::vector<double> prefix;  // overrides terms j < prefix.size(); entries > 0

  bool operator==(const SeqExpr&) const = default;
};

struct IndexPair {
  double lower = 0.0;
  double upper = 0.0;
};

enum class Membership { In, Out };

struct LqDecision {
  double q = kInfExp;
  Membership verdict = Membership::Out;
  std::string reason;
  bool in() const { return verdict == Membership::In; }
};

/// The shorthand (a) = (2^(j*a))_j.
SeqExpr paren(double a);

SeqExpr make_seq(double scale, double rate, double poly = 0.0, double loglog = 0.0,
                 std::vector<double> prefix = {});

double eval(const SeqExpr& s, std::size_t j);
double log2_eval(const SeqExpr& s, std::size_t j);

/// Pointwise product; exact on the whole family (prefixes multiply pointwise).
SeqExpr mul(const SeqExpr& x, const SeqExpr& y);
SeqExpr mul(const SeqExpr& x, const SeqExpr& y, const SeqExpr& z);

/// Pointwise r-th power.
SeqExpr pow_seq(const SeqExpr& s, double r);

/// Regularity indices (liminf/limsup of log2 of consecutive ratios).
/// Every family member has lower == upper == rate; the prefix is ignored.
IndexPair indices(const SeqExpr& s);

/// Boyd indices (shift-uniform variants); coincide with indices() on the family.
IndexPair boyd_indices(const SeqExpr& s);

/// Numerically evaluated Boyd index approximations at level j (for cross-checks).
IndexPair boyd_indices_numeric(const SeqExpr& s, std::size_t j, std::size_t shift_cap = 1 << 14);

/// Empirical admissibility constants: min/max of sigma_{j+1}/sigma_j over j < probe,
/// merged with the tail limit 2^rate.
std::pair<double, double> admissibility_bounds(const SeqExpr& s, std::size_t probe = 256);

/// Tail decision for (sigma_j)_j in l_q.  q < inf: summability of sigma^q by the
/// rate / polynomial / iterated-log hierarchy; q = inf: boundedness.  The
/// critical line c*q = -1 is decided Out (the underlying series diverges).
LqDecision lq_membership(const SeqExpr& s, double q);

/// Largest-exponent dual test: alpha*beta in l_q2 for every beta in l_q1
/// holds iff alpha in l_{q*}.
LqDecision landau_dual(const SeqExpr& alpha, double q1, double q2);

struct TabulatedIndices {
  IndexPair indices;
  bool stable = false;
  double window_gap = 0.0;  // largest estimate drift between the last two windows
};

/// Windowed liminf/limsup estimates of log2(v_{j+1}/v_j) for raw data.
/// Uses trailing geometric windows [N/4,N/2) and [N/2,N); stable when the two
/// window estimates agree within 1e-3.  No l_q decision is offered for
/// tabulated-only input.
TabulatedIndices tabulated_indices(const std::vector<double>& values);

}  // namespace hbesov

#endif
