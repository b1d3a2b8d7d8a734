#ifndef HBESOV_VERIFY_HPP
#define HBESOV_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hbesov/embed_rn.hpp"

namespace hbesov {

/// One randomised ambient-embedding case: the engine's verdict side by side
/// with truncated diagonal operator norms replayed from the verdict's own
/// composite sequence.
struct RnConsistencyCase {
  SpaceRn src;
  SpaceRn tgt;
  bool verdict_holds = false;
};

struct RnConsistencyResult {
  int total = 0;
  int consistent = 0;
  std::vector<std::string> failures;
  bool all_consistent() const { return consistent == total; }
};

/// Deterministic case generator.  Composite rates and polynomial exponents are
/// drawn with margins that make the truncated-norm dichotomy decidable at
/// J <= 512: Cauchy increments below 1e-6 for embeddings that hold, at least
/// 5% growth from J=64 to J=512 for ones that fail.
RnConsistencyCase make_rn_case(std::uint64_t seed, int index);

/// Check one case: Cauchy iff Holds, growth on Fails, and randomized search
/// within 1e-6 of the exact norm.  Returns true when consistent.
bool check_rn_case(const RnConsistencyCase& c, std::string* diagnostic);

RnConsistencyResult run_rn_consistency(std::uint64_t seed, int count);

}  // namespace hbesov

#endif
