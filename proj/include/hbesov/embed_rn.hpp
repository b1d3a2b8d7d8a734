#ifndef HBESOV_EMBED_RN_HPP
#define HBESOV_EMBED_RN_HPP

#include "hbesov/spaces.hpp"
#include "hbesov/verdict.hpp"

namespace hbesov {

/// Embedding between two generalised-smoothness spaces on the same R^n:
/// holds iff p1 <= p2 and sigma^-1 * tau * (2^(jn(1/p1-1/p2)))_j lies in l_{q*}.
/// A bounded embedding here is never compact; every verdict carries that note.
Verdict embed_besov_rn(const SpaceRn& src, const SpaceRn& tgt);

/// Embedding into L_max(p,1)(R^n); four-branch characterisation in (p,q).
Verdict embed_into_lmax(const SpaceRn& src);

/// Embedding into the bounded uniformly continuous functions (equivalently
/// L_inf): sigma^-1 * (2^(jn/p))_j in l_{q'}.
Verdict embed_into_continuous(const SpaceRn& src);

}  // namespace hbesov

#endif
