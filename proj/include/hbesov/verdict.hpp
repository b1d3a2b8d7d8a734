#ifndef HBESOV_VERDICT_HPP
#define HBESOV_VERDICT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hbesov/seq.hpp"

namespace hbesov {

enum class Tri { Holds, Fails, Inconclusive };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Holds: return "Holds";
    case Tri::Fails: return "Fails";
    default: return "Inconclusive";
  }
}

/// One decided l_q-membership condition, kept replayable: the exact composite
/// sequence that was tested together with the exponent and the rule that fired.
struct ConditionRecord {
  std::string name;
  SeqExpr sequence;
  double exponent = kInfExp;
  LqDecision decision;
};

/// Geometric/index hypotheses tracked by the trace-side operations.
/// Every entry is evaluated, never silently assumed.
struct HypothesisLedger {
  Tri porosity = Tri::Inconclusive;
  Tri t1 = Tri::Inconclusive;                  // -n <= lower h-index <= upper h-index < 0
  Tri upind_h_negative = Tri::Inconclusive;
  Tri e3a = Tri::Inconclusive;                 // upper index of tau*h^(1/p2) negative
  Tri e3b = Tri::Inconclusive;                 // lower tau index above the p2-moment line
  Tri lowind_tau_positive = Tri::Inconclusive;
};

struct Verdict {
  Tri status = Tri::Inconclusive;
  std::vector<ConditionRecord> conditions;
  std::vector<std::string> hypotheses_assumed;
  std::string citation;
  std::vector<std::string> notes;
  std::optional<HypothesisLedger> ledger;

  bool holds() const { return status == Tri::Holds; }
  bool fails() const { return status == Tri::Fails; }
};

}  // namespace hbesov

#endif
