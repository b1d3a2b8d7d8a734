#ifndef HBESOV_REPORT_HPP
#define HBESOV_REPORT_HPP

#include <string>

#include <json.hpp>

#include "hbesov/envelope.hpp"
#include "hbesov/verdict.hpp"

namespace hbesov {

using json = nlohmann::ordered_json;

json to_json(const LqDecision& d);
json to_json(const ConditionRecord& c);
json to_json(const HypothesisLedger& l);

/// Assemble the machine-readable report: command, echoed canonical inputs,
/// verdict payload, hypotheses ledger, citation.  Key order is fixed so that
/// identical queries yield byte-identical reports.
json verdict_report(const std::string& command, json inputs, const Verdict& v);

json envelope_report(const std::string& command, json inputs, const GammaEnvelope& env);

/// Exit code convention: Holds 0, Fails 1, Inconclusive 2.
int exit_code(Tri status);

std::string render_text(const json& report);

}  // namespace hbesov

#endif
