#include "hbesov/report.hpp"

#include <cmath>
#include <sstream>

#include "hbesov/dsl.hpp"

namespace hbesov {

namespace {

json exp_json(double q) {
  if (std::isinf(q)) return json("inf");
  return json(q);
}

}  // namespace

json to_json(const LqDecision& d) {
  json j;
  j["q"] = exp_json(d.q);
  j["in"] = d.in();
  j["reason"] = d.reason;
  return j;
}

json to_json(const ConditionRecord& c) {
  json j;
  j["name"] = c.name;
  j["sequence"] = print_seq(c.sequence);
  j["exponent"] = exp_json(c.exponent);
  j["decision"] = to_json(c.decision);
  return j;
}

json to_json(const HypothesisLedger& l) {
  json j;
  j["porosity"] = to_string(l.porosity);
  j["t1"] = to_string(l.t1);
  j["upind_h_negative"] = to_string(l.upind_h_negative);
  j["e3a"] = to_string(l.e3a);
  j["e3b"] = to_string(l.e3b);
  j["lowind_tau_positive"] = to_string(l.lowind_tau_positive);
  return j;
}

json verdict_report(const std::string& command, json inputs, const Verdict& v) {
  json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  j["status"] = to_string(v.status);
  j["conditions"] = json::array();
  for (const auto& c : v.conditions) j["conditions"].push_back(to_json(c));
  if (v.ledger) j["hypotheses"] = to_json(*v.ledger);
  if (!v.hypotheses_assumed.empty()) j["hypotheses_assumed"] = v.hypotheses_assumed;
  j["citation"] = v.citation;
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

json envelope_report(const std::string& command, json inputs, const GammaEnvelope& env) {
  json j;
  j["command"] = command;
  j["inputs"] = std::move(inputs);
  switch (env.mode) {
    case EnvelopeMode::Exact: j["mode"] = "exact"; break;
    case EnvelopeMode::LowerBoundOnly: j["mode"] = "lower-bound-only"; break;
    case EnvelopeMode::Bounded: j["mode"] = "bounded"; break;
  }
  j["index_u"] = exp_json(env.pair.index_u);
  j["first_level"] = env.pair.first_level;
  if (env.pair.closed_form) {
    json cf;
    cf["kind"] = env.pair.closed_form->kind == ClosedFormTag::Kind::Power ? "power" : "log-power";
    cf["exponent"] = env.pair.closed_form->exponent;
    j["closed_form"] = cf;
  }
  json grid = json::array();
  for (const auto& pt : env.pair.grid) grid.push_back({pt.t, pt.value});
  j["grid"] = std::move(grid);
  return j;
}

int exit_code(Tri status) {
  switch (status) {
    case Tri::Holds: return 0;
    case Tri::Fails: return 1;
    default: return 2;
  }
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os << report["command"].get<std::string>() << "\n";
  if (report.contains("inputs"))
    for (auto& [k, val] : report["inputs"].items()) os << "  " << k << " = " << val.dump() << "\n";
  if (report.contains("status")) os << "status: " << report["status"].get<std::string>() << "\n";
  if (report.contains("mode")) os << "mode: " << report["mode"].get<std::string>() << "\n";
  auto plain = [](const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  if (report.contains("conditions"))
    for (auto& c : report["conditions"])
      os << "  condition " << c["name"].get<std::string>() << ": " << c["sequence"].get<std::string>()
         << " in l_" << plain(c["exponent"]) << " -> "
         << (c["decision"]["in"].get<bool>() ? "In" : "Out") << " ("
         << c["decision"]["reason"].get<std::string>() << ")\n";
  if (report.contains("hypotheses")) os << "hypotheses: " << report["hypotheses"].dump() << "\n";
  if (report.contains("citation")) os << "citation: " << report["citation"].get<std::string>() << "\n";
  if (report.contains("notes"))
    for (auto& n : report["notes"]) os << "note: " << n.get<std::string>() << "\n";
  if (report.contains("numerics")) os << "numerics: " << report["numerics"].dump() << "\n";
  if (report.contains("grid"))
    for (auto& pt : report["grid"])
      os << pt[0].get<double>() << " " << pt[1].get<double>() << "\n";
  return os.str();
}

}  // namespace hbesov
