// Command-line surface: every query answers with a machine-readable report
// tying the verdict to the rule that decided it.  Exit codes: 0 the assertion
// holds, 1 it fails, 2 the engine cannot decide, 64 usage or input errors.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hbesov/dsl.hpp"
#include "hbesov/embed_rn.hpp"
#include "hbesov/envelope.hpp"
#include "hbesov/hset.hpp"
#include "hbesov/oracle.hpp"
#include "hbesov/report.hpp"
#include "hbesov/trace_gamma.hpp"
#include "hbesov/verify.hpp"

namespace {

using hbesov::json;

struct Options {
  std::string sigma, tau, gauge;
  double p = 1.0, p2 = 1.0, r = 1.0;
  std::string q = "1", q2 = "1";
  int n = 1;
  int depth = 64;
  std::uint64_t seed = 1;
  int count = 200;
  int samples = 1000;
  int trials = 8;
  std::string verify_case = "rn-random";
  bool json_out = false;
};

void emit(const json& report, bool as_json) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << hbesov::render_text(report);
}

int run(int argc, char** argv) {
  CLI::App app{"embedding and trace criteria for generalised-smoothness spaces on fractal sets"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "emit the JSON report");

  auto add_sigma = [&](CLI::App* c) {
    c->add_option("--sigma", o.sigma, "sequence, e.g. '2^(0.5j)*(1+j)^-1' or 'paren(0.5)'")
        ->required();
  };
  auto add_space = [&](CLI::App* c) {
    add_sigma(c);
    c->add_option("--p", o.p, "integrability exponent p")->required();
    c->add_option("--q", o.q, "summability exponent q ('inf' allowed where q may be infinite)")
        ->required();
  };
  auto add_target = [&](CLI::App* c) {
    c->add_option("--tau", o.tau, "target sequence")->required();
    c->add_option("--p2", o.p2, "target p")->required();
    c->add_option("--q2", o.q2, "target q")->required();
  };
  auto add_gauge = [&](CLI::App* c) {
    c->add_option("--gauge", o.gauge, "gauge, e.g. 'r^0.63' or 'r^0*(1+L)^-1'")->required();
  };

  CLI::App* indices = app.add_subcommand("indices", "regularity indices of a sequence");
  add_sigma(indices);

  CLI::App* lq = app.add_subcommand("lq", "l_q membership of a sequence");
  add_sigma(lq);
  lq->add_option("--q", o.q, "exponent, 'inf' allowed")->required();

  CLI::App* embed_rn = app.add_subcommand("embed-rn", "ambient-space embedding verdict");
  add_space(embed_rn);
  add_target(embed_rn);
  embed_rn->add_option("--n", o.n, "ambient dimension");

  CLI::App* trace_exists = app.add_subcommand("trace-exists", "trace space existence verdict");
  add_space(trace_exists);
  add_gauge(trace_exists);
  trace_exists->add_option("--n", o.n, "ambient dimension");

  CLI::App* trace_lr = app.add_subcommand("trace-lr", "trace into L_r verdict");
  add_space(trace_lr);
  add_gauge(trace_lr);
  trace_lr->add_option("--r", o.r, "target integrability r")->required();
  trace_lr->add_option("--n", o.n, "ambient dimension");

  CLI::App* embed_gamma = app.add_subcommand("embed-gamma", "fractal-side embedding verdict");
  add_space(embed_gamma);
  add_target(embed_gamma);
  add_gauge(embed_gamma);
  embed_gamma->add_option("--n", o.n, "ambient dimension");

  CLI::App* envelope = app.add_subcommand("envelope", "growth envelope of a trace space");
  add_space(envelope);
  add_gauge(envelope);
  envelope->add_option("--n", o.n, "ambient dimension");
  envelope->add_option("--depth", o.depth, "deepest grid level");

  CLI::App* oracle = app.add_subcommand("oracle", "truncated diagonal operator norms");
  add_sigma(oracle);
  oracle->add_option("--q", o.q, "source exponent q1")->required();
  oracle->add_option("--q2", o.q2, "target exponent q2")->required();
  oracle->add_option("--depth", o.depth, "truncation level J");
  oracle->add_option("--seed", o.seed, "search seed");
  oracle->add_option("--trials", o.trials, "random search trials");

  CLI::App* hset = app.add_subcommand("hset", "build a gauge-tracking dyadic tree and test it");
  add_gauge(hset);
  hset->add_option("--n", o.n, "ambient dimension");
  hset->add_option("--depth", o.depth, "tree depth")->required();
  hset->add_option("--seed", o.seed, "sampling seed");
  hset->add_option("--samples", o.samples, "ball samples");

  CLI::App* verify = app.add_subcommand("verify", "bulk engine-vs-oracle consistency runs");
  verify->add_option("--case", o.verify_case, "suite name (rn-random)");
  verify->add_option("--seed", o.seed, "base seed");
  verify->add_option("--n", o.count, "number of cases");

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  using namespace hbesov;

  if (*indices) {
    const SeqExpr s = parse_seq(o.sigma);
    const IndexPair ip = hbesov::indices(s);
    const IndexPair boyd = boyd_indices(s);
    json rep;
    rep["command"] = "indices";
    rep["inputs"] = {{"sigma", print_seq(s)}};
    rep["lower"] = ip.lower;
    rep["upper"] = ip.upper;
    rep["numerics"] = {{"lower", ip.lower},
                       {"upper", ip.upper},
                       {"boyd_lower", boyd.lower},
                       {"boyd_upper", boyd.upper}};
    emit(rep, o.json_out);
    return 0;
  }
  if (*lq) {
    const SeqExpr s = parse_seq(o.sigma);
    const double q = parse_exponent_flag(o.q);
    const LqDecision dec = lq_membership(s, q);
    json rep;
    rep["command"] = "lq";
    rep["inputs"] = {{"sigma", print_seq(s)}, {"q", o.q}};
    rep["status"] = dec.in() ? "Holds" : "Fails";
    rep["conditions"] = json::array({to_json(ConditionRecord{"membership", s, q, dec})});
    rep["citation"] = "lq-tail-rules";
    emit(rep, o.json_out);
    return dec.in() ? 0 : 1;
  }
  // replay a verdict's composite through truncated operator norms
  auto oracle_summary = [](const Verdict& v, double q1, double q2) {
    json num;
    if (v.conditions.empty()) return num;
    const SeqExpr& alpha = v.conditions.front().sequence;
    const double n64 = diag_opnorm_exact(alpha, q1, q2, 64);
    const double n512 = diag_opnorm_exact(alpha, q1, q2, 512);
    num["diag_opnorm_64"] = n64;
    num["diag_opnorm_512"] = n512;
    num["growth_ratio"] = n512 / n64;
    return num;
  };

  if (*embed_rn) {
    const SpaceRn src{parse_seq(o.sigma), o.p, parse_exponent_flag(o.q), o.n};
    const SpaceRn tgt{parse_seq(o.tau), o.p2, parse_exponent_flag(o.q2), o.n};
    const Verdict v = embed_besov_rn(src, tgt);
    json inputs = {{"sigma", print_seq(src.sigma)}, {"p", o.p},  {"q", o.q},
                   {"tau", print_seq(tgt.sigma)},   {"p2", o.p2}, {"q2", o.q2},
                   {"n", o.n}};
    json rep = verdict_report("embed-rn", inputs, v);
    rep["numerics"] = oracle_summary(v, src.q, tgt.q);
    emit(rep, o.json_out);
    return exit_code(v.status);
  }

  auto make_gamma_space = [&]() {
    return SpaceGamma{parse_seq(o.sigma), o.p, parse_exponent_flag(o.q), parse_gauge(o.gauge, o.n)};
  };
  auto gamma_inputs = [&]() {
    return json{{"sigma", o.sigma}, {"p", o.p}, {"q", o.q}, {"gauge", o.gauge}, {"n", o.n}};
  };

  if (*trace_exists) {
    const Verdict v = hbesov::trace_exists(make_gamma_space());
    emit(verdict_report("trace-exists", gamma_inputs(), v), o.json_out);
    return exit_code(v.status);
  }
  if (*trace_lr) {
    const Verdict v = trace_into_lr(make_gamma_space(), o.r);
    json inputs = gamma_inputs();
    inputs["r"] = o.r;
    emit(verdict_report("trace-lr", inputs, v), o.json_out);
    return exit_code(v.status);
  }
  if (*embed_gamma) {
    const GaugeExpr g = parse_gauge(o.gauge, o.n);
    const SpaceGamma x1{parse_seq(o.sigma), o.p, parse_exponent_flag(o.q), g};
    const SpaceGamma x2{parse_seq(o.tau), o.p2, parse_exponent_flag(o.q2), g};
    const Verdict v = embed_gamma_gamma(x1, x2);
    json inputs = gamma_inputs();
    inputs["tau"] = o.tau;
    inputs["p2"] = o.p2;
    inputs["q2"] = o.q2;
    json rep = verdict_report("embed-gamma", inputs, v);
    rep["numerics"] = oracle_summary(v, x1.q, x2.q);
    emit(rep, o.json_out);
    return exit_code(v.status);
  }
  if (*envelope) {
    const GammaEnvelope env = growth_envelope_gamma(make_gamma_space(), o.depth);
    json inputs = gamma_inputs();
    inputs["depth"] = o.depth;
    emit(envelope_report("envelope", inputs, env), o.json_out);
    return 0;
  }
  if (*oracle) {
    const SeqExpr alpha = parse_seq(o.sigma);
    const double q1 = parse_exponent_flag(o.q), q2 = parse_exponent_flag(o.q2);
    const double exact = diag_opnorm_exact(alpha, q1, q2, o.depth);
    const double searched = diag_opnorm_search(alpha, q1, q2, o.depth, o.trials, o.seed);
    json rep;
    rep["command"] = "oracle";
    rep["inputs"] = {{"sigma", print_seq(alpha)}, {"q", o.q},       {"q2", o.q2},
                     {"depth", o.depth},          {"seed", o.seed}, {"trials", o.trials}};
    rep["numerics"] = {{"diag_opnorm_exact", exact},
                       {"diag_opnorm_search", searched},
                       {"qstar", std::isinf(q_star(q1, q2)) ? json("inf") : json(q_star(q1, q2))}};
    emit(rep, o.json_out);
    return 0;
  }
  if (*hset) {
    const GaugeExpr g = parse_gauge(o.gauge, o.n);
    const NormalizedLevels nl = normalize_gauge(g, o.depth);
    const DyadicTree tree = build_cantor(nl.values, o.depth);
    const HCheckStats st = empirical_h_check(tree, g, o.samples, o.seed);
    std::ostringstream tree_text;
    serialize(tree, tree_text);
    json rep;
    rep["command"] = "hset";
    rep["inputs"] = {{"gauge", print_gauge(g)},
                     {"n", o.n},
                     {"depth", o.depth},
                     {"seed", o.seed},
                     {"samples", o.samples}};
    rep["numerics"] = {{"mass_ratio_bound", tree.mass_ratio_bound},
                       {"min_ratio", st.min_ratio},
                       {"max_ratio", st.max_ratio},
                       {"median_ratio", st.median_ratio},
                       {"doubling_max", st.doubling_max},
                       {"normalization_distortion", nl.max_distortion}};
    rep["tree"] = tree_text.str();
    if (o.json_out) {
      std::cout << rep.dump(2) << "\n";
    } else {
      json no_tree = rep;
      no_tree.erase("tree");
      std::cout << render_text(no_tree) << tree_text.str();
    }
    return 0;
  }
  if (*verify) {
    if (o.verify_case != "rn-random") {
      std::cerr << "unknown verify case '" << o.verify_case << "'\n";
      return 64;
    }
    const RnConsistencyResult res = run_rn_consistency(o.seed, o.count);
    if (o.json_out) {
      json rep;
      rep["command"] = "verify";
      rep["inputs"] = {{"case", o.verify_case}, {"seed", o.seed}, {"n", o.count}};
      rep["consistent"] = res.consistent;
      rep["total"] = res.total;
      rep["failures"] = res.failures;
      std::cout << rep.dump(2) << "\n";
    } else {
      std::cout << res.consistent << "/" << res.total << " oracle-consistent\n";
      for (const auto& f : res.failures) std::cout << "  " << f << "\n";
    }
    return res.all_consistent() ? 0 : 1;
  }
  return 64;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hbesov::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  }
}
