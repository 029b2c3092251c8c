#include "degmc/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "degmc/canonical.hpp"
#include "degmc/chains.hpp"
#include "degmc/realize.hpp"
#include "degmc/stability.hpp"
#include "degmc/statespace.hpp"

namespace degmc {

namespace {

using nlohmann::json;

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (const Edge& e : edges) a.push_back({e.u, e.v});
  return a;
}

json graph_json(const LabeledGraph& g) { return {{"n", g.order()}, {"edges", edges_json(g.sorted_edges())}}; }

json header(const std::string& command, const Instance& inst) {
  return {{"command", command}, {"instance_hash", hex64(instance_hash(inst))}, {"version", kVersion}};
}

LabeledGraph load_exact(const std::string& path, const Instance& inst) {
  LabeledGraph g = load_graph(path);
  if (g.order() != order(inst) || classify_membership(g, inst).tag != Membership::Exact)
    throw Error(ErrorKind::Input, path + " is not a realization of the instance");
  return g;
}

const PamInstance& as_pam(const Instance& inst) {
  if (!std::holds_alternative<PamInstance>(inst)) throw Error(ErrorKind::Input, "command needs a two-class instance");
  return std::get<PamInstance>(inst);
}

struct Options {
  std::string instance;
  std::string graph;
  std::string from;
  std::string to;
  std::string chain;
  std::string out;
  std::string trace;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::uint64_t pairing_seed = 0;
  double eps = 0.01;
  bool perturbed = false;
  bool exact_k = false;
};

void cmd_realize(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.instance);
  const LabeledGraph g = realize(inst);
  if (!o.out.empty()) save_graph(o.out, g);
  json r = header("realize", inst);
  r["graph"] = graph_json(g);
  out << r.dump() << '\n';
}

void cmd_sample(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.instance);
  const ChainSpec spec{parse_chain_kind(o.chain, inst), inst, o.seed};
  validate(spec);
  const LabeledGraph g0 = o.graph.empty() ? realize(inst) : load_graph(o.graph);
  if (g0.order() != order(inst) || !classify_membership(g0, inst).within())
    throw Error(ErrorKind::Input, "start graph is outside the chain's state space");
  const RunResult res = run(spec, g0, o.steps, !o.trace.empty());
  if (!o.trace.empty()) {
    std::ofstream tr(o.trace);
    if (!tr) throw Error(ErrorKind::Io, "cannot write " + o.trace);
    for (std::size_t t = 0; t < res.trace.size(); ++t) {
      const TransitionRecord& rec = res.trace[t];
      tr << json{{"t", t},
                 {"type", to_string(rec.type)},
                 {"accepted", rec.accepted},
                 {"removed", edges_json(rec.removed)},
                 {"added", edges_json(rec.added)}}
                .dump()
         << '\n';
    }
  }
  if (!o.out.empty()) save_graph(o.out, res.final_state);
  json r = header("sample", inst);
  r["chain"] = to_string(spec.kind);
  r["steps"] = o.steps;
  r["seed"] = o.seed;
  r["accepted"] = res.accepted;
  r["exact"] = classify_membership(res.final_state, inst).tag == Membership::Exact;
  r["final"] = graph_json(res.final_state);
  out << r.dump() << '\n';
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.instance);
  const StateSpace s = enumerate(inst, o.perturbed);
  json r = header("enumerate", inst);
  r["count"] = s.size();
  if (o.perturbed) r["exact"] = s.exact_count();
  out << r.dump() << '\n';
}

void cmd_diagnose(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.instance);
  const ChainSpec spec{parse_chain_kind(o.chain, inst), inst, 0};
  validate(spec);
  const StateSpace s = enumerate(inst, uses_perturbed_space(spec.kind));
  const Eigen::MatrixXd p = transition_matrix(spec, s);
  const SpectralResult gap = spectral_gap(p);
  const MixingResult mix = mixing_time(p, o.eps);
  json r = header("diagnose", inst);
  r["chain"] = to_string(spec.kind);
  r["states"] = s.size();
  r["exact_states"] = s.exact_count();
  r["eps"] = o.eps;
  r["lambda1"] = gap.lambda1;
  r["gap"] = gap.gap;
  r["tau"] = mix.tau;
  r["sinclair_bound"] = sinclair_bound(s.size(), o.eps, gap.lambda1);
  r["tv_curve"] = mix.worst_tv;
  out << r.dump() << '\n';
}

void cmd_stability(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.instance);
  const StabilityReport rep = stability_report(inst, o.exact_k);
  json r = header("stability", inst);
  r["delta"] = rep.delta;
  r["Delta"] = rep.Delta;
  r["m"] = rep.m;
  for (const auto& [name, ok] : rep.verdicts) r[name] = ok;
  if (rep.k_exact) {
    r["k"] = *rep.k_exact;
    r["perturbed_states"] = rep.ratio->perturbed;
    r["exact_states"] = rep.ratio->exact;
    r["ratio_bound"] = ratio_bound(order(inst), *rep.k_exact).str();
  }
  out << r.dump() << '\n';
}

void cmd_repair(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.instance);
  const PamInstance& pam = as_pam(inst);
  LabeledGraph g = load_graph(o.graph);
  std::vector<HingeMove> moves;
  if (pam.jdm()) {
    moves = jdm_repair(g, pam);
  } else {
    auto found = bounded_repair(g, pam, 6);
    if (!found) throw Error(ErrorKind::NotFound, "no repair within 6 hinge flips");
    moves = std::move(*found);
  }
  json m = json::array();
  for (const HingeMove& mv : moves) {
    apply_hinge(g, mv);
    m.push_back({mv.i, mv.j, mv.k});
  }
  if (!o.out.empty()) save_graph(o.out, g);
  json r = header("repair", inst);
  r["moves"] = m;
  r["length"] = moves.size();
  r["final"] = graph_json(g);
  out << r.dump() << '\n';
}

void cmd_path(const Options& o, std::ostream& out) {
  const Instance inst = load_instance(o.instance);
  const LabeledGraph a = load_exact(o.from, inst);
  const LabeledGraph b = load_exact(o.to, inst);
  std::vector<json> lines;
  auto step_json = [](std::size_t k, MoveType type, const std::vector<Edge>& rem, const std::vector<Edge>& add) {
    return json{{"step", k}, {"type", to_string(type)}, {"removed", edges_json(rem)}, {"added", edges_json(add)}};
  };
  if (o.chain == "switch") {
    for (const Move& mv : switch_path(a, b)) lines.push_back(step_json(lines.size(), mv.type, mv.removed, mv.added));
  } else if (o.chain == "js" || o.chain == "hinge") {
    const ColoredDifference diff = symmetric_difference(a, b);
    Pairing psi = first_pairing(diff);
    if (o.pairing_seed != 0) {
      Rng rng(o.pairing_seed);
      psi = sample_pairing(diff, rng);
    }
    const CanonicalPath path =
        o.chain == "js" ? js_canonical_path(a, b, psi) : hinge_canonical_path(a, b, psi, as_pam(inst));
    for (const PathStep& st : path.steps) {
      json j = step_json(lines.size(), st.type, st.removed, st.added);
      j["circuit"] = st.circuit;
      lines.push_back(std::move(j));
    }
  } else {
    throw Error(ErrorKind::Usage, "path supports js, hinge and switch");
  }
  json h = header("path", inst);
  h["chain"] = o.chain;
  h["length"] = lines.size();
  out << h.dump() << '\n';
  for (const json& j : lines) out << j.dump() << '\n';
}

int fail(std::ostream& out, const std::string& kind, const std::string& message, int code) {
  out << json{{"error", kind}, {"message", message}, {"version", kVersion}}.dump() << '\n';
  return code;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Degree-constrained graph sampling toolkit", "degmc"};
  app.require_subcommand(1);
  Options o;

  auto instance_opt = [&o](CLI::App* sub) { sub->add_option("--instance", o.instance, "instance JSON")->required(); };

  CLI::App* sample = app.add_subcommand("sample", "run a chain");
  instance_opt(sample);
  sample->add_option("--chain", o.chain, "switch|js|hinge|rswitch")->required();
  sample->add_option("--steps", o.steps, "number of steps")->required();
  sample->add_option("--seed", o.seed, "RNG seed")->required();
  sample->add_option("--graph", o.graph, "start graph");
  sample->add_option("--trace", o.trace, "NDJSON trace file");
  sample->add_option("--out", o.out, "final graph file");

  CLI::App* realize_cmd = app.add_subcommand("realize", "build one realization");
  instance_opt(realize_cmd);
  realize_cmd->add_option("--out", o.out, "graph file");

  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "count realizations");
  instance_opt(enumerate_cmd);
  enumerate_cmd->add_flag("--perturbed", o.perturbed, "include perturbed states");

  CLI::App* diagnose = app.add_subcommand("diagnose", "exact mixing diagnostics");
  instance_opt(diagnose);
  diagnose->add_option("--chain", o.chain, "chain name")->required();
  diagnose->add_option("--eps", o.eps, "total variation threshold");

  CLI::App* stability = app.add_subcommand("stability", "stability report");
  instance_opt(stability);
  stability->add_flag("--exact-k", o.exact_k, "compute k and the space ratio exactly");

  CLI::App* repair = app.add_subcommand("repair", "repair a perturbed graph by hinge flips");
  instance_opt(repair);
  repair->add_option("--graph", o.graph, "perturbed graph")->required();
  repair->add_option("--out", o.out, "repaired graph file");

  CLI::App* path = app.add_subcommand("path", "canonical path between two realizations");
  instance_opt(path);
  path->add_option("--chain", o.chain, "js|hinge|switch")->required();
  path->add_option("--from", o.from, "start graph")->required();
  path->add_option("--to", o.to, "end graph")->required();
  path->add_option("--pairing", o.pairing_seed, "seed for a random pairing");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail(out, "Usage", e.what(), 2);
  }

  try {
    if (*sample) cmd_sample(o, out);
    else if (*realize_cmd) cmd_realize(o, out);
    else if (*enumerate_cmd) cmd_enumerate(o, out);
    else if (*diagnose) cmd_diagnose(o, out);
    else if (*stability) cmd_stability(o, out);
    else if (*repair) cmd_repair(o, out);
    else cmd_path(o, out);
  } catch (const Error& e) {
    return fail(out, to_string(e.kind()), e.what(), e.kind() == ErrorKind::Usage ? 2 : 1);
  } catch (const std::exception& e) {
    return fail(out, "Internal", e.what(), 1);
  }
  return 0;
}

}  // namespace degmc
