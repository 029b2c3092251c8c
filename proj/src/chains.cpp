#include "degmc/chains.hpp"

namespace degmc {

const char* to_string(ChainKind kind) {
  switch (kind) {
    case ChainKind::Switch: return "switch";
    case ChainKind::JerrumSinclair: return "js";
    case ChainKind::HingeFlip: return "hinge";
    case ChainKind::RestrictedSwitch: return "rswitch";
    case ChainKind::BipartiteJS: return "bjs";
    case ChainKind::BipartiteSwitch: return "bswitch";
  }
  return "?";
}

ChainKind parse_chain_kind(const std::string& name, const Instance& inst) {
  const bool bip = std::holds_alternative<BipartiteInstance>(inst);
  if (name == "switch") return bip ? ChainKind::BipartiteSwitch : ChainKind::Switch;
  if (name == "js") return bip ? ChainKind::BipartiteJS : ChainKind::JerrumSinclair;
  if (name == "hinge") return ChainKind::HingeFlip;
  if (name == "rswitch") return ChainKind::RestrictedSwitch;
  if (name == "bjs") return ChainKind::BipartiteJS;
  if (name == "bswitch") return ChainKind::BipartiteSwitch;
  throw Error(ErrorKind::Usage, "unknown chain: " + name);
}

void validate(const ChainSpec& spec) {
  bool ok = false;
  switch (spec.kind) {
    case ChainKind::Switch:
    case ChainKind::JerrumSinclair:
      ok = std::holds_alternative<DegreeInstance>(spec.instance);
      break;
    case ChainKind::HingeFlip:
    case ChainKind::RestrictedSwitch:
      ok = std::holds_alternative<PamInstance>(spec.instance);
      break;
    case ChainKind::BipartiteJS:
    case ChainKind::BipartiteSwitch:
      ok = std::holds_alternative<BipartiteInstance>(spec.instance);
      break;
  }
  if (!ok) throw Error(ErrorKind::Input, std::string("chain ") + to_string(spec.kind) + " does not fit the instance kind");
}

bool uses_perturbed_space(ChainKind kind) {
  return kind == ChainKind::JerrumSinclair || kind == ChainKind::BipartiteJS || kind == ChainKind::HingeFlip;
}

const char* to_string(MoveType type) {
  switch (type) {
    case MoveType::Lazy: return "lazy";
    case MoveType::Rejected: return "rejected";
    case MoveType::Switch: return "switch";
    case MoveType::Type0: return "type0";
    case MoveType::Type1: return "type1";
    case MoveType::Type2: return "type2";
    case MoveType::Hinge: return "hinge";
  }
  return "?";
}

bool Move::same_effect(const Move& other) const {
  auto sorted = [](std::vector<Edge> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(removed) == sorted(other.removed) && sorted(added) == sorted(other.added);
}

TransitionRecord switch_step(LabeledGraph& g, const DegreeInstance& d, Rng& rng) {
  return step(ChainSpec{ChainKind::Switch, d, 0}, g, rng);
}

TransitionRecord js_step(LabeledGraph& g, const DegreeInstance& d, Rng& rng) {
  return step(ChainSpec{ChainKind::JerrumSinclair, d, 0}, g, rng);
}

TransitionRecord hinge_flip_step(LabeledGraph& g, const PamInstance& inst, Rng& rng) {
  return step(ChainSpec{ChainKind::HingeFlip, inst, 0}, g, rng);
}

TransitionRecord restricted_switch_step(LabeledGraph& g, const PamInstance& inst, Rng& rng) {
  return step(ChainSpec{ChainKind::RestrictedSwitch, inst, 0}, g, rng);
}

std::vector<std::pair<LabeledGraph, Rational>> neighbors(const ChainSpec& spec, const LabeledGraph& g) {
  std::vector<std::pair<LabeledGraph, Rational>> out;
  Rational moving = 0;
  for (auto& [mv, p] : enumerate_moves(spec, g)) {
    LabeledGraph h = g;
    apply(h, mv);
    out.emplace_back(std::move(h), p);
    moving += p;
  }
  out.emplace_back(g, Rational(1) - moving);
  return out;
}

Rational transition_probability(const ChainSpec& spec, const LabeledGraph& g, const LabeledGraph& g2) {
  Rational moving = 0;
  Rational hit = 0;
  for (auto& [mv, p] : enumerate_moves(spec, g)) {
    moving += p;
    LabeledGraph h = g;
    apply(h, mv);
    if (h == g2) hit += p;
  }
  if (g == g2) return Rational(1) - moving;
  return hit;
}

RunResult run(const ChainSpec& spec, const LabeledGraph& g0, std::uint64_t steps, bool keep_trace) {
  validate(spec);
  RunResult res{g0, {}, 0};
  Rng rng(spec.seed);
  for (std::uint64_t t = 0; t < steps; ++t) {
    TransitionRecord rec = step(spec, res.final_state, rng);
    res.accepted += rec.accepted ? 1 : 0;
    if (keep_trace) res.trace.push_back(std::move(rec));
  }
  return res;
}

}  // namespace degmc
