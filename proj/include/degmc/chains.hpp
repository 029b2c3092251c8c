#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "degmc/graph.hpp"
#include "degmc/instance.hpp"
#include "degmc/rng.hpp"

namespace degmc {

using Rational = boost::rational<std::int64_t>;

enum class ChainKind { Switch, JerrumSinclair, HingeFlip, RestrictedSwitch, BipartiteJS, BipartiteSwitch };

const char* to_string(ChainKind kind);
ChainKind parse_chain_kind(const std::string& name, const Instance& inst);

struct ChainSpec {
  ChainKind kind = ChainKind::Switch;
  Instance instance;
  std::uint64_t seed = 0;
};

// Throws Input when the chain kind does not fit the instance kind.
void validate(const ChainSpec& spec);
// True when the chain lives on the perturbed space.
bool uses_perturbed_space(ChainKind kind);

enum class MoveType { Lazy, Rejected, Switch, Type0, Type1, Type2, Hinge };
const char* to_string(MoveType type);

struct Move {
  MoveType type = MoveType::Rejected;
  std::vector<Edge> removed;
  std::vector<Edge> added;
  bool same_effect(const Move& other) const;
};

struct TransitionRecord {
  MoveType type = MoveType::Lazy;
  std::vector<Edge> removed;
  std::vector<Edge> added;
  std::vector<std::int64_t> draws;  // random choices in drawing order
  bool accepted = false;
};

template <class G>
void apply(G& g, const Move& m) {
  for (const Edge& e : m.removed) g.remove_edge(e);
  for (const Edge& e : m.added) g.add_edge(e);
}

namespace kernel {

template <class G>
bool degrees_exact(const G& g, const std::vector<int>& d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != d[v]) return false;
  return true;
}

// Perturbation summary of a PAM state, so hinge proposals are checked in O(1).
struct PamSummary {
  int abs_sum = 0;
  std::int64_t cut = 0;
};

template <class G>
PamSummary pam_summary(const G& g, const PamInstance& inst) {
  PamSummary s;
  for (int v = 0; v < g.order(); ++v) s.abs_sum += std::abs(inst.d[v] - g.degree(v));
  s.cut = cut_internal_counts(g, inst).c12;
  return s;
}

// Matching 0 keeps {ab, xy}; 1 gives {ax, by}; 2 gives {ay, bx}.
template <class G>
std::optional<Move> switch_proposal(const G& g, Edge e1, Edge e2, int matching) {
  const Vertex a = e1.u, b = e1.v, x = e2.u, y = e2.v;
  if (a == x || a == y || b == x || b == y) return std::nullopt;
  if (matching == 0) return std::nullopt;
  const Edge f1 = matching == 1 ? make_edge(a, x) : make_edge(a, y);
  const Edge f2 = matching == 1 ? make_edge(b, y) : make_edge(b, x);
  if (g.has_edge(f1) || g.has_edge(f2)) return std::nullopt;
  return Move{MoveType::Switch, {e1, e2}, {f1, f2}};
}

inline bool switch_fits(const Move& m, const Instance& inst, ChainKind kind) {
  if (kind == ChainKind::BipartiteSwitch) {
    const auto& b = std::get<BipartiteInstance>(inst);
    for (const Edge& e : m.added)
      if (b.side(e.u) == b.side(e.v)) return false;
  } else if (kind == ChainKind::RestrictedSwitch) {
    const auto& p = std::get<PamInstance>(inst);
    int delta = 0;
    for (const Edge& e : m.added) delta += p.is_cut(e);
    for (const Edge& e : m.removed) delta -= p.is_cut(e);
    if (delta != 0) return false;
  }
  return true;
}

// JS proposal for ordered pair (i, j); `kpick` selects the compensating edge
// among the current neighbours of j in a Type 1 move.
template <class G>
std::optional<Move> js_proposal(const G& g, const std::vector<int>& d, bool exact, Vertex i, Vertex j,
                                int kpick) {
  if (i == j) return std::nullopt;
  const Edge e = make_edge(i, j);
  if (exact) {
    if (!g.has_edge(e)) return std::nullopt;
    return Move{MoveType::Type0, {e}, {}};
  }
  if (g.degree(i) >= d[i] || g.has_edge(e)) return std::nullopt;
  if (g.degree(j) + 1 > d[j]) {
    const Vertex k = g.neighbor_at(j, kpick);
    return Move{MoveType::Type1, {make_edge(j, k)}, {e}};
  }
  return Move{MoveType::Type2, {}, {e}};
}

template <class G>
std::optional<Move> hinge_proposal(const G& g, const PamInstance& inst, const PamSummary& s, Vertex i,
                                   Vertex j, Vertex k) {
  if (i == j || j == k || i == k) return std::nullopt;
  if (!g.has_edge(i, j) || g.has_edge(j, k)) return std::nullopt;
  const int ai = inst.d[i] - g.degree(i);
  const int ak = inst.d[k] - g.degree(k);
  const int abs_sum = s.abs_sum - std::abs(ai) - std::abs(ak) + std::abs(ai + 1) + std::abs(ak - 1);
  const std::int64_t cut = s.cut - inst.is_cut(make_edge(i, j)) + inst.is_cut(make_edge(j, k));
  if (abs_sum > 4 || std::abs(cut - inst.c12) > 1) return std::nullopt;
  return Move{MoveType::Hinge, {make_edge(i, j)}, {make_edge(j, k)}};
}

}  // namespace kernel

// All non-identity moves from g with their exact probabilities.
template <class G>
std::vector<std::pair<Move, Rational>> enumerate_moves(const ChainSpec& spec, const G& g) {
  std::vector<std::pair<Move, Rational>> out;
  const int n = g.order();
  switch (spec.kind) {
    case ChainKind::Switch:
    case ChainKind::RestrictedSwitch:
    case ChainKind::BipartiteSwitch: {
      std::vector<Edge> es;
      g.for_each_edge([&es](Edge e) { es.push_back(e); });
      const std::int64_t m = static_cast<std::int64_t>(es.size());
      if (m < 2) break;
      const Rational p(1, 2 * 3 * (m * (m - 1) / 2));
      for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
          for (int mt = 1; mt <= 2; ++mt) {
            auto mv = kernel::switch_proposal(g, es[a], es[b], mt);
            if (mv && kernel::switch_fits(*mv, spec.instance, spec.kind)) out.emplace_back(std::move(*mv), p);
          }
      break;
    }
    case ChainKind::JerrumSinclair:
    case ChainKind::BipartiteJS: {
      const std::vector<int> d = target_degrees(spec.instance);
      const bool exact = kernel::degrees_exact(g, d);
      std::int64_t pairs = static_cast<std::int64_t>(n) * n;
      const BipartiteInstance* b = nullptr;
      if (spec.kind == ChainKind::BipartiteJS) {
        b = &std::get<BipartiteInstance>(spec.instance);
        pairs = 2 * static_cast<std::int64_t>(b->r.size()) * static_cast<std::int64_t>(b->c.size());
      }
      const Rational base(1, 2 * pairs);
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) {
          if (b && b->side(i) == b->side(j)) continue;
          auto first = kernel::js_proposal(g, d, exact, i, j, 0);
          if (!first) continue;
          if (first->type == MoveType::Type1) {
            const int deg = g.degree(j);
            for (int k = 0; k < deg; ++k) out.emplace_back(*kernel::js_proposal(g, d, exact, i, j, k), base / deg);
            continue;
          }
          // Type 0 and Type 2 moves are symmetric in (i, j): count both orders once.
          const bool reverse = kernel::js_proposal(g, d, exact, j, i, 0).has_value();
          if (reverse && j < i) continue;
          out.emplace_back(std::move(*first), reverse ? base * 2 : base);
        }
      break;
    }
    case ChainKind::HingeFlip: {
      const auto& inst = std::get<PamInstance>(spec.instance);
      const auto s = kernel::pam_summary(g, inst);
      const Rational p(1, 2 * static_cast<std::int64_t>(n) * n * n);
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) {
          if (i == j || !g.has_edge(i, j)) continue;
          for (Vertex k = 0; k < n; ++k) {
            auto mv = kernel::hinge_proposal(g, inst, s, i, j, k);
            if (mv) out.emplace_back(std::move(*mv), p);
          }
        }
      break;
    }
  }
  return out;
}

// One lazy step, mutating g in place.
template <class G>
TransitionRecord step(const ChainSpec& spec, G& g, Rng& rng) {
  TransitionRecord rec;
  const bool stay = rng.coin();
  rec.draws.push_back(stay ? 0 : 1);
  if (stay) return rec;
  rec.type = MoveType::Rejected;
  std::optional<Move> mv;
  const int n = g.order();
  switch (spec.kind) {
    case ChainKind::Switch:
    case ChainKind::RestrictedSwitch:
    case ChainKind::BipartiteSwitch: {
      const std::uint64_t m = g.size();
      if (m < 2) break;
      const std::uint64_t pair = rng.below(m * (m - 1) / 2);
      // unrank the unordered pair {a < b}
      std::uint64_t a = 0;
      std::uint64_t rest = pair;
      while (rest >= m - 1 - a) {
        rest -= m - 1 - a;
        ++a;
      }
      const std::uint64_t b = a + 1 + rest;
      const int matching = static_cast<int>(rng.below(3));
      rec.draws.insert(rec.draws.end(), {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), matching});
      mv = kernel::switch_proposal(g, g.edge_at(a), g.edge_at(b), matching);
      if (mv && !kernel::switch_fits(*mv, spec.instance, spec.kind)) mv.reset();
      break;
    }
    case ChainKind::JerrumSinclair:
    case ChainKind::BipartiteJS: {
      const std::vector<int> d = target_degrees(spec.instance);
      Vertex i = 0;
      Vertex j = 0;
      if (spec.kind == ChainKind::BipartiteJS) {
        const auto& b = std::get<BipartiteInstance>(spec.instance);
        const auto mr = b.r.size();
        const auto nc = b.c.size();
        const std::uint64_t draw = rng.below(2 * mr * nc);
        const std::uint64_t cell = draw % (mr * nc);
        Vertex v = static_cast<Vertex>(cell / nc);
        Vertex u = static_cast<Vertex>(mr + cell % nc);
        if (draw >= mr * nc) std::swap(u, v);
        i = v;
        j = u;
      } else {
        i = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        j = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
      }
      rec.draws.insert(rec.draws.end(), {i, j});
      const bool exact = kernel::degrees_exact(g, d);
      mv = kernel::js_proposal(g, d, exact, i, j, 0);
      if (mv && mv->type == MoveType::Type1) {
        const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.degree(j))));
        rec.draws.push_back(k);
        mv = kernel::js_proposal(g, d, exact, i, j, k);
      }
      break;
    }
    case ChainKind::HingeFlip: {
      const auto& inst = std::get<PamInstance>(spec.instance);
      const auto un = static_cast<std::uint64_t>(n);
      const Vertex i = static_cast<Vertex>(rng.below(un));
      const Vertex j = static_cast<Vertex>(rng.below(un));
      const Vertex k = static_cast<Vertex>(rng.below(un));
      rec.draws.insert(rec.draws.end(), {i, j, k});
      if (i != j && j != k && g.has_edge(i, j) && !g.has_edge(j, k))
        mv = kernel::hinge_proposal(g, inst, kernel::pam_summary(g, inst), i, j, k);
      break;
    }
  }
  if (mv) {
    apply(g, *mv);
    rec.type = mv->type;
    rec.removed = std::move(mv->removed);
    rec.added = std::move(mv->added);
    rec.accepted = true;
  }
  return rec;
}

TransitionRecord switch_step(LabeledGraph& g, const DegreeInstance& d, Rng& rng);
TransitionRecord js_step(LabeledGraph& g, const DegreeInstance& d, Rng& rng);
TransitionRecord hinge_flip_step(LabeledGraph& g, const PamInstance& inst, Rng& rng);
TransitionRecord restricted_switch_step(LabeledGraph& g, const PamInstance& inst, Rng& rng);

// Exact P(g, g2), laziness included.
Rational transition_probability(const ChainSpec& spec, const LabeledGraph& g, const LabeledGraph& g2);
// Distinct successor states with probabilities; the last entry is g itself.
std::vector<std::pair<LabeledGraph, Rational>> neighbors(const ChainSpec& spec, const LabeledGraph& g);

struct RunResult {
  LabeledGraph final_state;
  std::vector<TransitionRecord> trace;
  std::uint64_t accepted = 0;
};

// Seeded from spec.seed; records the trace only when asked.
RunResult run(const ChainSpec& spec, const LabeledGraph& g0, std::uint64_t steps, bool keep_trace = false);

}  // namespace degmc
