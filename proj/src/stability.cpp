#include "degmc/stability.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degmc/chains.hpp"

namespace degmc {

using i128 = __int128;

namespace {

struct Extremes {
  i128 lo = 0;
  i128 hi = 0;
  i128 sum = 0;
};

Extremes extremes(std::span<const int> d) {
  Extremes e;
  if (d.empty()) return e;
  const auto [lo, hi] = std::minmax_element(d.begin(), d.end());
  e.lo = *lo;
  e.hi = *hi;
  for (int x : d) e.sum += x;
  return e;
}

}  // namespace

bool check_stable1(std::span<const int> d) {
  const Extremes e = extremes(d);
  const i128 n = static_cast<i128>(d.size());
  const i128 a = e.sum - n * e.lo;  // 2m - n delta
  const i128 b = n * e.hi - e.sum;  // n Delta - 2m
  return a * b <= (e.hi - e.lo) * (a * (n - e.hi - 1) + b * e.lo);
}

bool check_stable2(std::span<const int> d) {
  const Extremes e = extremes(d);
  const i128 n = static_cast<i128>(d.size());
  const i128 s = e.hi - e.lo + 1;
  return s * s <= 4 * e.lo * (n - e.hi - 1);
}

bool check_bipartite_stable(const BipartiteInstance& inst) {
  const Extremes r = extremes(inst.r);
  const Extremes c = extremes(inst.c);
  const i128 m = static_cast<i128>(inst.r.size());
  const i128 n = static_cast<i128>(inst.c.size());
  const i128 x = r.hi - c.lo;
  const i128 y = c.hi - r.lo;
  return x * x <= 4 * c.lo * (n - r.hi) && y * y <= 4 * r.lo * (m - c.hi);
}

bool check_bipartite_same(const BipartiteInstance& inst) {
  const Extremes r = extremes(inst.r);
  const i128 m = static_cast<i128>(inst.r.size());
  const i128 x = r.hi - r.lo;
  return x * x <= 4 * r.lo * (m - r.hi);
}

bool check_bipartite_emms(const BipartiteInstance& inst) {
  const Extremes r = extremes(inst.r);
  const Extremes c = extremes(inst.c);
  const i128 m = static_cast<i128>(inst.r.size());
  const i128 n = static_cast<i128>(inst.c.size());
  const i128 lhs = (c.hi - c.lo - 1) * (r.hi - r.lo - 1);
  return lhs < 1 + std::max(c.lo * (n - r.hi), r.lo * (m - c.hi));
}

bool almost_half_regular(const BipartiteInstance& inst) {
  const Extremes r = extremes(inst.r);
  const Extremes c = extremes(inst.c);
  return r.hi <= r.lo + 1 || c.hi <= c.lo + 1;
}

int max_distance_to_exact(const StateSpace& s, const std::vector<std::vector<int>>& adj) {
  std::vector<int> dist(s.size(), -1);
  std::vector<int> queue;
  queue.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.exact[i]) {
      dist[i] = 0;
      queue.push_back(static_cast<int>(i));
    }
  // Chain moves are reversible, so a multi-source search from the exact set suffices.
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (int y : adj[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  if (queue.size() != s.size()) throw Error(ErrorKind::Disconnected, "some state cannot reach the exact set");
  return s.size() == 0 ? 0 : *std::max_element(dist.begin(), dist.end());
}

static int k_for(const ChainSpec& spec, const EnumerationLimits& limits) {
  const StateSpace s = enumerate(spec.instance, true, limits);
  if (s.exact_count() == 0) throw Error(ErrorKind::NotRealizable, "instance has no exact realization");
  return max_distance_to_exact(s, adjacency_lists(spec, s));
}

int k_js(const DegreeInstance& inst, const EnumerationLimits& limits) {
  return k_for(ChainSpec{ChainKind::JerrumSinclair, inst, 0}, limits);
}

int k_js(const BipartiteInstance& inst, const EnumerationLimits& limits) {
  return k_for(ChainSpec{ChainKind::BipartiteJS, inst, 0}, limits);
}

int k_pam(const PamInstance& inst, const EnumerationLimits& limits) {
  return k_for(ChainSpec{ChainKind::HingeFlip, inst, 0}, limits);
}

SpaceRatio p_stability_ratio(const Instance& inst, const EnumerationLimits& limits) {
  const StateSpace s = enumerate(inst, true, limits);
  SpaceRatio r;
  r.perturbed = s.size();
  r.exact = s.exact_count();
  if (r.exact == 0) throw Error(ErrorKind::NotRealizable, "instance has no exact realization");
  return r;
}

boost::multiprecision::cpp_int ratio_bound(int n, int k) {
  return boost::multiprecision::pow(boost::multiprecision::cpp_int(n), static_cast<unsigned>(3 * k));
}

StabilityReport stability_report(const Instance& inst, bool exact_k, const EnumerationLimits& limits) {
  validate(inst);
  StabilityReport rep;
  const std::vector<int> d = target_degrees(inst);
  if (!d.empty()) {
    rep.delta = *std::min_element(d.begin(), d.end());
    rep.Delta = *std::max_element(d.begin(), d.end());
  }
  rep.m = std::accumulate(d.begin(), d.end(), std::int64_t{0}) / 2;
  std::visit(
      [&rep](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DegreeInstance>) {
          rep.verdicts.emplace_back("stable1", check_stable1(x.d));
          rep.verdicts.emplace_back("stable2", check_stable2(x.d));
        } else if constexpr (std::is_same_v<T, BipartiteInstance>) {
          rep.verdicts.emplace_back("bipartite_stable", check_bipartite_stable(x));
          rep.verdicts.emplace_back("bipartite_same", check_bipartite_same(x));
          rep.verdicts.emplace_back("bipartite_emms", check_bipartite_emms(x));
          rep.verdicts.emplace_back("almost_half_regular", almost_half_regular(x));
        } else {
          rep.verdicts.emplace_back("jdm", x.jdm());
        }
      },
      inst);
  if (exact_k) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, PamInstance>) {
            rep.k_exact = k_pam(x, limits);
          } else {
            rep.k_exact = k_js(x, limits);
          }
        },
        inst);
    rep.ratio = p_stability_ratio(inst, limits);
  }
  return rep;
}

std::optional<std::vector<HingeMove>> bounded_repair(const LabeledGraph& g, const PamInstance& inst, int depth) {
  validate(inst);
  if (!classify_membership(g, inst).within())
    throw Error(ErrorKind::PreconditionViolated, "graph is outside the perturbed space");
  const ChainSpec spec{ChainKind::HingeFlip, inst, 0};
  auto neighbors = [&spec](const LabeledGraph& s) {
    std::vector<LabeledGraph> out;
    for (auto& [mv, p] : enumerate_moves(spec, s)) {
      LabeledGraph t = s;
      apply(t, mv);
      out.push_back(std::move(t));
    }
    return out;
  };
  auto is_target = [&inst](const LabeledGraph& s) { return classify_membership(s, inst).tag == Membership::Exact; };
  auto key_of = [](const LabeledGraph& s) { return s.encode(); };
  const auto path = bfs_to_target<LabeledGraph, std::string>(g, neighbors, is_target, key_of, depth);
  if (!path) return std::nullopt;
  std::vector<HingeMove> moves;
  for (std::size_t t = 0; t + 1 < path->size(); ++t) {
    const ColoredDifference diff = symmetric_difference((*path)[t], (*path)[t + 1]);
    const Edge out = diff.blue.at(0);
    const Edge in = diff.red.at(0);
    const Vertex j = out.has(in.u) ? in.u : in.v;
    moves.push_back({out.other(j), j, in.other(j)});
  }
  return moves;
}

}  // namespace degmc
