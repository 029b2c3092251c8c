#include <algorithm>
#include <set>

#include "degmc/canonical.hpp"
#include "degmc/stability.hpp"

namespace degmc {

namespace {

struct Candidate {
  int gain = 0;
  Move move;
};

// Best switch that resolves a blue-red-blue stretch of the difference.
std::optional<Candidate> direct_switch(const LabeledGraph& cur, const LabeledGraph& target) {
  const int n = cur.order();
  std::optional<Candidate> best;
  auto blue = [&](Vertex x, Vertex y) { return cur.has_edge(x, y) && !target.has_edge(x, y); };
  auto red = [&](Vertex x, Vertex y) { return !cur.has_edge(x, y) && target.has_edge(x, y); };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b : cur.neighbors(a)) {
      if (!blue(a, b)) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (c == a || c == b || !red(b, c)) continue;
        for (Vertex e : cur.neighbors(c)) {
          if (e == a || e == b || !blue(c, e) || cur.has_edge(a, e)) continue;
          Candidate cand{red(a, e) ? 4 : 2, Move{MoveType::Switch, {make_edge(a, b), make_edge(c, e)},
                                                 {make_edge(b, c), make_edge(a, e)}}};
          std::sort(cand.move.removed.begin(), cand.move.removed.end());
          std::sort(cand.move.added.begin(), cand.move.added.end());
          const bool better = !best || cand.gain > best->gain ||
                              (cand.gain == best->gain && std::tie(cand.move.removed, cand.move.added) <
                                                              std::tie(best->move.removed, best->move.added));
          if (better) best = std::move(cand);
        }
      }
    }
  return best;
}

std::vector<Move> search_rest(const LabeledGraph& cur, const LabeledGraph& target) {
  if (cur.order() > kSmallMax) throw Error(ErrorKind::TooLarge, "switch search needs at most 11 vertices");
  const ChainSpec spec{ChainKind::Switch, DegreeInstance{cur.degrees()}, 0};
  const std::uint64_t goal = SmallGraph::from(target).code();
  auto neighbors = [&spec](const SmallGraph& g) {
    std::vector<SmallGraph> out;
    for (auto& [mv, p] : enumerate_moves(spec, g)) {
      SmallGraph h = g;
      apply(h, mv);
      out.push_back(h);
    }
    return out;
  };
  const auto path = bfs_to_target<SmallGraph, std::uint64_t>(
      SmallGraph::from(cur), neighbors, [goal](const SmallGraph& g) { return g.code() == goal; },
      [](const SmallGraph& g) { return g.code(); }, static_cast<int>(cur.size()) + 1);
  if (!path) throw Error(ErrorKind::InvariantViolation, "switch search found no path");
  std::vector<Move> moves;
  for (std::size_t k = 0; k + 1 < path->size(); ++k) {
    const ColoredDifference d = symmetric_difference((*path)[k].to_labeled(), (*path)[k + 1].to_labeled());
    moves.push_back(Move{MoveType::Switch, d.blue, d.red});
  }
  return moves;
}

}  // namespace

std::vector<Move> switch_path(const LabeledGraph& h, const LabeledGraph& h2, SwitchPathStats* stats) {
  if (h.order() != h2.order() || h.degrees() != h2.degrees())
    throw Error(ErrorKind::Input, "graphs have different degree sequences");
  SwitchPathStats local;
  SwitchPathStats& st = stats ? *stats : local;
  LabeledGraph cur = h;
  std::vector<Move> out;
  while (!(cur == h2)) {
    if (auto cand = direct_switch(cur, h2)) {
      apply(cur, cand->move);
      out.push_back(std::move(cand->move));
      ++st.direct;
      continue;
    }
    for (Move& mv : search_rest(cur, h2)) {
      apply(cur, mv);
      out.push_back(std::move(mv));
    }
    ++st.search;
  }
  return out;
}

DistanceCheck restricted_switch_distance_check(const LabeledGraph& h, const LabeledGraph& h2,
                                               const PamInstance& inst, const EnumerationLimits& limits) {
  const StateSpace s = enumerate(inst, false, limits);
  const auto from = s.find(h);
  const auto to = s.find(h2);
  if (!from || !to) throw Error(ErrorKind::Input, "graphs are not realizations of the instance");
  const auto adj = adjacency_lists(ChainSpec{ChainKind::RestrictedSwitch, inst, 0}, s);
  std::vector<int> dist(s.size(), -1);
  std::vector<int> queue{*from};
  dist[*from] = 0;
  for (std::size_t q = 0; q < queue.size() && dist[*to] < 0; ++q)
    for (int y : adj[queue[q]])
      if (dist[y] < 0) {
        dist[y] = dist[queue[q]] + 1;
        queue.push_back(y);
      }
  if (dist[*to] < 0) throw Error(ErrorKind::Disconnected, "restricted switch chain does not connect the pair");
  DistanceCheck out;
  out.distance = dist[*to];
  out.delta = static_cast<std::size_t>(__builtin_popcountll(s.codes[*from] ^ s.codes[*to]));
  out.within_bound = 2 * static_cast<std::size_t>(out.distance) <= 3 * out.delta;
  return out;
}

AllPairsCheck restricted_switch_all_pairs(const PamInstance& inst, const EnumerationLimits& limits) {
  const StateSpace s = enumerate(inst, false, limits);
  const auto adj = adjacency_lists(ChainSpec{ChainKind::RestrictedSwitch, inst, 0}, s);
  AllPairsCheck out;
  out.states = s.size();
  const int N = static_cast<int>(s.size());
  std::vector<int> dist(N);
  std::vector<int> queue;
  queue.reserve(N);
  for (int x = 0; x < N; ++x) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, x);
    dist[x] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int y : adj[queue[q]])
        if (dist[y] < 0) {
          dist[y] = dist[queue[q]] + 1;
          queue.push_back(y);
        }
    if (static_cast<int>(queue.size()) != N) out.connected = false;
    for (int y = 0; y < N; ++y) {
      if (y == x || dist[y] < 0) continue;
      const int delta = __builtin_popcountll(s.codes[x] ^ s.codes[y]);
      ++out.pairs;
      if (2 * dist[y] > 3 * delta) out.within_bound = false;
      out.worst_ratio = std::max(out.worst_ratio, static_cast<double>(dist[y]) / delta);
    }
  }
  return out;
}

}  // namespace degmc
