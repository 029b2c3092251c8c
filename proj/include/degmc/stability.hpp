#pragma once

#include <deque>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "degmc/graph.hpp"
#include "degmc/instance.hpp"
#include "degmc/statespace.hpp"

namespace degmc {

// Exact integer evaluation of the stability inequalities.
bool check_stable1(std::span<const int> d);
bool check_stable2(std::span<const int> d);
bool check_bipartite_stable(const BipartiteInstance& inst);
bool check_bipartite_same(const BipartiteInstance& inst);
bool check_bipartite_emms(const BipartiteInstance& inst);
bool almost_half_regular(const BipartiteInstance& inst);

// Largest BFS distance from a state to the exact subset; throws Disconnected
// when some state cannot reach it.
int max_distance_to_exact(const StateSpace& s, const std::vector<std::vector<int>>& adj);

int k_js(const DegreeInstance& inst, const EnumerationLimits& limits = {});
int k_js(const BipartiteInstance& inst, const EnumerationLimits& limits = {});
int k_pam(const PamInstance& inst, const EnumerationLimits& limits = {});

struct SpaceRatio {
  std::size_t perturbed = 0;
  std::size_t exact = 0;
  boost::rational<std::int64_t> value() const {
    return {static_cast<std::int64_t>(perturbed), static_cast<std::int64_t>(exact)};
  }
};
SpaceRatio p_stability_ratio(const Instance& inst, const EnumerationLimits& limits = {});
// n^{3k} as an exact integer.
boost::multiprecision::cpp_int ratio_bound(int n, int k);

struct StabilityReport {
  int delta = 0;
  int Delta = 0;
  std::int64_t m = 0;
  std::vector<std::pair<std::string, bool>> verdicts;
  std::optional<int> k_exact;
  std::optional<SpaceRatio> ratio;
};
StabilityReport stability_report(const Instance& inst, bool exact_k, const EnumerationLimits& limits = {});

// Hinge flip (i, j, k): remove {i, j}, add {j, k}.
struct HingeMove {
  Vertex i = 0;
  Vertex j = 0;
  Vertex k = 0;
  auto operator<=>(const HingeMove&) const = default;
};

bool hinge_legal(const LabeledGraph& g, const PamInstance& inst, const HingeMove& mv);
void apply_hinge(LabeledGraph& g, const HingeMove& mv);

// Constructive repair for two regular classes; every emitted move is a legal
// hinge flip and the end state is exact.
std::vector<HingeMove> jdm_repair(const LabeledGraph& g, const PamInstance& inst);

// Breadth-first search over an implicit graph for the nearest target state.
template <class State, class Key, class Neighbors, class IsTarget, class KeyOf>
std::optional<std::vector<State>> bfs_to_target(const State& start, Neighbors&& neighbors, IsTarget&& is_target,
                                                KeyOf&& key_of, int depth) {
  std::unordered_map<Key, std::pair<Key, State>> parent;
  std::deque<std::pair<State, int>> queue;
  const Key k0 = key_of(start);
  parent.emplace(k0, std::make_pair(k0, start));
  queue.emplace_back(start, 0);
  while (!queue.empty()) {
    auto [s, dist] = queue.front();
    queue.pop_front();
    if (is_target(s)) {
      std::vector<State> path{s};
      Key k = key_of(s);
      while (!(k == k0)) {
        const auto& link = parent.at(k);
        path.push_back(link.second);
        k = link.first;
      }
      return std::vector<State>(path.rbegin(), path.rend());
    }
    if (dist == depth) continue;
    for (State& t : neighbors(s)) {
      const Key kt = key_of(t);
      if (parent.count(kt)) continue;
      parent.emplace(kt, std::make_pair(key_of(s), s));
      queue.emplace_back(std::move(t), dist + 1);
    }
  }
  return std::nullopt;
}

// Shortest hinge-flip repair up to `depth` moves; nullopt when none exists.
std::optional<std::vector<HingeMove>> bounded_repair(const LabeledGraph& g, const PamInstance& inst, int depth);

}  // namespace degmc
