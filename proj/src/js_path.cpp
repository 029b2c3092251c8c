#include <algorithm>
#include <map>
#include <set>

#include "degmc/canonical.hpp"

namespace degmc {

namespace {

std::set<Edge> edge_set(const LabeledGraph& g) {
  std::set<Edge> s;
  g.for_each_edge([&s](Edge e) { s.insert(e); });
  return s;
}

std::set<Edge> difference_edges(const ColoredDifference& diff) {
  std::set<Edge> h(diff.blue.begin(), diff.blue.end());
  h.insert(diff.red.begin(), diff.red.end());
  return h;
}

LabeledGraph from_set(int n, const std::set<Edge>& s) {
  const std::vector<Edge> v(s.begin(), s.end());
  return LabeledGraph(n, v);
}

std::set<Edge> sym_diff(const std::set<Edge>& a, const std::set<Edge>& b) {
  std::set<Edge> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

void push_step(CanonicalPath& path, LabeledGraph& cur, PathStep step) {
  for (const Edge& e : step.removed) cur.remove_edge(e);
  for (const Edge& e : step.added) cur.add_edge(e);
  path.steps.push_back(std::move(step));
  path.states.push_back(cur);
}

std::size_t find_transition(const CanonicalPath& path, const Transition& t) {
  for (std::size_t s = 0; s < path.steps.size(); ++s)
    if (path.states[s] == t.from && path.states[s + 1] == t.to) return s;
  throw Error(ErrorKind::TransitionNotOnPath, "transition is not on the canonical path");
}

}  // namespace

CanonicalPath js_canonical_path(const LabeledGraph& g, const LabeledGraph& g2, const Pairing& psi) {
  if (g.degrees() != g2.degrees()) throw Error(ErrorKind::Input, "graphs have different degree sequences");
  const ColoredDifference diff = symmetric_difference(g, g2);
  CanonicalPath path;
  path.circuits = circuit_decomposition(diff, psi);
  path.states.push_back(g);
  const std::vector<int> d = g.degrees();
  LabeledGraph cur = g;
  for (std::size_t ci = 0; ci < path.circuits.size(); ++ci) {
    const Circuit& c = path.circuits[ci];
    const std::size_t L = c.length();
    std::size_t k = 0;
    while (k < L) {
      const int circuit = static_cast<int>(ci);
      if (kernel::degrees_exact(cur, d)) {
        if (!c.blue(k)) throw Error(ErrorKind::InvariantViolation, "exact state at a red edge");
        push_step(path, cur, {MoveType::Type0, {c.edge(k)}, {}, circuit});
        ++k;
        continue;
      }
      if (c.blue(k)) throw Error(ErrorKind::InvariantViolation, "perturbed state at a blue edge");
      const Vertex j = c.at(k + 1);
      if (cur.degree(j) + 1 > d[j]) {
        if (k + 1 >= L) throw Error(ErrorKind::InvariantViolation, "circuit ends inside a Type 1 move");
        push_step(path, cur, {MoveType::Type1, {c.edge(k + 1)}, {c.edge(k)}, circuit});
        k += 2;
      } else {
        push_step(path, cur, {MoveType::Type2, {}, {c.edge(k)}, circuit});
        ++k;
      }
    }
  }
  if (!(cur == g2)) throw Error(ErrorKind::InvariantViolation, "canonical path does not reach the target");
  return path;
}

LabeledGraph js_encoding(const Transition& t, const LabeledGraph& g, const LabeledGraph& g2, const Pairing& psi) {
  const CanonicalPath path = js_canonical_path(g, g2, psi);
  const std::size_t s = find_transition(path, t);
  const std::set<Edge> h = difference_edges(symmetric_difference(g, g2));
  std::set<Edge> zz = edge_set(t.from);
  const std::set<Edge> z2 = edge_set(t.to);
  zz.insert(z2.begin(), z2.end());
  std::set<Edge> l = sym_diff(h, zz);
  if (path.steps[s].type == MoveType::Type1) {
    const Edge e = path.circuits[path.steps[s].circuit].edge(0);
    if (!l.erase(e)) throw Error(ErrorKind::InvariantViolation, "first blue edge missing from the encoding");
  }
  return from_set(g.order(), l);
}

std::pair<LabeledGraph, LabeledGraph> js_recover(const Transition& t, const LabeledGraph& L, const Pairing& psi) {
  const int n = L.order();
  if (t.from.order() != n || t.to.order() != n || psi.n != n)
    throw Error(ErrorKind::NotAnEncoding, "vertex counts disagree");
  const std::set<Edge> z = edge_set(t.from);
  const std::set<Edge> z2 = edge_set(t.to);
  std::vector<Edge> removed;
  std::vector<Edge> added;
  std::set_difference(z.begin(), z.end(), z2.begin(), z2.end(), std::back_inserter(removed));
  std::set_difference(z2.begin(), z2.end(), z.begin(), z.end(), std::back_inserter(added));
  MoveType type;
  if (removed.size() == 1 && added.empty()) {
    type = MoveType::Type0;
  } else if (removed.empty() && added.size() == 1) {
    type = MoveType::Type2;
  } else if (removed.size() == 1 && added.size() == 1) {
    type = MoveType::Type1;
  } else {
    throw Error(ErrorKind::NotAnEncoding, "transition is not a JS move");
  }
  std::set<Edge> zz = z;
  zz.insert(z2.begin(), z2.end());
  std::set<Edge> h = sym_diff(edge_set(L), zz);
  std::vector<int> deg(n, 0);
  for (const Edge& e : h) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] % 2) odd.push_back(v);
  if (type == MoveType::Type1) {
    if (odd.size() != 2) throw Error(ErrorKind::NotAnEncoding, "expected two odd vertices");
    if (!h.insert(make_edge(odd[0], odd[1])).second) throw Error(ErrorKind::NotAnEncoding, "missing edge already present");
  } else if (!odd.empty()) {
    throw Error(ErrorKind::NotAnEncoding, "difference has odd vertices");
  }
  if (h.empty()) throw Error(ErrorKind::NotAnEncoding, "empty difference");
  std::set<Edge> paired;
  for (Vertex v = 0; v < n; ++v) {
    paired.insert(psi.red[v].begin(), psi.red[v].end());
    paired.insert(psi.blue[v].begin(), psi.blue[v].end());
  }
  if (paired != h) throw Error(ErrorKind::NotAnEncoding, "pairing does not cover the recovered difference");

  const auto circuits = circuit_edge_sets(std::vector<Edge>(h.begin(), h.end()), psi);
  const Edge marker = type == MoveType::Type2 ? added[0] : removed[0];
  const bool marker_blue = type != MoveType::Type2;
  std::size_t current = circuits.size();
  for (std::size_t c = 0; c < circuits.size() && current == circuits.size(); ++c)
    if (std::find(circuits[c].begin(), circuits[c].end(), marker) != circuits[c].end()) current = c;
  if (current == circuits.size()) throw Error(ErrorKind::NotAnEncoding, "transition edge is outside the difference");

  std::set<Edge> blue;
  for (std::size_t c = 0; c < circuits.size(); ++c) {
    const auto& es = circuits[c];
    if (c == current) {
      const auto pos = static_cast<std::size_t>(std::find(es.begin(), es.end(), marker) - es.begin());
      for (std::size_t i = 0; i < es.size(); ++i)
        if (((i % 2) == (pos % 2)) == marker_blue) blue.insert(es[i]);
    } else {
      for (const Edge& e : es)
        if ((c < current) != (z.count(e) != 0)) blue.insert(e);
    }
  }
  std::set<Edge> common;
  std::set_difference(z.begin(), z.end(), h.begin(), h.end(), std::inserter(common, common.end()));
  std::set<Edge> gs = common;
  std::set<Edge> g2s = common;
  for (const Edge& e : h) (blue.count(e) ? gs : g2s).insert(e);
  LabeledGraph g = from_set(n, gs);
  LabeledGraph g2 = from_set(n, g2s);
  if (g.degrees() != g2.degrees()) throw Error(ErrorKind::NotAnEncoding, "recovered graphs differ in degrees");
  for (Vertex v = 0; v < n; ++v)
    for (const Edge& e : psi.blue[v])
      if (!blue.count(e)) throw Error(ErrorKind::NotAnEncoding, "pairing colours disagree with the recovery");
  try {
    if (!(js_encoding(t, g, g2, psi) == L)) throw Error(ErrorKind::NotAnEncoding, "re-encoding differs");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAnEncoding) throw;
    throw Error(ErrorKind::NotAnEncoding, e.what());
  }
  return {std::move(g), std::move(g2)};
}

namespace {

std::vector<int> loop_erase(const std::vector<int>& walk) {
  std::vector<int> out;
  std::map<int, std::size_t> pos;
  for (int x : walk) {
    auto it = pos.find(x);
    if (it != pos.end()) {
      for (std::size_t k = it->second + 1; k < out.size(); ++k) pos.erase(out[k]);
      out.resize(it->second + 1);
    } else {
      pos[x] = out.size();
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

FlowAssignment js_canonical_flow(const StateSpace& s, const ChainSpec& spec) {
  if (spec.kind != ChainKind::JerrumSinclair && spec.kind != ChainKind::BipartiteJS)
    throw Error(ErrorKind::Input, "canonical flow needs a JS chain");
  const auto adj = adjacency_lists(spec, s);
  const int N = static_cast<int>(s.size());
  // Fixed shortest route from every state to a nearest exact state.
  std::vector<std::vector<int>> to_exact(N);
  for (int x = 0; x < N; ++x) {
    std::vector<int> parent(N, -1);
    std::vector<int> queue{x};
    parent[x] = x;
    int hit = s.exact[x] ? x : -1;
    for (std::size_t h = 0; h < queue.size() && hit < 0; ++h)
      for (int y : adj[queue[h]])
        if (parent[y] < 0) {
          parent[y] = queue[h];
          if (s.exact[y]) {
            hit = y;
            break;
          }
          queue.push_back(y);
        }
    if (hit < 0) throw Error(ErrorKind::Disconnected, "state cannot reach the exact set");
    std::vector<int> back{hit};
    while (back.back() != x) back.push_back(parent[back.back()]);
    to_exact[x].assign(back.rbegin(), back.rend());
  }
  std::map<std::pair<int, int>, std::vector<std::pair<std::vector<int>, BigRational>>> base;
  auto base_paths = [&](int a, int b) -> const std::vector<std::pair<std::vector<int>, BigRational>>& {
    auto it = base.find({a, b});
    if (it != base.end()) return it->second;
    std::vector<std::pair<std::vector<int>, BigRational>> out;
    if (a == b) {
      out.emplace_back(std::vector<int>{a}, BigRational(1));
    } else {
      const LabeledGraph ga = s.graph(a);
      const LabeledGraph gb = s.graph(b);
      const auto pairings = enumerate_pairings(symmetric_difference(ga, gb));
      const BigRational w(1, static_cast<long>(pairings.size()));
      for (const Pairing& psi : pairings) {
        const CanonicalPath cp = js_canonical_path(ga, gb, psi);
        std::vector<int> idx;
        for (const LabeledGraph& st : cp.states) {
          const auto i = s.find(st);
          if (!i) throw Error(ErrorKind::InvariantViolation, "canonical path leaves the state space");
          idx.push_back(*i);
        }
        out.emplace_back(std::move(idx), w);
      }
    }
    return base.emplace(std::make_pair(a, b), std::move(out)).first->second;
  };
  const BigRational pi2(1, static_cast<long>(N) * N);
  FlowAssignment f;
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      if (x == y) continue;
      const int a = to_exact[x].back();
      const int b = to_exact[y].back();
      for (const auto& [mid, w] : base_paths(a, b)) {
        std::vector<int> walk = to_exact[x];
        walk.insert(walk.end(), mid.begin() + 1, mid.end());
        walk.insert(walk.end(), to_exact[y].rbegin() + 1, to_exact[y].rend());
        f.paths.push_back({loop_erase(walk), pi2 * w});
      }
    }
  return f;
}

}  // namespace degmc
