#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "degmc/canonical.hpp"

namespace degmc {

Edge Pairing::partner(Vertex v, Edge e) const {
  const auto& rs = red[v];
  const auto& bs = blue[v];
  for (std::size_t i = 0; i < rs.size(); ++i)
    if (rs[i] == e) return bs[perm[v][i]];
  for (std::size_t i = 0; i < bs.size(); ++i)
    if (bs[i] == e) {
      const auto k = std::find(perm[v].begin(), perm[v].end(), static_cast<int>(i)) - perm[v].begin();
      return rs[k];
    }
  throw Error(ErrorKind::Input, "edge is not paired at this vertex");
}

Pairing first_pairing(const ColoredDifference& diff) {
  Pairing p;
  p.n = diff.n;
  p.red.resize(diff.n);
  p.blue.resize(diff.n);
  p.perm.resize(diff.n);
  for (const Edge& e : diff.red) {
    p.red[e.u].push_back(e);
    p.red[e.v].push_back(e);
  }
  for (const Edge& e : diff.blue) {
    p.blue[e.u].push_back(e);
    p.blue[e.v].push_back(e);
  }
  for (int v = 0; v < diff.n; ++v) {
    if (p.red[v].size() != p.blue[v].size())
      throw Error(ErrorKind::Unbalanced, "red and blue degrees differ at vertex " + std::to_string(v));
    std::sort(p.red[v].begin(), p.red[v].end());
    std::sort(p.blue[v].begin(), p.blue[v].end());
    p.perm[v].resize(p.red[v].size());
    std::iota(p.perm[v].begin(), p.perm[v].end(), 0);
  }
  return p;
}

bool next_pairing(Pairing& p) {
  for (auto& perm : p.perm)
    if (std::next_permutation(perm.begin(), perm.end())) return true;
  return false;
}

std::vector<Pairing> enumerate_pairings(const ColoredDifference& diff, std::size_t cap) {
  std::vector<Pairing> out;
  Pairing p = first_pairing(diff);
  do {
    if (out.size() >= cap) throw Error(ErrorKind::TooLarge, "too many pairings");
    out.push_back(p);
  } while (next_pairing(p));
  return out;
}

boost::multiprecision::cpp_int pairing_count(const ColoredDifference& diff) {
  const Pairing p = first_pairing(diff);
  boost::multiprecision::cpp_int total = 1;
  for (int v = 0; v < p.n; ++v)
    for (std::size_t k = 2; k <= p.theta(v); ++k) total *= k;
  return total;
}

Pairing sample_pairing(const ColoredDifference& diff, Rng& rng) {
  Pairing p = first_pairing(diff);
  for (auto& perm : p.perm)
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return p;
}

std::vector<std::vector<Edge>> circuit_edge_sets(const std::vector<Edge>& edges, const Pairing& psi) {
  std::set<Edge> unused(edges.begin(), edges.end());
  std::vector<std::vector<Edge>> out;
  while (!unused.empty()) {
    const Edge first = *unused.begin();
    std::vector<Edge> walk{first};
    unused.erase(first);
    Vertex cur = first.v;
    Edge e = first;
    for (;;) {
      const Edge next = psi.partner(cur, e);
      if (next == first) break;
      if (!unused.erase(next)) throw Error(ErrorKind::InvariantViolation, "pairing revisits an edge");
      walk.push_back(next);
      cur = next.other(cur);
      e = next;
    }
    if (cur != first.u) throw Error(ErrorKind::InvariantViolation, "pairing walk does not close");
    out.push_back(std::move(walk));
  }
  return out;
}

std::vector<Circuit> circuit_decomposition(const ColoredDifference& diff, const Pairing& psi) {
  std::vector<Edge> all = diff.blue;
  all.insert(all.end(), diff.red.begin(), diff.red.end());
  const std::set<Edge> blue(diff.blue.begin(), diff.blue.end());
  std::vector<Circuit> out;
  for (const auto& edges : circuit_edge_sets(all, psi)) {
    // Vertex sequence of the discovered walk.
    std::vector<Vertex> w;
    Vertex cur = edges.front().u;
    for (const Edge& e : edges) {
      w.push_back(cur);
      cur = e.other(cur);
    }
    const std::size_t L = w.size();
    std::size_t j = L;
    for (std::size_t i = 0; i < L; ++i)
      if (blue.count(edges[i]) && (j == L || edges[i] < edges[j])) j = i;
    if (j == L) throw Error(ErrorKind::InvariantViolation, "circuit without blue edge");
    Circuit c;
    c.walk.resize(L);
    if (w[j] == edges[j].u) {
      for (std::size_t i = 0; i < L; ++i) c.walk[i] = w[(j + i) % L];
    } else {
      for (std::size_t i = 0; i < L; ++i) c.walk[i] = w[(j + 1 + L - i) % L];
    }
    for (std::size_t i = 0; i < L; ++i)
      if (blue.count(c.edge(i)) != (i % 2 == 0 ? 1U : 0U))
        throw Error(ErrorKind::InvariantViolation, "circuit does not alternate");
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace degmc
