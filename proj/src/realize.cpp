#include "degmc/realize.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace degmc {

bool is_graphical_degree(std::span<const int> d) {
  std::vector<long> s(d.begin(), d.end());
  const long n = static_cast<long>(s.size());
  long total = 0;
  for (long x : s) {
    if (x < 0 || x > n - 1) return false;
    total += x;
  }
  if (total % 2 != 0) return false;
  std::sort(s.begin(), s.end(), std::greater<>());
  long lhs = 0;
  for (long k = 1; k <= n; ++k) {
    lhs += s[k - 1];
    long rhs = k * (k - 1);
    for (long i = k; i < n; ++i) rhs += std::min(s[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_graphical_bipartite(std::span<const int> r, std::span<const int> c) {
  for (int x : r)
    if (x < 0 || x > static_cast<int>(c.size())) return false;
  for (int x : c)
    if (x < 0 || x > static_cast<int>(r.size())) return false;
  if (std::accumulate(r.begin(), r.end(), 0L) != std::accumulate(c.begin(), c.end(), 0L)) return false;
  std::vector<long> a(r.begin(), r.end());
  std::sort(a.begin(), a.end(), std::greater<>());
  long lhs = 0;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    lhs += a[k - 1];
    long rhs = 0;
    for (int x : c) rhs += std::min<long>(x, static_cast<long>(k));
    if (lhs > rhs) return false;
  }
  return true;
}

bool is_graphical_bipartite(const BipartiteInstance& inst) { return is_graphical_bipartite(inst.r, inst.c); }

namespace {

// Havel-Hakimi on the listed vertices; false if it gets stuck.
bool havel_hakimi(LabeledGraph& g, const std::vector<Vertex>& verts, std::vector<int> need) {
  if (verts.empty()) return true;
  std::vector<std::size_t> idx(verts.size());
  while (true) {
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return need[a] > need[b]; });
    const std::size_t top = idx[0];
    if (need[top] == 0) return true;
    const int k = need[top];
    if (k > static_cast<int>(idx.size()) - 1) return false;
    need[top] = 0;
    for (int i = 1; i <= k; ++i) {
      const std::size_t w = idx[i];
      if (need[w] == 0) return false;
      --need[w];
      g.add_edge(verts[top], verts[w]);
    }
  }
}

// Greedy Gale-Ryser construction between vertex lists left and right.
bool bipartite_greedy(LabeledGraph& g, const std::vector<Vertex>& left, const std::vector<int>& ldeg,
                      const std::vector<Vertex>& right, std::vector<int> rdeg) {
  std::vector<std::size_t> lorder(left.size());
  std::iota(lorder.begin(), lorder.end(), 0);
  std::stable_sort(lorder.begin(), lorder.end(), [&](std::size_t a, std::size_t b) { return ldeg[a] > ldeg[b]; });
  std::vector<std::size_t> ridx(right.size());
  for (std::size_t li : lorder) {
    std::iota(ridx.begin(), ridx.end(), 0);
    std::stable_sort(ridx.begin(), ridx.end(), [&](std::size_t a, std::size_t b) { return rdeg[a] > rdeg[b]; });
    const int k = ldeg[li];
    if (k > static_cast<int>(ridx.size())) return false;
    for (int i = 0; i < k; ++i) {
      const std::size_t w = ridx[i];
      if (rdeg[w] == 0) return false;
      --rdeg[w];
      g.add_edge(left[li], right[w]);
    }
  }
  return std::all_of(rdeg.begin(), rdeg.end(), [](int x) { return x == 0; });
}

}  // namespace

LabeledGraph realize_degree(std::span<const int> d) {
  if (!is_graphical_degree(d)) throw Error(ErrorKind::NotGraphical, "degree sequence is not graphical");
  LabeledGraph g(static_cast<int>(d.size()));
  std::vector<Vertex> verts(d.size());
  std::iota(verts.begin(), verts.end(), 0);
  if (!havel_hakimi(g, verts, std::vector<int>(d.begin(), d.end())))
    throw Error(ErrorKind::InvariantViolation, "Havel-Hakimi failed on a graphical sequence");
  return g;
}

LabeledGraph realize_bipartite(const BipartiteInstance& inst) {
  if (!is_graphical_bipartite(inst)) throw Error(ErrorKind::NotGraphical, "bipartite degrees are not graphical");
  LabeledGraph g(inst.order());
  std::vector<Vertex> left(inst.r.size());
  std::iota(left.begin(), left.end(), 0);
  std::vector<Vertex> right(inst.c.size());
  std::iota(right.begin(), right.end(), static_cast<Vertex>(inst.r.size()));
  if (!bipartite_greedy(g, left, inst.r, right, inst.c))
    throw Error(ErrorKind::InvariantViolation, "Gale-Ryser construction failed on a graphical pair");
  return g;
}

namespace {

struct SplitSearch {
  const PamInstance& inst;
  std::vector<Vertex> cls_verts[2];
  std::vector<int> x;  // cut degree per vertex
  long budget = 2'000'000;

  explicit SplitSearch(const PamInstance& p) : inst(p), x(static_cast<std::size_t>(p.order()), 0) {
    for (Vertex v = 0; v < p.order(); ++v) cls_verts[p.cls(v)].push_back(v);
  }

  int own_size(Vertex v) const { return v < inst.n1 ? inst.n1 : inst.n2; }
  int other_size(Vertex v) const { return v < inst.n1 ? inst.n2 : inst.n1; }

  // Cut-degree candidates ordered by distance from the proportional share.
  std::vector<int> options(Vertex v, long class_sum) const {
    const int lo = std::max(0, inst.d[v] - (own_size(v) - 1));
    const int hi = std::min(inst.d[v], other_size(v));
    std::vector<int> out;
    for (int t = lo; t <= hi; ++t) out.push_back(t);
    const double share = class_sum > 0 ? static_cast<double>(inst.d[v]) * static_cast<double>(inst.c12) /
                                             static_cast<double>(class_sum)
                                       : 0.0;
    std::stable_sort(out.begin(), out.end(),
                     [share](int a, int b) { return std::abs(a - share) < std::abs(b - share); });
    return out;
  }

  bool internal_ok(int k) const {
    std::vector<int> rest;
    for (Vertex v : cls_verts[k]) rest.push_back(inst.d[v] - x[v]);
    return is_graphical_degree(rest);
  }

  bool cut_ok() const {
    std::vector<int> a;
    std::vector<int> b;
    for (Vertex v : cls_verts[0]) a.push_back(x[v]);
    for (Vertex v : cls_verts[1]) b.push_back(x[v]);
    return is_graphical_bipartite(a, b);
  }

  // Assign class k from position i, with remaining cut degree to distribute.
  bool dfs(int k, std::size_t i, long remaining, const std::vector<long>& max_suffix,
           const std::vector<long>& min_suffix, long class_sum) {
    if (--budget < 0) return false;
    const auto& verts = cls_verts[k];
    if (i == verts.size()) {
      if (remaining != 0 || !internal_ok(k)) return false;
      if (k == 0) return start_class(1);
      return cut_ok();
    }
    if (remaining > max_suffix[i] || remaining < min_suffix[i]) return false;
    const Vertex v = verts[i];
    for (int t : options(v, class_sum)) {
      if (t > remaining) continue;
      x[v] = t;
      if (dfs(k, i + 1, remaining - t, max_suffix, min_suffix, class_sum)) return true;
      if (budget < 0) return false;
    }
    return false;
  }

  bool start_class(int k) {
    const auto& verts = cls_verts[k];
    std::vector<long> max_suffix(verts.size() + 1, 0);
    std::vector<long> min_suffix(verts.size() + 1, 0);
    long class_sum = 0;
    for (std::size_t i = verts.size(); i-- > 0;) {
      const Vertex v = verts[i];
      max_suffix[i] = max_suffix[i + 1] + std::min(inst.d[v], other_size(v));
      min_suffix[i] = min_suffix[i + 1] + std::max(0, inst.d[v] - (own_size(v) - 1));
      class_sum += inst.d[v];
    }
    return dfs(k, 0, inst.c12, max_suffix, min_suffix, class_sum);
  }
};

}  // namespace

LabeledGraph realize_pam(const PamInstance& inst) {
  validate(inst);
  const long total = std::accumulate(inst.d.begin(), inst.d.end(), 0L);
  if (total % 2 != 0) throw Error(ErrorKind::NotRealizable, "stage parity: odd degree sum");
  SplitSearch search(inst);
  if (!search.start_class(0)) {
    if (search.budget < 0) throw Error(ErrorKind::NotRealizable, "stage split search: budget exhausted");
    throw Error(ErrorKind::NotRealizable, "stage split search exhausted: no split passes Erdos-Gallai and Gale-Ryser");
  }
  LabeledGraph g(inst.order());
  for (int k = 0; k < 2; ++k) {
    std::vector<int> rest;
    for (Vertex v : search.cls_verts[k]) rest.push_back(inst.d[v] - search.x[v]);
    if (!havel_hakimi(g, search.cls_verts[k], rest))
      throw Error(ErrorKind::InvariantViolation, "internal realization failed");
  }
  std::vector<int> a;
  std::vector<int> b;
  for (Vertex v : search.cls_verts[0]) a.push_back(search.x[v]);
  for (Vertex v : search.cls_verts[1]) b.push_back(search.x[v]);
  if (!bipartite_greedy(g, search.cls_verts[0], a, search.cls_verts[1], b))
    throw Error(ErrorKind::InvariantViolation, "cut realization failed");
  return g;
}

LabeledGraph realize(const Instance& inst) {
  return std::visit(
      [](const auto& x) -> LabeledGraph {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DegreeInstance>) {
          return realize_degree(x.d);
        } else if constexpr (std::is_same_v<T, BipartiteInstance>) {
          return realize_bipartite(x);
        } else {
          return realize_pam(x);
        }
      },
      inst);
}

}  // namespace degmc
