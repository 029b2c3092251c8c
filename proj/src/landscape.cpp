#include <algorithm>
#include <map>

#include "degmc/canonical.hpp"

namespace degmc {

SegmentDecomposition section_segment_decomposition(const std::vector<Circuit>& circuits, int n1) {
  auto cut = [n1](Edge e) { return (e.u < n1) != (e.v < n1); };
  SegmentDecomposition dec;
  for (std::size_t ci = 0; ci < circuits.size(); ++ci) {
    const Circuit& c = circuits[ci];
    const std::size_t L = c.length();
    std::size_t start = 0;
    for (std::size_t r = 2; r <= L; r += 2) {
      const bool before = cut(c.edge(r - 2));
      const bool after = cut(c.edge(r - 1));
      const int l = before && !after ? -1 : (!before && after ? 1 : 0);
      if (l == 0) continue;
      dec.sections.push_back({static_cast<int>(ci), start, r, l});
      start = r;
    }
    if (start < L) dec.sections.push_back({static_cast<int>(ci), start, L, 0});
  }
  Segment open;
  for (std::size_t k = 0; k < dec.sections.size(); ++k) {
    open.sections.push_back(static_cast<int>(k));
    if (dec.sections[k].l != 0) {
      open.l = dec.sections[k].l;
      dec.segments.push_back(std::move(open));
      open = Segment{};
    }
  }
  if (!open.sections.empty()) {
    if (dec.segments.empty()) {
      dec.segments.push_back(std::move(open));
    } else {
      auto& last = dec.segments.back().sections;
      last.insert(last.end(), open.sections.begin(), open.sections.end());
    }
  }
  return dec;
}

SegmentDecomposition section_segment_decomposition(const std::vector<Circuit>& circuits, const PamInstance& inst) {
  return section_segment_decomposition(circuits, inst.n1);
}

Landscape landscape_from_values(std::vector<int> P) {
  if (P.size() < 2 || P.front() != 0 || P.back() != 0)
    throw Error(ErrorKind::InvariantViolation, "landscape must start and end at zero");
  for (std::size_t i = 0; i + 1 < P.size(); ++i)
    if (std::abs(P[i + 1] - P[i]) != 1) throw Error(ErrorKind::InvariantViolation, "landscape step is not unit");
  Landscape out;
  out.P = std::move(P);
  const int B = static_cast<int>(out.P.size()) - 1;
  int a = 0;
  while (a < B) {
    int b = a + 1;
    while (out.P[b] != 0) ++b;
    Piece piece{a, b, a, out.P[a + 1] > 0};
    for (int i = a; i <= b; ++i) {
      const bool better = piece.mountain ? out.P[i] > out.P[piece.t] : out.P[i] < out.P[piece.t];
      if (better) piece.t = i;
    }
    out.pieces.push_back(piece);
    a = b;
  }
  return out;
}

Landscape landscape(const SegmentDecomposition& dec) {
  std::vector<int> P{0};
  for (const Segment& s : dec.segments) P.push_back(P.back() + s.l);
  if (dec.segments.size() == 1 && dec.segments[0].l == 0) {
    Landscape flat;
    flat.P = std::move(P);
    return flat;
  }
  return landscape_from_values(std::move(P));
}

std::vector<std::pair<int, int>> traverse(const std::vector<int>& P, const Piece& piece) {
  const int sign = piece.mountain ? 1 : -1;
  const int a = piece.a;
  const int b = piece.b;
  const int t = piece.t;
  const int h = sign * P[t];
  const int w = b - t + 1;
  auto id = [&](int i, int j) { return (i - a) * w + (j - t); };
  std::vector<int> parent(static_cast<std::size_t>((t - a + 1) * w), -1);
  std::vector<std::pair<int, int>> queue{{a, t}};
  parent[id(a, t)] = id(a, t);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const auto [i, j] = queue[q];
    if (i == t && j == b) break;
    for (int di : {-1, 1})
      for (int dj : {-1, 1}) {
        const int i2 = i + di;
        const int j2 = j + dj;
        if (i2 < a || i2 > t || j2 < t || j2 > b) continue;
        if (sign * P[i2] + sign * P[j2] != h) continue;
        if (parent[id(i2, j2)] >= 0) continue;
        parent[id(i2, j2)] = id(i, j);
        queue.emplace_back(i2, j2);
      }
  }
  if (parent[id(t, b)] < 0) throw Error(ErrorKind::InvariantViolation, "piece has no traversal");
  std::vector<std::pair<int, int>> out;
  for (int k = id(t, b);; k = parent[k]) {
    out.emplace_back(a + k / w, t + k % w);
    if (k == id(a, t)) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_traversal(const std::vector<int>& P, const Piece& piece, const std::vector<std::pair<int, int>>& tr) {
  if (tr.empty() || tr.front() != std::make_pair(piece.a, piece.t) || tr.back() != std::make_pair(piece.t, piece.b))
    return false;
  auto adjacent = [](std::pair<int, int> x, std::pair<int, int> y) {
    return std::abs(x.first - y.first) == 1 && std::abs(x.second - y.second) == 1;
  };
  for (std::size_t r = 0; r < tr.size(); ++r) {
    const auto [i, j] = tr[r];
    if (i < piece.a || i > piece.t || j < piece.t || j > piece.b) return false;
    if (P[i] + P[j] != P[piece.t]) return false;
    if (r + 1 < tr.size() && !adjacent(tr[r], tr[r + 1])) return false;
  }
  // Minimal: no repeated pair and no shortcut between non-consecutive entries.
  for (std::size_t p = 0; p < tr.size(); ++p)
    for (std::size_t q = p + 1; q < tr.size(); ++q) {
      if (tr[p] == tr[q]) return false;
      if (q >= p + 2 && adjacent(tr[p], tr[q])) return false;
    }
  return true;
}

}  // namespace degmc
