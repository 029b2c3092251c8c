#include "degmc/graph.hpp"

#include <algorithm>

#include "degmc/errors.hpp"

namespace degmc {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw Error(ErrorKind::Input, "self-loop");
  return a < b ? Edge{a, b} : Edge{b, a};
}

LabeledGraph::LabeledGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0) throw Error(ErrorKind::Input, "negative vertex count");
}

LabeledGraph::LabeledGraph(int n, std::span<const Edge> edges) : LabeledGraph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

bool LabeledGraph::has_edge(Vertex a, Vertex b) const {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  return pos_.count(key(a, b)) != 0;
}

void LabeledGraph::add_edge(Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw Error(ErrorKind::Input, "endpoint out of range");
  const Edge e = make_edge(a, b);
  const auto [it, inserted] = pos_.emplace(key(e.u, e.v), static_cast<std::uint32_t>(edges_.size()));
  if (!inserted) throw Error(ErrorKind::Input, "parallel edge");
  edges_.push_back(e);
  adj_[e.u].push_back(e.v);
  adj_[e.v].push_back(e.u);
}

static void erase_value(std::vector<Vertex>& xs, Vertex x) {
  auto it = std::find(xs.begin(), xs.end(), x);
  *it = xs.back();
  xs.pop_back();
}

void LabeledGraph::remove_edge(Vertex a, Vertex b) {
  const Edge e = make_edge(a, b);
  auto it = pos_.find(key(e.u, e.v));
  if (it == pos_.end()) throw Error(ErrorKind::Input, "missing edge");
  const std::uint32_t i = it->second;
  pos_.erase(it);
  if (i + 1 != edges_.size()) {
    edges_[i] = edges_.back();
    pos_[key(edges_[i].u, edges_[i].v)] = i;
  }
  edges_.pop_back();
  erase_value(adj_[e.u], e.v);
  erase_value(adj_[e.v], e.u);
}

void LabeledGraph::toggle_edge(Edge e) {
  if (has_edge(e)) {
    remove_edge(e);
  } else {
    add_edge(e);
  }
}

std::vector<Edge> LabeledGraph::sorted_edges() const {
  std::vector<Edge> out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LabeledGraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

std::string LabeledGraph::encode() const {
  std::string out;
  out.reserve(edges_.size() * 8);
  auto put = [&out](Vertex x) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((x >> s) & 0xff));
  };
  for (const Edge& e : sorted_edges()) {
    put(e.u);
    put(e.v);
  }
  return out;
}

LabeledGraph LabeledGraph::complement() const {
  LabeledGraph c(n_);
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = a + 1; b < n_; ++b)
      if (!has_edge(a, b)) c.add_edge(a, b);
  return c;
}

bool LabeledGraph::operator==(const LabeledGraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (const Edge& e : edges_)
    if (!other.has_edge(e)) return false;
  return true;
}

namespace {

struct PairTable {
  std::array<std::array<std::array<std::int8_t, kSmallMax>, kSmallMax>, kSmallMax + 1> idx{};
  PairTable() {
    for (int n = 0; n <= kSmallMax; ++n) {
      int k = 0;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          idx[n][a][b] = static_cast<std::int8_t>(k);
          idx[n][b][a] = static_cast<std::int8_t>(k);
          ++k;
        }
    }
  }
};

const PairTable& pair_table() {
  static const PairTable table;
  return table;
}

}  // namespace

int SmallGraph::pair_index(int n, Vertex a, Vertex b) { return pair_table().idx[n][a][b]; }

SmallGraph::SmallGraph(int n) : n_(n) {
  if (n < 0 || n > kSmallMax) throw Error(ErrorKind::TooLarge, "compact graphs hold at most 11 vertices");
}

SmallGraph SmallGraph::from_code(int n, std::uint64_t code) {
  SmallGraph g(n);
  int k = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b, ++k)
      if ((code >> k) & 1ULL) g.add_edge(a, b);
  return g;
}

SmallGraph SmallGraph::from(const LabeledGraph& g) {
  SmallGraph s(g.order());
  g.for_each_edge([&s](Edge e) { s.add_edge(e.u, e.v); });
  return s;
}

Vertex SmallGraph::neighbor_at(Vertex v, int k) const {
  std::uint32_t rest = adj_[v];
  for (int i = 0; i < k; ++i) rest &= rest - 1;
  return __builtin_ctz(rest);
}

Edge SmallGraph::edge_at(std::size_t k) const {
  for (Vertex a = 0; a < n_; ++a) {
    std::uint32_t rest = adj_[a] >> (a + 1);
    const auto row = static_cast<std::size_t>(__builtin_popcount(rest));
    if (k >= row) {
      k -= row;
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) rest &= rest - 1;
    return Edge{a, a + 1 + __builtin_ctz(rest)};
  }
  throw Error(ErrorKind::Input, "edge index out of range");
}

void SmallGraph::add_edge(Vertex a, Vertex b) {
  adj_[a] |= 1U << b;
  adj_[b] |= 1U << a;
  code_ |= 1ULL << pair_index(n_, a, b);
  ++m_;
}

void SmallGraph::remove_edge(Vertex a, Vertex b) {
  adj_[a] &= ~(1U << b);
  adj_[b] &= ~(1U << a);
  code_ &= ~(1ULL << pair_index(n_, a, b));
  --m_;
}

std::vector<Edge> SmallGraph::sorted_edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for_each_edge([&out](Edge e) { out.push_back(e); });
  return out;
}

LabeledGraph SmallGraph::to_labeled() const {
  const auto es = sorted_edges();
  return LabeledGraph(n_, es);
}

ColoredDifference symmetric_difference(const LabeledGraph& g, const LabeledGraph& g2) {
  if (g.order() != g2.order()) throw Error(ErrorKind::Input, "vertex counts differ");
  ColoredDifference diff;
  diff.n = g.order();
  for (const Edge& e : g.sorted_edges())
    if (!g2.has_edge(e)) diff.blue.push_back(e);
  for (const Edge& e : g2.sorted_edges())
    if (!g.has_edge(e)) diff.red.push_back(e);
  return diff;
}

}  // namespace degmc
