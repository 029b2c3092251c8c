#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace degmc {

using Vertex = std::int32_t;

// Endpoints kept sorted; lexicographic order on (u, v) is the edge order.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
  bool has(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
};

Edge make_edge(Vertex a, Vertex b);

class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(int n);
  LabeledGraph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  Vertex neighbor_at(Vertex v, int k) const { return adj_[v][k]; }
  Edge edge_at(std::size_t i) const { return edges_[i]; }

  void add_edge(Vertex a, Vertex b);
  void add_edge(Edge e) { add_edge(e.u, e.v); }
  void remove_edge(Vertex a, Vertex b);
  void remove_edge(Edge e) { remove_edge(e.u, e.v); }
  void toggle_edge(Edge e);

  std::vector<Edge> sorted_edges() const;
  std::vector<int> degrees() const;
  template <class F>
  void for_each_edge(F&& f) const {
    for (const Edge& e : edges_) f(e);
  }

  // Canonical byte string: sorted edge list, 4 bytes per endpoint.
  std::string encode() const;
  LabeledGraph complement() const;

  bool operator==(const LabeledGraph& other) const;

 private:
  std::uint64_t key(Vertex a, Vertex b) const {
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n_) +
           static_cast<std::uint64_t>(b);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::uint32_t> pos_;
  std::vector<std::vector<Vertex>> adj_;
};

// Compact graph on at most kSmallMax vertices; the edge set is a bitmask
// over vertex pairs in lexicographic order.
inline constexpr int kSmallMax = 11;

class SmallGraph {
 public:
  SmallGraph() = default;
  explicit SmallGraph(int n);
  static SmallGraph from_code(int n, std::uint64_t code);
  static SmallGraph from(const LabeledGraph& g);

  int order() const { return n_; }
  std::size_t size() const { return static_cast<std::size_t>(m_); }
  std::uint64_t code() const { return code_; }
  bool has_edge(Vertex a, Vertex b) const { return (adj_[a] >> b) & 1U; }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  int degree(Vertex v) const { return __builtin_popcount(adj_[v]); }
  std::uint32_t adjacency(Vertex v) const { return adj_[v]; }
  Vertex neighbor_at(Vertex v, int k) const;
  // k-th edge in lexicographic order.
  Edge edge_at(std::size_t k) const;

  void add_edge(Vertex a, Vertex b);
  void add_edge(Edge e) { add_edge(e.u, e.v); }
  void remove_edge(Vertex a, Vertex b);
  void remove_edge(Edge e) { remove_edge(e.u, e.v); }

  std::vector<Edge> sorted_edges() const;
  template <class F>
  void for_each_edge(F&& f) const {
    for (Vertex a = 0; a < n_; ++a) {
      std::uint32_t rest = adj_[a] >> (a + 1);
      while (rest) {
        const int off = __builtin_ctz(rest);
        f(Edge{a, a + 1 + off});
        rest &= rest - 1;
      }
    }
  }
  LabeledGraph to_labeled() const;

  static int pair_index(int n, Vertex a, Vertex b);

 private:
  int n_ = 0;
  int m_ = 0;
  std::uint64_t code_ = 0;
  std::array<std::uint32_t, kSmallMax> adj_{};
};

struct ColoredDifference {
  int n = 0;
  std::vector<Edge> blue;  // in G, not in G'
  std::vector<Edge> red;   // in G', not in G
  bool empty() const { return blue.empty() && red.empty(); }
};

ColoredDifference symmetric_difference(const LabeledGraph& g, const LabeledGraph& g2);

}  // namespace degmc
