#pragma once

#include <cstdint>
#include <cstdlib>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "degmc/errors.hpp"
#include "degmc/graph.hpp"

namespace degmc {

struct DegreeInstance {
  std::vector<int> d;
  int order() const { return static_cast<int>(d.size()); }
};

// Side V (degrees r) occupies vertices [0, |r|), side U (degrees c) follows.
struct BipartiteInstance {
  std::vector<int> r;
  std::vector<int> c;
  int order() const { return static_cast<int>(r.size() + c.size()); }
  int side(Vertex v) const { return v < static_cast<Vertex>(r.size()) ? 0 : 1; }
  std::vector<int> degrees() const;
};

// Two-class instance; class V1 is [0, n1), V2 is [n1, n1 + n2).
struct PamInstance {
  int n1 = 0;
  int n2 = 0;
  std::int64_t c11 = 0;
  std::int64_t c12 = 0;
  std::int64_t c22 = 0;
  std::vector<int> d;

  int order() const { return n1 + n2; }
  int cls(Vertex v) const { return v < n1 ? 0 : 1; }
  bool is_cut(Edge e) const { return cls(e.u) != cls(e.v); }
  bool jdm() const;
};

using Instance = std::variant<DegreeInstance, BipartiteInstance, PamInstance>;

void validate(const DegreeInstance& inst);
void validate(const BipartiteInstance& inst);
void validate(const PamInstance& inst);
void validate(const Instance& inst);

int order(const Instance& inst);
std::vector<int> target_degrees(const Instance& inst);

enum class Membership { Exact, PerturbedWithin, Outside };

struct Perturbation {
  std::vector<int> alpha;  // d_v - d'_v
  std::int64_t cut_delta = 0;  // c12 - c12'
};

struct Classification {
  Membership tag = Membership::Outside;
  Perturbation perturbation;
  bool within() const { return tag != Membership::Outside; }
};

struct EdgeClassCounts {
  std::int64_t c11 = 0;
  std::int64_t c12 = 0;
  std::int64_t c22 = 0;
  auto operator<=>(const EdgeClassCounts&) const = default;
};

template <class G>
EdgeClassCounts cut_internal_counts(const G& g, const PamInstance& inst) {
  EdgeClassCounts out;
  g.for_each_edge([&](Edge e) {
    const int a = inst.cls(e.u);
    const int b = inst.cls(e.v);
    if (a != b) {
      ++out.c12;
    } else if (a == 0) {
      ++out.c11;
    } else {
      ++out.c22;
    }
  });
  return out;
}

namespace detail {

template <class G>
Perturbation perturbation_of(const G& g, const std::vector<int>& d) {
  Perturbation p;
  p.alpha.resize(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) p.alpha[v] = d[v] - g.degree(static_cast<Vertex>(v));
  return p;
}

template <class G>
Classification classify_degree(const G& g, const DegreeInstance& inst) {
  Classification c;
  c.perturbation = perturbation_of(g, inst.d);
  int sum = 0;
  bool nonneg = true;
  for (int a : c.perturbation.alpha) {
    sum += a;
    nonneg = nonneg && a >= 0;
  }
  if (!nonneg) return c;
  if (sum == 0) c.tag = Membership::Exact;
  else if (sum == 2) c.tag = Membership::PerturbedWithin;
  return c;
}

template <class G>
Classification classify_bipartite(const G& g, const BipartiteInstance& inst) {
  Classification c;
  c.perturbation = perturbation_of(g, inst.degrees());
  bool crossing = true;
  g.for_each_edge([&](Edge e) { crossing = crossing && inst.side(e.u) != inst.side(e.v); });
  if (!crossing) return c;
  int deficit[2] = {0, 0};
  for (std::size_t v = 0; v < c.perturbation.alpha.size(); ++v) {
    const int a = c.perturbation.alpha[v];
    if (a < 0 || a > 1) return c;
    deficit[inst.side(static_cast<Vertex>(v))] += a;
  }
  if (deficit[0] == 0 && deficit[1] == 0) c.tag = Membership::Exact;
  else if (deficit[0] == 1 && deficit[1] == 1) c.tag = Membership::PerturbedWithin;
  return c;
}

template <class G>
Classification classify_pam(const G& g, const PamInstance& inst) {
  Classification c;
  c.perturbation = perturbation_of(g, inst.d);
  const EdgeClassCounts counts = cut_internal_counts(g, inst);
  c.perturbation.cut_delta = inst.c12 - counts.c12;
  int sum = 0;
  int abs_sum = 0;
  for (int a : c.perturbation.alpha) {
    sum += a;
    abs_sum += std::abs(a);
  }
  if (sum != 0 || abs_sum > 4 || std::abs(c.perturbation.cut_delta) > 1) return c;
  c.tag = (abs_sum == 0 && c.perturbation.cut_delta == 0) ? Membership::Exact
                                                          : Membership::PerturbedWithin;
  return c;
}

}  // namespace detail

template <class G>
Classification classify_membership(const G& g, const Instance& inst) {
  if (g.order() != order(inst)) return {};
  return std::visit(
      [&g](const auto& x) -> Classification {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DegreeInstance>) {
          return detail::classify_degree(g, x);
        } else if constexpr (std::is_same_v<T, BipartiteInstance>) {
          return detail::classify_bipartite(g, x);
        } else {
          return detail::classify_pam(g, x);
        }
      },
      inst);
}

// JSON instance files and "n m" edge-list graph files.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::string& path);
std::string instance_to_json(const Instance& inst);
std::uint64_t instance_hash(const Instance& inst);

LabeledGraph read_graph(std::istream& in);
LabeledGraph load_graph(const std::string& path);
void write_graph(std::ostream& out, const LabeledGraph& g);
void save_graph(const std::string& path, const LabeledGraph& g);

}  // namespace degmc
