#include <algorithm>

#include "degmc/chains.hpp"
#include "degmc/stability.hpp"

namespace degmc {

bool hinge_legal(const LabeledGraph& g, const PamInstance& inst, const HingeMove& mv) {
  const int n = g.order();
  if (n != inst.order()) return false;
  for (Vertex x : {mv.i, mv.j, mv.k})
    if (x < 0 || x >= n) return false;
  if (!classify_membership(g, inst).within()) return false;
  return kernel::hinge_proposal(g, inst, kernel::pam_summary(g, inst), mv.i, mv.j, mv.k).has_value();
}

void apply_hinge(LabeledGraph& g, const HingeMove& mv) {
  g.remove_edge(mv.i, mv.j);
  g.add_edge(mv.j, mv.k);
}

namespace {

constexpr int kStepCap = 32;

class Repairer {
 public:
  Repairer(const LabeledGraph& g, const PamInstance& inst) : g_(g), inst_(inst), n_(g.order()) {}

  // Next batch of moves according to the case analysis, or empty when exact.
  std::vector<HingeMove> next() {
    const EdgeClassCounts c = cut_internal_counts(g_, inst_);
    if (c.c12 == inst_.c12 + 1) return case1(c);
    if (c.c12 == inst_.c12 - 1) return case2();
    if (c.c11 != inst_.c11) return case3(c);
    return cancellation();
  }

 private:
  int alpha(Vertex v) const { return inst_.d[v] - g_.degree(v); }
  bool excess(Vertex v) const { return alpha(v) < 0; }
  bool deficit(Vertex v) const { return alpha(v) > 0; }
  Vertex lo(int cls) const { return cls == 0 ? 0 : inst_.n1; }
  Vertex hi(int cls) const { return cls == 0 ? inst_.n1 : n_; }

  template <class P>
  std::optional<Vertex> first_in(int cls, P&& pred) const {
    for (Vertex v = lo(cls); v < hi(cls); ++v)
      if (pred(v)) return v;
    return std::nullopt;
  }

  // Smallest z adjacent to w, not adjacent to v, z != v.
  std::optional<Vertex> private_neighbor(Vertex w, Vertex v) const {
    std::optional<Vertex> best;
    for (Vertex z : g_.neighbors(w))
      if (z != v && !g_.has_edge(z, v) && (!best || z < *best)) best = z;
    return best;
  }

  std::vector<HingeMove> cancel_in(Vertex v, Vertex w) const {
    const auto z = private_neighbor(w, v);
    if (!z) throw Error(ErrorKind::InvariantViolation, "no cancellation neighbour");
    return {{w, *z, v}};
  }

  std::vector<HingeMove> cancellation() const {
    for (int cls = 0; cls < 2; ++cls) {
      const auto w = first_in(cls, [this](Vertex x) { return excess(x); });
      if (!w) continue;
      const auto v = first_in(cls, [this](Vertex x) { return deficit(x); });
      if (!v) throw Error(ErrorKind::InvariantViolation, "surplus without a matching deficit");
      return cancel_in(*v, *w);
    }
    throw Error(ErrorKind::InvariantViolation, "balanced state is not exact yet has no surplus");
  }

  std::vector<HingeMove> case1(const EdgeClassCounts& c) const {
    const int a_cls = c.c11 == inst_.c11 - 1 ? 0 : 1;
    const int b_cls = 1 - a_cls;
    // Direct fix: a surplus vertex of B adjacent to one end of a non-edge inside A.
    for (Vertex v2 = lo(b_cls); v2 < hi(b_cls); ++v2) {
      if (!excess(v2)) continue;
      for (Vertex a = lo(a_cls); a < hi(a_cls); ++a)
        for (Vertex b = a + 1; b < hi(a_cls); ++b) {
          if (g_.has_edge(a, b)) continue;
          if (g_.has_edge(v2, a)) return {{v2, a, b}};
          if (g_.has_edge(v2, b)) return {{v2, b, a}};
        }
    }
    std::optional<std::pair<Vertex, Vertex>> nonedge;
    std::optional<std::pair<Vertex, Vertex>> both_deficit;
    for (Vertex a = lo(a_cls); a < hi(a_cls) && !nonedge; ++a)
      for (Vertex b = a + 1; b < hi(a_cls); ++b) {
        if (g_.has_edge(a, b)) continue;
        if (!deficit(a)) {
          nonedge = {a, b};
          break;
        }
        if (!deficit(b)) {
          nonedge = {b, a};
          break;
        }
        if (!both_deficit) both_deficit = {a, b};
      }
    if (!nonedge) {
      if (!both_deficit) throw Error(ErrorKind::InvariantViolation, "class has no internal non-edge");
      const auto w = first_in(a_cls, [this](Vertex x) { return excess(x); });
      if (!w) throw Error(ErrorKind::InvariantViolation, "no surplus to cancel a deficit");
      return cancel_in(both_deficit->first, *w);
    }
    const auto [a, b] = *nonedge;
    // Case A: a surplus vertex of B with a neighbour in A.
    for (Vertex v2 = lo(b_cls); v2 < hi(b_cls); ++v2) {
      if (!excess(v2)) continue;
      for (Vertex v1 = lo(a_cls); v1 < hi(a_cls); ++v1) {
        if (!g_.has_edge(v2, v1)) continue;
        if (excess(v1)) {
          const auto v = first_in(a_cls, [this](Vertex x) { return deficit(x); });
          if (!v) throw Error(ErrorKind::InvariantViolation, "no deficit to absorb a surplus");
          return cancel_in(*v, v1);
        }
        const auto p = private_neighbor(a, v1);
        if (!p) throw Error(ErrorKind::InvariantViolation, "no alternating neighbour");
        return {{v2, v1, *p}, {*p, a, b}};
      }
    }
    // Case B: shift a surplus onto the B end of a cut edge.
    const auto v2 = first_in(b_cls, [this](Vertex x) { return excess(x); });
    if (!v2) throw Error(ErrorKind::InvariantViolation, "no surplus in the gaining class");
    for (Vertex q = lo(b_cls); q < hi(b_cls); ++q)
      for (Vertex r = lo(a_cls); r < hi(a_cls); ++r) {
        if (!g_.has_edge(q, r)) continue;
        const auto u = private_neighbor(*v2, q);
        if (!u) throw Error(ErrorKind::InvariantViolation, "no neighbour to shift");
        return {{*v2, *u, q}};
      }
    throw Error(ErrorKind::InvariantViolation, "no cut edge");
  }

  std::vector<HingeMove> case2() const {
    PamInstance comp = inst_;
    const std::int64_t n1 = inst_.n1;
    const std::int64_t n2 = inst_.n2;
    comp.c12 = n1 * n2 - inst_.c12;
    comp.c11 = n1 * (n1 - 1) / 2 - inst_.c11;
    comp.c22 = n2 * (n2 - 1) / 2 - inst_.c22;
    for (int& x : comp.d) x = n_ - 1 - x;
    const LabeledGraph h = g_.complement();
    Repairer sub(h, comp);
    const EdgeClassCounts c = cut_internal_counts(h, comp);
    std::vector<HingeMove> out;
    for (const HingeMove& mv : sub.case1(c)) out.push_back({mv.k, mv.j, mv.i});
    return out;
  }

  std::vector<HingeMove> case3(const EdgeClassCounts& c) const {
    const int a_cls = c.c11 == inst_.c11 + 1 ? 0 : 1;
    const int b_cls = 1 - a_cls;
    std::optional<std::pair<Vertex, Vertex>> edge;
    std::optional<std::pair<Vertex, Vertex>> any;
    for (Vertex x = lo(a_cls); x < hi(a_cls) && !edge; ++x)
      for (Vertex y = x + 1; y < hi(a_cls); ++y) {
        if (!g_.has_edge(x, y)) continue;
        if (!any) any = {x, y};
        if (excess(x)) {
          edge = {x, y};
          break;
        }
        if (excess(y)) {
          edge = {y, x};
          break;
        }
      }
    if (!edge) {
      if (!any) throw Error(ErrorKind::InvariantViolation, "class has no internal edge");
      const Vertex a = any->first;
      const auto u = first_in(a_cls, [this](Vertex x) { return excess(x); });
      if (!u) throw Error(ErrorKind::InvariantViolation, "no surplus in the heavier class");
      const auto z = private_neighbor(*u, a);
      if (!z) throw Error(ErrorKind::InvariantViolation, "no neighbour to shift");
      return {{*u, *z, a}};
    }
    const auto [a, b] = *edge;
    for (Vertex v2 = lo(b_cls); v2 < hi(b_cls); ++v2)
      if (!g_.has_edge(b, v2)) return {{a, b, v2}};
    for (Vertex p = lo(a_cls); p < hi(a_cls); ++p)
      for (Vertex q = lo(b_cls); q < hi(b_cls); ++q) {
        if (g_.has_edge(p, q)) continue;
        const auto r = first_in(a_cls, [&](Vertex x) { return g_.has_edge(p, x); });
        if (!r) throw Error(ErrorKind::InvariantViolation, "no internal neighbour");
        if (excess(*r)) return {{*r, p, q}};
        const auto w = private_neighbor(a, *r);
        if (!w) throw Error(ErrorKind::InvariantViolation, "no alternating neighbour");
        return {{a, *w, *r}, {*r, p, q}};
      }
    throw Error(ErrorKind::InvariantViolation, "no cross non-edge");
  }

  const LabeledGraph& g_;
  const PamInstance& inst_;
  int n_;
};

}  // namespace

std::vector<HingeMove> jdm_repair(const LabeledGraph& g, const PamInstance& inst) {
  validate(inst);
  if (!inst.jdm()) throw Error(ErrorKind::PreconditionViolated, "classes are not regular");
  const int n = inst.order();
  for (int x : inst.d)
    if (x < 1 || x > n - 1) throw Error(ErrorKind::PreconditionViolated, "class degree out of range");
  if (!classify_membership(g, inst).within())
    throw Error(ErrorKind::PreconditionViolated, "graph is outside the perturbed space");
  LabeledGraph cur = g;
  std::vector<HingeMove> out;
  while (classify_membership(cur, inst).tag != Membership::Exact) {
    if (static_cast<int>(out.size()) > kStepCap) throw Error(ErrorKind::InvariantViolation, "repair does not terminate");
    for (const HingeMove& mv : Repairer(cur, inst).next()) {
      if (!hinge_legal(cur, inst, mv)) throw Error(ErrorKind::InvariantViolation, "repair emitted an illegal flip");
      apply_hinge(cur, mv);
      out.push_back(mv);
    }
  }
  return out;
}

}  // namespace degmc
