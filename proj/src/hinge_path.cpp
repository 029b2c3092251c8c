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

class HingeBuilder {
 public:
  HingeBuilder(CanonicalPath& path, const SegmentDecomposition& dec, LabeledGraph cur)
      : path_(path), dec_(dec), cur_(std::move(cur)) {}

  // Segments are numbered from 1.
  void unwind(int segment) {
    for (int k : dec_.segments.at(segment - 1).sections) unwind_section(dec_.sections[k]);
  }

  void rewind(int segment) {
    const auto& ks = dec_.segments.at(segment - 1).sections;
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) rewind_section(dec_.sections[*it]);
  }

  const LabeledGraph& current() const { return cur_; }

 private:
  void flip(const Circuit& c, int circuit, std::size_t out, std::size_t in) {
    PathStep step{MoveType::Hinge, {c.edge(out)}, {c.edge(in)}, circuit};
    cur_.remove_edge(step.removed[0]);
    cur_.add_edge(step.added[0]);
    path_.steps.push_back(std::move(step));
    path_.states.push_back(cur_);
  }

  void unwind_section(const Section& s) {
    const Circuit& c = path_.circuits[s.circuit];
    for (std::size_t r = s.from + 2; r <= s.to; r += 2) flip(c, s.circuit, r - 2, r - 1);
  }

  void rewind_section(const Section& s) {
    const Circuit& c = path_.circuits[s.circuit];
    for (std::size_t r = s.to; r >= s.from + 2; r -= 2) flip(c, s.circuit, r - 1, r - 2);
  }

  CanonicalPath& path_;
  const SegmentDecomposition& dec_;
  LabeledGraph cur_;
};

std::size_t find_transition(const CanonicalPath& path, const Transition& t) {
  for (std::size_t s = 0; s < path.steps.size(); ++s)
    if (path.states[s] == t.from && path.states[s + 1] == t.to) return s;
  throw Error(ErrorKind::TransitionNotOnPath, "transition is not on the canonical path");
}

// Same pair structure as psi, with colours taken from `blue`.
Pairing recolor(const Pairing& psi, const std::set<Edge>& blue) {
  Pairing out;
  out.n = psi.n;
  out.red.resize(psi.n);
  out.blue.resize(psi.n);
  out.perm.resize(psi.n);
  for (Vertex v = 0; v < psi.n; ++v) {
    std::vector<std::pair<Edge, Edge>> pairs;  // (red, blue) under the new colours
    for (std::size_t i = 0; i < psi.red[v].size(); ++i) {
      const Edge e = psi.red[v][i];
      const Edge f = psi.blue[v][psi.perm[v][i]];
      const bool eb = blue.count(e) != 0;
      if (eb == (blue.count(f) != 0)) throw Error(ErrorKind::NotAnEncoding, "paired edges share a colour");
      pairs.emplace_back(eb ? f : e, eb ? e : f);
    }
    for (const auto& [r, b] : pairs) {
      out.red[v].push_back(r);
      out.blue[v].push_back(b);
    }
    std::sort(out.red[v].begin(), out.red[v].end());
    std::sort(out.blue[v].begin(), out.blue[v].end());
    out.perm[v].resize(pairs.size());
    for (const auto& [r, b] : pairs) {
      const auto ri = std::lower_bound(out.red[v].begin(), out.red[v].end(), r) - out.red[v].begin();
      const auto bi = std::lower_bound(out.blue[v].begin(), out.blue[v].end(), b) - out.blue[v].begin();
      out.perm[v][ri] = static_cast<int>(bi);
    }
  }
  return out;
}

}  // namespace

CanonicalPath hinge_canonical_path(const LabeledGraph& g, const LabeledGraph& g2, const Pairing& psi,
                                   const PamInstance& inst) {
  if (g.degrees() != g2.degrees()) throw Error(ErrorKind::Input, "graphs have different degree sequences");
  if (cut_internal_counts(g, inst) != cut_internal_counts(g2, inst))
    throw Error(ErrorKind::Input, "graphs have different class edge counts");
  CanonicalPath path;
  path.circuits = circuit_decomposition(symmetric_difference(g, g2), psi);
  path.states.push_back(g);
  const SegmentDecomposition dec = section_segment_decomposition(path.circuits, inst);
  HingeBuilder b(path, dec, g);
  if (!dec.segments.empty()) {
    const Landscape land = landscape(dec);
    if (land.pieces.empty()) {
      for (std::size_t k = 1; k <= dec.segments.size(); ++k) b.unwind(static_cast<int>(k));
    }
    for (const Piece& piece : land.pieces) {
      const auto tr = traverse(land.P, piece);
      for (std::size_t c = 0; c + 1 < tr.size(); ++c) {
        const auto [r, s] = tr[c];
        const auto [r2, s2] = tr[c + 1];
        if (r2 > r) b.unwind(r2);
        else b.rewind(r);
        if (s2 > s) b.unwind(s2);
        else b.rewind(s);
      }
    }
  }
  if (!(b.current() == g2)) throw Error(ErrorKind::InvariantViolation, "hinge path does not reach the target");
  return path;
}

LabeledGraph pam_encoding(const Transition& t, const LabeledGraph& g, const LabeledGraph& g2, const Pairing& psi,
                          const PamInstance& inst) {
  const CanonicalPath path = hinge_canonical_path(g, g2, psi, inst);
  find_transition(path, t);
  const ColoredDifference diff = symmetric_difference(g, g2);
  LabeledGraph L = t.from;
  for (const Edge& e : diff.blue) L.toggle_edge(e);
  for (const Edge& e : diff.red) L.toggle_edge(e);
  return L;
}

std::size_t pam_recover_count(const Transition& t, const LabeledGraph& L, const Pairing& psi,
                              const PamInstance& inst) {
  const int n = L.order();
  if (t.from.order() != n || psi.n != n) throw Error(ErrorKind::NotAnEncoding, "vertex counts disagree");
  const std::set<Edge> z = edge_set(t.from);
  std::set<Edge> h;
  {
    const std::set<Edge> l = edge_set(L);
    std::set_symmetric_difference(l.begin(), l.end(), z.begin(), z.end(), std::inserter(h, h.end()));
  }
  if (h.empty()) throw Error(ErrorKind::NotAnEncoding, "empty difference");
  std::set<Edge> paired;
  for (Vertex v = 0; v < n; ++v) {
    paired.insert(psi.red[v].begin(), psi.red[v].end());
    paired.insert(psi.blue[v].begin(), psi.blue[v].end());
  }
  if (paired != h) throw Error(ErrorKind::NotAnEncoding, "pairing does not cover the recovered difference");
  const auto circuits = circuit_edge_sets(std::vector<Edge>(h.begin(), h.end()), psi);
  if (circuits.size() > 24) throw Error(ErrorKind::TooLarge, "too many circuits to enumerate colourings");
  std::set<Edge> common;
  std::set_difference(z.begin(), z.end(), h.begin(), h.end(), std::inserter(common, common.end()));
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << circuits.size()); ++mask) {
    std::set<Edge> blue;
    for (std::size_t c = 0; c < circuits.size(); ++c)
      for (std::size_t i = 0; i < circuits[c].size(); ++i)
        if ((i % 2 == 0) != ((mask >> c) & 1U)) blue.insert(circuits[c][i]);
    LabeledGraph g(n);
    LabeledGraph g2(n);
    for (const Edge& e : common) {
      g.add_edge(e);
      g2.add_edge(e);
    }
    for (const Edge& e : h) (blue.count(e) ? g : g2).add_edge(e);
    if (classify_membership(g, inst).tag != Membership::Exact) continue;
    if (classify_membership(g2, inst).tag != Membership::Exact) continue;
    const Pairing psi2 = recolor(psi, blue);
    try {
      if (pam_encoding(t, g, g2, psi2, inst) == L) ++count;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::TransitionNotOnPath) throw;
    }
  }
  return count;
}

}  // namespace degmc
