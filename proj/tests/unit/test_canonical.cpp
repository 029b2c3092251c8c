#include <map>

#include "common.hpp"
#include "degmc/canonical.hpp"

using namespace degmc;
using testutil::graph;

namespace {

std::set<Edge> edges_of(const std::vector<Edge>& v) { return {v.begin(), v.end()}; }

std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

// Product of theta_v! computed from the raw edge lists.
std::size_t pairing_oracle(const LabeledGraph& g, const LabeledGraph& g2) {
  const auto a = testutil::edge_set(g);
  const auto b = testutil::edge_set(g2);
  std::vector<std::size_t> theta(g.order(), 0);
  for (auto [u, v] : a)
    if (!b.count({u, v})) ++theta[u], ++theta[v];
  std::size_t out = 1;
  for (std::size_t t : theta) out *= factorial(t);
  return out;
}

// First `cap` pairings in odometer order.
std::vector<Pairing> some_pairings(const ColoredDifference& diff, std::size_t cap) {
  std::vector<Pairing> out{first_pairing(diff)};
  Pairing p = out.front();
  while (out.size() < cap && next_pairing(p)) out.push_back(p);
  return out;
}

bool sharing_vertex(Edge a, Edge b) { return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v; }

// Labels for the three circuits of the landscape figure; class A gets the low labels.
struct Figure {
  int n1 = 12;
  std::map<std::string, int> label;
  int operator()(const std::string& s) const { return label.at(s); }
};

Figure figure_labels() {
  Figure f;
  int a = 0, b = 12;
  for (const char* s : {"x0", "x6", "x8", "x13", "x14", "x15", "a1", "a2", "a3", "a4", "b1", "b2"}) f.label[s] = a++;
  for (const char* s : {"x1", "x2", "x3", "x4", "x5", "x7", "x9", "x10", "x11", "x12", "b3", "b4"}) f.label[s] = b++;
  return f;
}

Circuit x_circuit(const Figure& f) {
  Circuit c;
  for (int i = 0; i < 16; ++i) c.walk.push_back(f("x" + std::to_string(i)));
  return c;
}

LabeledGraph js_fig_g() { return graph(8, {{0, 1}, {0, 2}, {3, 4}, {5, 6}, {4, 7}}); }
LabeledGraph js_fig_g2() { return graph(8, {{1, 2}, {0, 3}, {4, 5}, {4, 6}, {0, 7}}); }

}  // namespace

TEST_CASE("pairing counts") {
  const auto c4 = symmetric_difference(graph(4, {{0, 1}, {2, 3}}), graph(4, {{0, 2}, {1, 3}}));
  CHECK(pairing_count(c4) == 1);
  CHECK(enumerate_pairings(c4).size() == 1);

  const LabeledGraph g = graph(5, {{0, 1}, {0, 3}, {2, 4}});
  const LabeledGraph g2 = graph(5, {{0, 2}, {0, 4}, {1, 3}});
  CHECK(pairing_count(symmetric_difference(g, g2)) == 2);

  CHECK(pairing_count(symmetric_difference(js_fig_g(), js_fig_g2())) == 4);

  const auto all = oracle::realizations({2, 2, 2, 2, 2, 2});
  for (std::size_t i = 0; i < all.size(); i += 5)
    for (std::size_t j = 0; j < all.size(); j += 7) {
      const LabeledGraph a = graph(6, all[i]);
      const LabeledGraph b = graph(6, all[j]);
      const auto diff = symmetric_difference(a, b);
      const std::size_t want = pairing_oracle(a, b);
      CHECK(pairing_count(diff) == want);
      const auto ps = enumerate_pairings(diff);
      CHECK(ps.size() == want);
      std::set<std::vector<std::vector<int>>> distinct;
      for (const Pairing& p : ps) distinct.insert(p.perm);
      CHECK(distinct.size() == want);
    }

  ColoredDifference lopsided;
  lopsided.n = 3;
  lopsided.blue = {{0, 1}};
  lopsided.red = {{0, 2}};
  CHECK(testutil::error_kind([&] { first_pairing(lopsided); }) == ErrorKind::Unbalanced);
}

TEST_CASE("circuits follow the pairing") {
  const auto all = oracle::realizations({2, 2, 2, 2, 2, 2});
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 1; j < all.size(); j += 13) {
      const auto diff = symmetric_difference(graph(6, all[i]), graph(6, all[j]));
      if (diff.empty()) continue;
      const std::set<Edge> blue = edges_of(diff.blue);
      const std::set<Edge> red = edges_of(diff.red);
      for (const Pairing& psi : enumerate_pairings(diff)) {
        std::multiset<Edge> used;
        for (const Circuit& c : circuit_decomposition(diff, psi)) {
          REQUIRE(c.length() % 2 == 0);
          for (std::size_t k = 0; k < c.length(); ++k) {
            used.insert(c.edge(k));
            CHECK((c.blue(k) ? blue : red).count(c.edge(k)) == 1);
            const Edge paired = psi.partner(c.at(k + 1), c.edge(k));
            CHECK(paired == c.edge(k + 1));
          }
        }
        std::multiset<Edge> expect(blue.begin(), blue.end());
        expect.insert(red.begin(), red.end());
        CHECK(used == expect);
      }
    }
}

TEST_CASE("two disjoint alternating cycles give two circuits") {
  const auto diff =
      symmetric_difference(graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}), graph(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}}));
  const auto cs = circuit_decomposition(diff, first_pairing(diff));
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].walk == std::vector<Vertex>{0, 1, 3, 2});
  CHECK(cs[1].walk == std::vector<Vertex>{4, 5, 7, 6});
  std::vector<Edge> all = diff.blue;
  all.insert(all.end(), diff.red.begin(), diff.red.end());
  CHECK(circuit_edge_sets(all, first_pairing(diff)).size() == 2);
}

TEST_CASE("JS canonical path of the worked circuit") {
  const LabeledGraph g = js_fig_g();
  const LabeledGraph g2 = js_fig_g2();
  const auto diff = symmetric_difference(g, g2);
  const std::vector<Vertex> walk{0, 1, 2, 0, 3, 4, 5, 6, 4, 7};
  std::optional<Pairing> chosen;
  for (const Pairing& p : enumerate_pairings(diff)) {
    const auto cs = circuit_decomposition(diff, p);
    if (cs.size() == 1 && cs[0].walk == walk) chosen = p;
  }
  REQUIRE(chosen);
  const CanonicalPath path = js_canonical_path(g, g2, *chosen);
  REQUIRE(path.steps.size() == 6);
  const std::vector<MoveType> types{MoveType::Type0, MoveType::Type1, MoveType::Type1,
                                    MoveType::Type1, MoveType::Type1, MoveType::Type2};
  const std::vector<std::vector<Edge>> removed{{{0, 1}}, {{0, 2}}, {{3, 4}}, {{5, 6}}, {{4, 7}}, {}};
  const std::vector<std::vector<Edge>> added{{}, {{1, 2}}, {{0, 3}}, {{4, 5}}, {{4, 6}}, {{0, 7}}};
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(path.steps[k].type == types[k]);
    CHECK(path.steps[k].removed == removed[k]);
    CHECK(path.steps[k].added == added[k]);
  }
  CHECK(path.states.front() == g);
  CHECK(path.states.back() == g2);

  const Instance inst{DegreeInstance{g.degrees()}};
  const Transition t1{path.states[1], path.states[2]};
  const LabeledGraph L = js_encoding(t1, g, g2, *chosen);
  CHECK_FALSE(L.has_edge(0, 1));
  CHECK(classify_membership(L, inst).within());
  const auto [r1, r2] = js_recover(t1, L, *chosen);
  CHECK(r1 == g);
  CHECK(r2 == g2);
}

TEST_CASE("JS canonical paths stay in the perturbed space and encodings invert") {
  for (const std::vector<int>& d : {std::vector<int>{2, 2, 2, 2, 2}, std::vector<int>{3, 2, 2, 2, 1},
                                    std::vector<int>{2, 2, 1, 1, 1, 1}, std::vector<int>{3, 3, 2, 2, 1, 1}}) {
    const Instance inst{DegreeInstance{d}};
    const auto all = oracle::realizations(d);
    const std::size_t stride = all.size() > 20 ? 3 : 1;
    for (std::size_t i = 0; i < all.size(); i += stride)
      for (std::size_t j = 0; j < all.size(); j += stride) {
        if (i == j) continue;
        const LabeledGraph g = graph(static_cast<int>(d.size()), all[i]);
        const LabeledGraph g2 = graph(static_cast<int>(d.size()), all[j]);
        for (const Pairing& psi : some_pairings(symmetric_difference(g, g2), 6)) {
          const CanonicalPath path = js_canonical_path(g, g2, psi);
          CHECK(path.states.back() == g2);
          for (std::size_t k = 0; k < path.steps.size(); ++k) {
            CHECK(classify_membership(path.states[k + 1], inst).within());
            const Transition t{path.states[k], path.states[k + 1]};
            const LabeledGraph L = js_encoding(t, g, g2, psi);
            CHECK(classify_membership(L, inst).within());
            const auto [r1, r2] = js_recover(t, L, psi);
            CHECK(r1 == g);
            CHECK(r2 == g2);
          }
        }
      }
  }
}

TEST_CASE("JS encoding rejects bad input") {
  const LabeledGraph g = js_fig_g();
  const LabeledGraph g2 = js_fig_g2();
  const Pairing psi = first_pairing(symmetric_difference(g, g2));
  CHECK(js_canonical_path(g, g, first_pairing(symmetric_difference(g, g))).steps.empty());
  const CanonicalPath path = js_canonical_path(g, g2, psi);
  const Transition t{path.states[0], path.states[1]};
  LabeledGraph L = js_encoding(t, g, g2, psi);
  L.toggle_edge(make_edge(5, 7));
  CHECK(testutil::error_kind([&] { js_recover(t, L, psi); }) == ErrorKind::NotAnEncoding);
  const Transition off{g, graph(8, {{0, 1}})};
  CHECK(testutil::error_kind([&] { js_encoding(off, g, g2, psi); }) == ErrorKind::TransitionNotOnPath);
}

TEST_CASE("sections of the sixteen-edge circuit") {
  const Figure f = figure_labels();
  const SegmentDecomposition dec = section_segment_decomposition({x_circuit(f)}, f.n1);
  REQUIRE(dec.sections.size() == 5);
  const std::vector<std::array<int, 3>> want{{0, 2, -1}, {2, 6, 1}, {6, 10, -1}, {10, 14, -1}, {14, 16, 0}};
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(dec.sections[k].from == static_cast<std::size_t>(want[k][0]));
    CHECK(dec.sections[k].to == static_cast<std::size_t>(want[k][1]));
    CHECK(dec.sections[k].l == want[k][2]);
  }
}

TEST_CASE("landscape of the three-circuit figure") {
  const Figure f = figure_labels();
  const Circuit a{{f("a1"), f("a2"), f("a3"), f("a4")}};
  const Circuit b{{f("b1"), f("b2"), f("b3"), f("b4")}};
  const SegmentDecomposition dec = section_segment_decomposition({a, x_circuit(f), b}, f.n1);
  std::vector<int> ls;
  for (const Segment& s : dec.segments) ls.push_back(s.l);
  CHECK(ls == std::vector<int>{-1, 1, -1, -1, 1, 1});
  const Landscape land = landscape(dec);
  CHECK(land.P == std::vector<int>{0, -1, 0, -1, -2, -1, 0});
  REQUIRE(land.pieces.size() == 2);
  CHECK_FALSE(land.pieces[0].mountain);
  CHECK(land.pieces[0].a == 0);
  CHECK(land.pieces[0].b == 2);
  CHECK_FALSE(land.pieces[1].mountain);
  CHECK(land.pieces[1].a == 2);
  CHECK(land.pieces[1].b == 6);
  CHECK(land.pieces[1].t == 4);
}

TEST_CASE("all-internal difference is one flat segment") {
  const Circuit c{{0, 1, 2, 3}};
  const SegmentDecomposition dec = section_segment_decomposition({c}, 4);
  REQUIRE(dec.segments.size() == 1);
  CHECK(dec.segments[0].l == 0);
  const Landscape land = landscape(dec);
  for (int p : land.P) CHECK(p == 0);
  CHECK(land.pieces.empty());
}

TEST_CASE("mountain traversal") {
  const std::vector<int> P{0, 1, 2, 3, 2, 3, 4, 3, 4, 3, 2, 1, 2, 1, 0};
  const Landscape land = landscape_from_values(P);
  REQUIRE(land.pieces.size() == 1);
  const Piece m = land.pieces[0];
  CHECK(m.mountain);
  CHECK(m.t == 6);
  const std::vector<std::pair<int, int>> worked{{0, 6}, {1, 7}, {0, 8}, {1, 9}, {2, 10},
                                                {3, 11}, {4, 12}, {5, 13}, {6, 14}};
  CHECK(is_traversal(P, m, worked));
  const auto tr = traverse(P, m);
  CHECK(is_traversal(P, m, tr));
  CHECK(tr.size() <= worked.size());

  const std::vector<int> peak{0, 1, 0};
  const Piece p = landscape_from_values(peak).pieces.at(0);
  CHECK(traverse(peak, p) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(testutil::error_kind([] { landscape_from_values({0, 2, 0}); }) == ErrorKind::InvariantViolation);
}

TEST_CASE("every landscape up to length 12 has a traversal") {
  for (int B = 2; B <= 12; B += 2)
    for (std::uint32_t steps = 0; steps < (1U << B); ++steps) {
      std::vector<int> P{0};
      for (int i = 0; i < B; ++i) P.push_back(P.back() + ((steps >> i & 1U) ? 1 : -1));
      if (P.back() != 0) continue;
      for (const Piece& piece : landscape_from_values(P).pieces) {
        const auto tr = traverse(P, piece);
        CHECK(is_traversal(P, piece, tr));
        CHECK(tr.size() <= static_cast<std::size_t>(piece.b - piece.a + 1));
      }
    }
}

TEST_CASE("hinge canonical paths on small two-class instances") {
  for (const PamInstance& p : {PamInstance{3, 3, 1, 4, 1, {2, 2, 2, 2, 2, 2}}, PamInstance{3, 3, 2, 2, 2, {3, 2, 1, 3, 2, 1}},
                               PamInstance{2, 3, 0, 4, 0, {2, 2, 2, 1, 1}}}) {
    const Instance inst{p};
    const StateSpace s = enumerate(inst, false);
    const std::size_t bound = static_cast<std::size_t>(p.order()) * p.order() * p.order() * p.order();
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (a == b) continue;
        const LabeledGraph g = s.graph(a);
        const LabeledGraph g2 = s.graph(b);
        for (const Pairing& psi : some_pairings(symmetric_difference(g, g2), 4)) {
          const CanonicalPath path = hinge_canonical_path(g, g2, psi, p);
          CHECK(path.states.back() == g2);
          for (std::size_t k = 0; k < path.steps.size(); ++k) {
            const PathStep& st = path.steps[k];
            REQUIRE(st.removed.size() == 1);
            REQUIRE(st.added.size() == 1);
            CHECK(sharing_vertex(st.removed[0], st.added[0]));
            CHECK(classify_membership(path.states[k + 1], inst).within());
            const Transition t{path.states[k], path.states[k + 1]};
            const std::size_t count = pam_recover_count(t, pam_encoding(t, g, g2, psi, p), psi, p);
            CHECK(count >= 1);
            CHECK(8 * count <= bound);
          }
        }
      }
  }
}

TEST_CASE("switch paths") {
  const LabeledGraph h = graph(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(switch_path(h, h).empty());
  const LabeledGraph h2 = graph(8, {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  CHECK(switch_path(h, h2).size() <= 4);
  CHECK(testutil::error_kind([&] { switch_path(h, graph(8, {{0, 1}})); }) == ErrorKind::Input);

  for (const std::vector<int>& d : {std::vector<int>{2, 2, 2, 2, 2, 2}, std::vector<int>{3, 3, 2, 2, 1, 1}}) {
    const auto all = oracle::realizations(d);
    for (std::size_t i = 0; i < all.size(); i += 4)
      for (std::size_t j = 0; j < all.size(); j += 3) {
        LabeledGraph g = graph(6, all[i]);
        const LabeledGraph g2 = graph(6, all[j]);
        const auto diff = symmetric_difference(g, g2);
        const auto moves = switch_path(g, g2);
        CHECK(2 * moves.size() <= diff.blue.size() + diff.red.size());
        for (const Move& m : moves) {
          REQUIRE(m.removed.size() == 2);
          apply(g, m);
          CHECK(g.degrees() == d);
        }
        CHECK(g == g2);
      }
  }
}

TEST_CASE("restricted switch distances") {
  const PamInstance p{3, 3, 1, 4, 1, {2, 2, 2, 2, 2, 2}};
  const StateSpace s = enumerate(Instance{p}, false);
  const DistanceCheck same = restricted_switch_distance_check(s.graph(0), s.graph(0), p);
  CHECK(same.distance == 0);
  CHECK(same.delta == 0);
  const AllPairsCheck all = restricted_switch_all_pairs(p);
  CHECK(all.states == s.size());
  CHECK(all.connected);
  CHECK(all.within_bound);
  CHECK(all.worst_ratio <= 1.5);
}

TEST_CASE("canonical flow congestion bounds the relaxation time") {
  for (const std::vector<int>& d : {std::vector<int>{1, 1, 1, 1}, std::vector<int>{2, 2, 1, 1}}) {
    const Instance inst{DegreeInstance{d}};
    const ChainSpec spec{ChainKind::JerrumSinclair, inst, 0};
    const StateSpace s = enumerate(inst, true);
    const CongestionResult r = flow_congestion(s, transition_lists(spec, s), js_canonical_flow(s, spec));
    const double lambda = spectral_gap(transition_matrix(spec, s)).lambda1;
    CHECK(1.0 / (1.0 - lambda) <= r.rho.convert_to<double>() * r.length + 1e-9);
  }
}
