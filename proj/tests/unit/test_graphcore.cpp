#include <sstream>

#include "common.hpp"
#include "degmc/errors.hpp"
#include "degmc/realize.hpp"
#include "degmc/rng.hpp"

using namespace degmc;
using testutil::graph;

TEST_CASE("edges are normalised") {
  CHECK(make_edge(3, 1) == Edge{1, 3});
  CHECK(make_edge(1, 3).other(1) == 3);
  CHECK_THROWS_AS(make_edge(2, 2), Error);
}

TEST_CASE("labeled graph basic operations") {
  LabeledGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.size() == 2);
  CHECK(g.has_edge(1, 2));
  CHECK(g.degrees() == std::vector<int>{1, 2, 1, 0});
  CHECK_THROWS_AS(g.add_edge(1, 0), Error);
  g.toggle_edge(make_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 1));
  g.toggle_edge(make_edge(0, 3));
  CHECK(g.sorted_edges() == std::vector<Edge>{{0, 3}, {1, 2}});
  CHECK_THROWS_AS(g.remove_edge(0, 2), Error);
  CHECK(g.complement().size() == 4);
}

TEST_CASE("small graph codes round trip") {
  for (std::uint64_t code = 0; code < (1U << 10); code += 7) {
    const SmallGraph s = SmallGraph::from_code(5, code);
    CHECK(SmallGraph::from(s.to_labeled()).code() == code);
    CHECK(testutil::edge_set(s.to_labeled()) == oracle::from_mask(5, code));
  }
}

TEST_CASE("canonical encoding ignores insertion order") {
  const LabeledGraph a = graph(5, {{0, 1}, {3, 4}, {1, 2}});
  const LabeledGraph b = graph(5, {{2, 1}, {4, 3}, {1, 0}});
  CHECK(a == b);
  CHECK(a.encode() == b.encode());
  CHECK(a.encode() != graph(5, {{0, 1}}).encode());
}

TEST_CASE("symmetric difference") {
  const LabeledGraph g = graph(4, {{0, 1}, {2, 3}});
  CHECK(symmetric_difference(g, g).empty());
  const ColoredDifference d = symmetric_difference(g, graph(4, {{0, 2}, {1, 3}}));
  CHECK(d.blue == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(d.red == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK(testutil::error_kind([] { symmetric_difference(LabeledGraph(3), LabeledGraph(4)); }) == ErrorKind::Input);
}

TEST_CASE("symmetric difference of random 2-regular graphs agrees with set algebra") {
  const auto all = oracle::realizations({2, 2, 2, 2, 2, 2});
  REQUIRE(all.size() == 70);
  for (std::size_t i = 0; i < all.size(); i += 9)
    for (std::size_t j = 1; j < all.size(); j += 11) {
      const ColoredDifference d = symmetric_difference(graph(6, all[i]), graph(6, all[j]));
      oracle::EdgeSet blue, red;
      std::set_difference(all[i].begin(), all[i].end(), all[j].begin(), all[j].end(), std::inserter(blue, blue.end()));
      std::set_difference(all[j].begin(), all[j].end(), all[i].begin(), all[i].end(), std::inserter(red, red.end()));
      oracle::EdgeSet b2, r2;
      for (const Edge& e : d.blue) b2.emplace(e.u, e.v);
      for (const Edge& e : d.red) r2.emplace(e.u, e.v);
      CHECK(b2 == blue);
      CHECK(r2 == red);
    }
}

TEST_CASE("membership classification") {
  const Instance two{DegreeInstance{{1, 1}}};
  CHECK(classify_membership(graph(2, {{0, 1}}), two).tag == Membership::Exact);
  CHECK(classify_membership(LabeledGraph(2), two).tag == Membership::PerturbedWithin);

  const Instance four{DegreeInstance{{1, 1, 1, 1}}};
  CHECK(classify_membership(LabeledGraph(4), four).tag == Membership::Outside);
  CHECK(classify_membership(graph(4, {{0, 1}, {0, 2}}), four).tag == Membership::Outside);
  const Instance deg2{DegreeInstance{{2, 1, 1}}};
  const Classification c = classify_membership(graph(3, {{1, 2}}), deg2);
  CHECK(c.tag == Membership::PerturbedWithin);
  CHECK(c.perturbation.alpha == std::vector<int>{2, 0, 0});

  // Two classes of two vertices; four cut edges against c12 = 2.
  PamInstance p{2, 2, 1, 2, 1, {2, 2, 2, 2}};
  const LabeledGraph cut4 = graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const Classification pc = classify_membership(cut4, Instance{p});
  CHECK(pc.tag == Membership::Outside);
  CHECK(pc.perturbation.cut_delta == -2);
  CHECK(classify_membership(graph(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}}), Instance{p}).tag == Membership::Exact);
}

TEST_CASE("bipartite membership rejects a deficit-2 vertex") {
  const BipartiteInstance b{{2, 1}, {2, 1}};
  CHECK(classify_membership(graph(4, {{0, 2}, {0, 3}, {1, 2}}), Instance{b}).tag == Membership::Exact);
  CHECK(classify_membership(graph(4, {{0, 2}, {1, 2}}), Instance{b}).tag == Membership::PerturbedWithin);
  CHECK(classify_membership(graph(4, {{1, 2}}), Instance{b}).tag == Membership::Outside);
  CHECK(classify_membership(graph(4, {{0, 1}, {2, 3}, {0, 2}}), Instance{b}).tag == Membership::Outside);
}

TEST_CASE("cut and internal counts") {
  const PamInstance p{3, 3, 0, 0, 0, {0, 0, 0, 0, 0, 0}};
  CHECK(cut_internal_counts(LabeledGraph(6), p) == EdgeClassCounts{0, 0, 0});
  for (std::uint64_t mask = 1; mask < (1U << 15); mask = mask * 5 + 3) {
    const auto s = oracle::from_mask(6, mask & 0x7fff);
    const auto want = oracle::class_counts(s, 3);
    const auto got = cut_internal_counts(graph(6, s), p);
    CHECK(got.c11 == want.c11);
    CHECK(got.c12 == want.c12);
    CHECK(got.c22 == want.c22);
  }
}

TEST_CASE("instance parsing and validation") {
  const Instance a = parse_instance(R"({"kind":"degree","d":[1,1]})");
  CHECK(std::get<DegreeInstance>(a).d == std::vector<int>{1, 1});
  const Instance p = parse_instance(R"({"kind":"pam","classes":[2,2],"matrix":[[1,2],[2,1]],"d":[2,2,2,2]})");
  CHECK(std::get<PamInstance>(p).c12 == 2);
  CHECK(std::get<PamInstance>(p).jdm());
  CHECK(testutil::error_kind([] { parse_instance("{"); }) == ErrorKind::Input);
  CHECK(testutil::error_kind([] { parse_instance(R"({"kind":"degree","d":[0,1]})"); }) == ErrorKind::Input);
  CHECK(testutil::error_kind([] { parse_instance(R"({"kind":"pam","classes":[1,1],"matrix":[[0,1],[0,0]],"d":[1,1]})"); }) ==
        ErrorKind::Input);
  CHECK(testutil::error_kind([] { load_instance("/nonexistent/x.json"); }) == ErrorKind::Io);
}

TEST_CASE("instance hash is stable and discriminating") {
  const Instance a{DegreeInstance{{2, 2, 2}}};
  CHECK(instance_hash(a) == instance_hash(parse_instance(instance_to_json(a))));
  CHECK(instance_hash(a) != instance_hash(Instance{DegreeInstance{{1, 1}}}));
}

TEST_CASE("graph files round trip") {
  const LabeledGraph g = graph(5, {{0, 4}, {1, 2}, {3, 4}});
  std::stringstream ss;
  write_graph(ss, g);
  CHECK(read_graph(ss) == g);
  std::stringstream bad("3 1\n0 0\n");
  CHECK(testutil::error_kind([&] { read_graph(bad); }) == ErrorKind::Input);
}

TEST_CASE("rng is reproducible") {
  std::uint64_t state = 0;
  CHECK(splitmix64(state) == 0xe220a8397b1dcdafULL);
  Rng a(42), b(42), c(43);
  bool differ = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differ = differ || x != c.next();
  }
  CHECK(differ);
  for (int i = 0; i < 1000; ++i) CHECK(a.below(7) < 7);
  Rng s = a.split();
  CHECK(s.next() != a.next());
}
