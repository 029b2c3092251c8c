#include "common.hpp"
#include "degmc/realize.hpp"

using namespace degmc;

namespace {

std::vector<std::vector<int>> sequences(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(d);
      return;
    }
    for (int x = 0; x < n; ++x) {
      d[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("graphicality spot values") {
  CHECK(is_graphical_degree(std::vector<int>{2, 2, 2}));
  CHECK_FALSE(is_graphical_degree(std::vector<int>{3, 1, 1}));
  CHECK_FALSE(is_graphical_degree(std::vector<int>{3, 3, 1, 1}));
  CHECK(is_graphical_bipartite(std::vector<int>{1, 1}, std::vector<int>{1, 1}));
  CHECK_FALSE(is_graphical_bipartite(std::vector<int>{2, 2}, std::vector<int>{1, 1}));
  CHECK(is_graphical_bipartite(std::vector<int>{2, 2, 1}, std::vector<int>{3, 1, 1}));
}

TEST_CASE("Erdos-Gallai agrees with exhaustive enumeration for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> realizable;
    oracle::for_each_graph(n, [&](const oracle::EdgeSet& s) { realizable.insert(oracle::degrees(n, s)); });
    for (const auto& d : sequences(n)) CHECK(is_graphical_degree(d) == (realizable.count(d) != 0));
  }
}

TEST_CASE("Gale-Ryser agrees with exhaustive enumeration on 3+3") {
  for (int code = 0; code < 4 * 4 * 4 * 4 * 4 * 4; ++code) {
    std::vector<int> r(3), c(3);
    int x = code;
    for (int i = 0; i < 3; ++i, x /= 4) r[i] = x % 4;
    for (int i = 0; i < 3; ++i, x /= 4) c[i] = x % 4;
    CHECK(is_graphical_bipartite(r, c) == oracle::bipartite_realizable(r, c));
  }
}

TEST_CASE("Havel-Hakimi realizations") {
  const LabeledGraph k4 = realize_degree(std::vector<int>{3, 3, 3, 3});
  CHECK(k4.size() == 6);
  const LabeledGraph m = realize_degree(std::vector<int>{1, 1, 1, 1});
  CHECK(m.degrees() == std::vector<int>{1, 1, 1, 1});
  const LabeledGraph c6 = realize_degree(std::vector<int>{2, 2, 2, 2, 2, 2});
  const auto all = oracle::realizations({2, 2, 2, 2, 2, 2});
  CHECK(std::find(all.begin(), all.end(), testutil::edge_set(c6)) != all.end());
  CHECK(testutil::error_kind([] { realize_degree(std::vector<int>{3, 3, 1, 1}); }) == ErrorKind::NotGraphical);
}

TEST_CASE("every graphical sequence up to n = 6 is realized exactly") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& d : sequences(n))
      if (is_graphical_degree(d)) CHECK(realize_degree(d).degrees() == d);
}

TEST_CASE("bipartite realization stays across the sides") {
  const BipartiteInstance b{{2, 2, 1}, {3, 1, 1}};
  const LabeledGraph g = realize_bipartite(b);
  CHECK(g.degrees() == b.degrees());
  g.for_each_edge([&](Edge e) { CHECK(b.side(e.u) != b.side(e.v)); });
  CHECK(testutil::error_kind([] { realize_bipartite(BipartiteInstance{{2, 2}, {1, 3}}); }) == ErrorKind::NotGraphical);
}

TEST_CASE("two-class realization of the worked JDM example") {
  const PamInstance p{6, 5, 7, 4, 8, {3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4}};
  const LabeledGraph g = realize_pam(p);
  CHECK(g.degrees() == p.d);
  CHECK(cut_internal_counts(g, p) == EdgeClassCounts{7, 4, 8});
  CHECK(classify_membership(g, Instance{p}).tag == Membership::Exact);
}

TEST_CASE("two-class realization with a perfect cut matching") {
  const PamInstance p{2, 2, 0, 2, 0, {1, 1, 1, 1}};
  const LabeledGraph g = realize_pam(p);
  CHECK(g.size() == 2);
  g.for_each_edge([&](Edge e) { CHECK(p.is_cut(e)); });
}

TEST_CASE("two-class realization agrees with brute force on small instances") {
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int n2 = 1; n2 <= 3; ++n2) {
      const int n = n1 + n2;
      std::map<std::vector<long>, bool> seen;
      oracle::for_each_graph(n, [&](const oracle::EdgeSet& s) {
        const auto d = oracle::degrees(n, s);
        const auto c = oracle::class_counts(s, n1);
        if (c.c12 < 1 || c.c12 > n1 * n2 - 1) return;
        std::vector<long> key(d.begin(), d.end());
        key.insert(key.end(), {c.c11, c.c12, c.c22});
        if (seen.count(key)) return;
        seen[key] = true;
        const PamInstance p{n1, n2, c.c11, c.c12, c.c22, d};
        const LabeledGraph g = realize_pam(p);
        CHECK(g.degrees() == d);
        CHECK(cut_internal_counts(g, p) == EdgeClassCounts{c.c11, c.c12, c.c22});
      });
    }
}

TEST_CASE("unrealizable two-class data is reported") {
  // Class 1 is a single vertex, so it cannot hold an internal edge.
  const PamInstance p{1, 3, 1, 1, 0, {3, 1, 1, 1}};
  CHECK_THROWS_AS(realize_pam(p), Error);
}
