#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "../oracles.hpp"
#include "degmc/graph.hpp"
#include "degmc/instance.hpp"

namespace testutil {

inline degmc::LabeledGraph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  degmc::LabeledGraph g(n);
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

inline degmc::LabeledGraph graph(int n, const oracle::EdgeSet& s) {
  degmc::LabeledGraph g(n);
  for (auto [a, b] : s) g.add_edge(a, b);
  return g;
}

inline oracle::EdgeSet edge_set(const degmc::LabeledGraph& g) {
  oracle::EdgeSet s;
  g.for_each_edge([&s](degmc::Edge e) { s.emplace(e.u, e.v); });
  return s;
}

inline std::string data(const std::string& name) { return std::string(DEGMC_TEST_DATA) + "/" + name; }

template <class F>
degmc::ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const degmc::Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return degmc::ErrorKind::Input;
}

}  // namespace testutil
