#pragma once

#include <span>
#include <vector>

#include "degmc/graph.hpp"
#include "degmc/instance.hpp"

namespace degmc {

// Erdos-Gallai; zero entries are allowed.
bool is_graphical_degree(std::span<const int> d);
// Gale-Ryser.
bool is_graphical_bipartite(std::span<const int> r, std::span<const int> c);
bool is_graphical_bipartite(const BipartiteInstance& inst);

// Havel-Hakimi.
LabeledGraph realize_degree(std::span<const int> d);
LabeledGraph realize_bipartite(const BipartiteInstance& inst);
LabeledGraph realize_pam(const PamInstance& inst);
LabeledGraph realize(const Instance& inst);

}  // namespace degmc
