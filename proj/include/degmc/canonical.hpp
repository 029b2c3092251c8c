#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "degmc/chains.hpp"
#include "degmc/graph.hpp"
#include "degmc/instance.hpp"
#include "degmc/rng.hpp"
#include "degmc/statespace.hpp"

namespace degmc {

// Per-vertex bijection between incident red and blue edges.
struct Pairing {
  int n = 0;
  std::vector<std::vector<Edge>> red;   // sorted, per vertex
  std::vector<std::vector<Edge>> blue;  // sorted, per vertex
  std::vector<std::vector<int>> perm;   // red[v][i] is paired with blue[v][perm[v][i]]

  std::size_t theta(Vertex v) const { return red[v].size(); }
  // Edge paired with e at v; throws Input when e is not incident to v in the difference.
  Edge partner(Vertex v, Edge e) const;
};

// Identity pairing (sorted red i to sorted blue i); throws Unbalanced.
Pairing first_pairing(const ColoredDifference& diff);
// Advances to the next pairing in odometer order; false after the last one.
bool next_pairing(Pairing& p);
std::vector<Pairing> enumerate_pairings(const ColoredDifference& diff, std::size_t cap = 1'000'000);
boost::multiprecision::cpp_int pairing_count(const ColoredDifference& diff);
Pairing sample_pairing(const ColoredDifference& diff, Rng& rng);

// Closed alternating walk; edge i joins walk[i] and walk[i + 1 mod L], even edges are blue.
struct Circuit {
  std::vector<Vertex> walk;
  std::size_t length() const { return walk.size(); }
  Vertex at(std::size_t i) const { return walk[i % walk.size()]; }
  Edge edge(std::size_t i) const { return make_edge(at(i), at(i + 1)); }
  bool blue(std::size_t i) const { return i % 2 == 0; }
};

std::vector<Circuit> circuit_decomposition(const ColoredDifference& diff, const Pairing& psi);
// Edge sets of the circuits in discovery order, using only the pairing structure.
std::vector<std::vector<Edge>> circuit_edge_sets(const std::vector<Edge>& edges, const Pairing& psi);

struct PathStep {
  MoveType type = MoveType::Rejected;
  std::vector<Edge> removed;
  std::vector<Edge> added;
  int circuit = -1;
};

struct CanonicalPath {
  std::vector<Circuit> circuits;
  std::vector<LabeledGraph> states;  // states.size() == steps.size() + 1
  std::vector<PathStep> steps;
};

struct Transition {
  LabeledGraph from;
  LabeledGraph to;
};

// JS chain canonical path; both graphs need the same degree sequence.
CanonicalPath js_canonical_path(const LabeledGraph& g, const LabeledGraph& g2, const Pairing& psi);
LabeledGraph js_encoding(const Transition& t, const LabeledGraph& g, const LabeledGraph& g2, const Pairing& psi);
std::pair<LabeledGraph, LabeledGraph> js_recover(const Transition& t, const LabeledGraph& L, const Pairing& psi);

// Canonical-path flow of the JS chain over every pairing; perturbed endpoints are
// routed through a nearest exact state.
FlowAssignment js_canonical_flow(const StateSpace& s, const ChainSpec& spec);

// Walk indices [from, to] of one circuit; to may equal the circuit length (back at x_0).
struct Section {
  int circuit = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  int l = 0;
};

struct Segment {
  std::vector<int> sections;
  int l = 0;
};

struct SegmentDecomposition {
  std::vector<Section> sections;
  std::vector<Segment> segments;
};

SegmentDecomposition section_segment_decomposition(const std::vector<Circuit>& circuits, int n1);
SegmentDecomposition section_segment_decomposition(const std::vector<Circuit>& circuits, const PamInstance& inst);

struct Piece {
  int a = 0;
  int b = 0;
  int t = 0;  // first top (mountain) or first bottom (valley)
  bool mountain = true;
};

struct Landscape {
  std::vector<int> P;
  std::vector<Piece> pieces;
};

// Throws InvariantViolation unless P(0) = P(B) = 0 with unit steps.
Landscape landscape_from_values(std::vector<int> P);
Landscape landscape(const SegmentDecomposition& dec);

// Shortest traversal of the piece P on [a, b] with first top t.
std::vector<std::pair<int, int>> traverse(const std::vector<int>& P, const Piece& piece);
bool is_traversal(const std::vector<int>& P, const Piece& piece, const std::vector<std::pair<int, int>>& tr);

CanonicalPath hinge_canonical_path(const LabeledGraph& g, const LabeledGraph& g2, const Pairing& psi,
                                   const PamInstance& inst);
LabeledGraph pam_encoding(const Transition& t, const LabeledGraph& g, const LabeledGraph& g2, const Pairing& psi,
                          const PamInstance& inst);
// Number of pairs (G, G') consistent with (t, L, psi) whose canonical path uses t.
std::size_t pam_recover_count(const Transition& t, const LabeledGraph& L, const Pairing& psi,
                              const PamInstance& inst);

struct SwitchPathStats {
  std::size_t direct = 0;
  std::size_t lookahead = 0;
  std::size_t search = 0;
};

// Legal switches turning h into h2.
std::vector<Move> switch_path(const LabeledGraph& h, const LabeledGraph& h2, SwitchPathStats* stats = nullptr);

struct DistanceCheck {
  int distance = 0;
  std::size_t delta = 0;
  bool within_bound = true;  // 2 * distance <= 3 * delta
};

DistanceCheck restricted_switch_distance_check(const LabeledGraph& h, const LabeledGraph& h2,
                                               const PamInstance& inst, const EnumerationLimits& limits = {});

struct AllPairsCheck {
  std::size_t states = 0;
  std::size_t pairs = 0;
  bool connected = true;
  bool within_bound = true;
  double worst_ratio = 0.0;  // max distance / |delta|
};

AllPairsCheck restricted_switch_all_pairs(const PamInstance& inst, const EnumerationLimits& limits = {});

}  // namespace degmc
