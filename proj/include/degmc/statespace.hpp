#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <boost/multiprecision/cpp_int.hpp>

#include "degmc/chains.hpp"
#include "degmc/graph.hpp"
#include "degmc/instance.hpp"

namespace degmc {

struct EnumerationLimits {
  int max_vertices = 10;
  std::size_t max_states = 20000;
};

// Enumerated realization set. States are stored by their pair-bitmask code,
// which is a canonical encoding for graphs on at most 11 vertices.
class StateSpace {
 public:
  Instance instance;
  bool perturbed = false;
  int n = 0;
  std::vector<std::uint64_t> codes;
  std::vector<bool> exact;

  std::size_t size() const { return codes.size(); }
  SmallGraph small(std::size_t i) const { return SmallGraph::from_code(n, codes[i]); }
  LabeledGraph graph(std::size_t i) const { return small(i).to_labeled(); }
  std::optional<int> find(std::uint64_t code) const;
  std::optional<int> find(const LabeledGraph& g) const;
  std::size_t exact_count() const;

  void add(std::uint64_t code, bool is_exact);

 private:
  std::unordered_map<std::uint64_t, int> index_;
};

StateSpace enumerate(const Instance& inst, bool perturbed, const EnumerationLimits& limits = {});

// Row-wise exact transition lists; each row ends with its self-loop.
using TransitionLists = std::vector<std::vector<std::pair<int, Rational>>>;
TransitionLists transition_lists(const ChainSpec& spec, const StateSpace& s);
// Unweighted adjacency (self-loops dropped).
std::vector<std::vector<int>> adjacency_lists(const ChainSpec& spec, const StateSpace& s);

Eigen::MatrixXd transition_matrix(const ChainSpec& spec, const StateSpace& s);
Eigen::MatrixXd to_dense(const TransitionLists& lists);
Eigen::SparseMatrix<double, Eigen::RowMajor> to_sparse(const TransitionLists& lists);

struct SpectralResult {
  double lambda1 = 0.0;
  double gap = 1.0;
  std::size_t iterations = 0;
};

// Deflated power iteration against the uniform top eigenvector.
SpectralResult spectral_gap(const Eigen::SparseMatrix<double, Eigen::RowMajor>& p, double tol = 1e-10,
                            std::size_t max_iterations = 1'000'000);
SpectralResult spectral_gap(const Eigen::MatrixXd& p, double tol = 1e-10, std::size_t max_iterations = 1'000'000);

double tv_distance(const Eigen::MatrixXd& p, int x, std::size_t t);
std::vector<double> tv_curve(const Eigen::MatrixXd& p, int x, std::size_t t_max);

struct MixingResult {
  std::size_t tau = 0;
  std::vector<double> worst_tv;  // max over start states, t = 0..tau
  bool monotone = true;
};

MixingResult mixing_time(const Eigen::MatrixXd& p, double eps, std::size_t max_steps = 10'000'000);
double sinclair_bound(std::size_t states, double eps, double lambda1);

using BigRational = boost::multiprecision::cpp_rational;

struct FlowPath {
  std::vector<int> states;
  BigRational flow;
};

struct FlowAssignment {
  std::vector<FlowPath> paths;
};

struct CongestionResult {
  BigRational rho;
  std::size_t length = 0;
};

// Uniform stationary distribution assumed (symmetric chains).
CongestionResult flow_congestion(const StateSpace& s, const TransitionLists& p, const FlowAssignment& f);

}  // namespace degmc
