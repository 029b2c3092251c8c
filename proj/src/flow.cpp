#include <map>

#include "degmc/statespace.hpp"

namespace degmc {

CongestionResult flow_congestion(const StateSpace& s, const TransitionLists& p, const FlowAssignment& f) {
  const auto n = static_cast<long>(s.size());
  const BigRational pi(1, n);
  std::map<std::pair<int, int>, BigRational> prob;
  for (long i = 0; i < n; ++i)
    for (const auto& [j, q] : p[i])
      if (j != i) prob[{static_cast<int>(i), j}] = BigRational(q.numerator(), q.denominator());

  std::map<std::pair<int, int>, BigRational> demand;
  std::map<std::pair<int, int>, BigRational> load;
  CongestionResult res;
  for (const FlowPath& path : f.paths) {
    if (path.states.size() < 2) throw Error(ErrorKind::InvalidFlow, "flow path needs at least one transition");
    if (path.flow < 0) throw Error(ErrorKind::InvalidFlow, "negative path flow");
    for (std::size_t k = 0; k + 1 < path.states.size(); ++k) {
      const std::pair<int, int> e{path.states[k], path.states[k + 1]};
      if (!prob.count(e)) throw Error(ErrorKind::InvalidFlow, "flow path uses a non-transition");
      load[e] += path.flow;
    }
    demand[{path.states.front(), path.states.back()}] += path.flow;
    if (path.flow > 0) res.length = std::max(res.length, path.states.size() - 1);
  }
  const BigRational need = pi * pi;
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) {
      if (x == y) continue;
      auto it = demand.find({static_cast<int>(x), static_cast<int>(y)});
      if (it == demand.end() || it->second != need)
        throw Error(ErrorKind::InvalidFlow, "demand of a state pair is not met exactly");
    }
  if (demand.size() != static_cast<std::size_t>(n * (n - 1)))
    throw Error(ErrorKind::InvalidFlow, "flow routes between identical states");
  for (const auto& [e, fe] : load) {
    const BigRational ratio = fe / (pi * prob[e]);
    if (ratio > res.rho) res.rho = ratio;
  }
  return res;
}

}  // namespace degmc
