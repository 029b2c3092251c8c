#include "degmc/statespace.hpp"

#include <algorithm>
#include <numeric>

namespace degmc {

std::optional<int> StateSpace::find(std::uint64_t code) const {
  auto it = index_.find(code);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> StateSpace::find(const LabeledGraph& g) const {
  if (g.order() != n) return std::nullopt;
  return find(SmallGraph::from(g).code());
}

std::size_t StateSpace::exact_count() const {
  return static_cast<std::size_t>(std::count(exact.begin(), exact.end(), true));
}

void StateSpace::add(std::uint64_t code, bool is_exact) {
  if (index_.emplace(code, static_cast<int>(codes.size())).second) {
    codes.push_back(code);
    exact.push_back(is_exact);
  }
}

namespace {

// Orderly generation over vertex pairs (a, b), a < b, with degree-bound pruning.
class Enumerator {
 public:
  Enumerator(const Instance& inst, bool perturbed, const EnumerationLimits& limits)
      : inst_(inst), perturbed_(perturbed), limits_(limits), n_(order(inst)), g_(n_) {
    d_ = target_degrees(inst);
    deg_.assign(static_cast<std::size_t>(n_), 0);
    const long total = std::accumulate(d_.begin(), d_.end(), 0L);
    m_hi_ = total / 2;
    m_lo_ = m_hi_;
    upper_ = d_;
    if (const auto* p = std::get_if<PamInstance>(&inst)) {
      pam_ = p;
      cut_lo_ = p->c12;
      cut_hi_ = p->c12;
      if (perturbed) {
        for (int& u : upper_) u += 2;
        excess_budget_ = 2;
        deficit_budget_ = 2;
        cut_lo_ -= 1;
        cut_hi_ += 1;
      }
    } else {
      if (const auto* b = std::get_if<BipartiteInstance>(&inst)) bip_ = b;
      if (perturbed) {
        deficit_budget_ = 2;
        m_lo_ = m_hi_ - 1;
      }
    }
  }

  StateSpace run() {
    StateSpace s;
    s.instance = inst_;
    s.perturbed = perturbed_;
    s.n = n_;
    out_ = &s;
    if (n_ <= 1) {
      leaf();
    } else {
      dfs(0, 1, 0);
    }
    return s;
  }

 private:
  bool allowed(Vertex a, Vertex b) const { return !bip_ || bip_->side(a) != bip_->side(b); }
  bool cut(Vertex a, Vertex b) const { return pam_ && pam_->cls(a) != pam_->cls(b); }

  bool finish_row(Vertex a, int& used) const {
    used += std::max(0, d_[a] - deg_[a]);
    if (used > deficit_budget_) return false;
    int shortfall = 0;
    long remaining_pairs = 0;
    long remaining_cut = 0;
    int rest1 = 0;
    int rest2 = 0;
    for (Vertex w = a + 1; w < n_; ++w) {
      const int remaining = (w - a - 1) + (n_ - 1 - w);
      shortfall += std::max(0, d_[w] - deg_[w] - remaining);
      if (pam_) (pam_->cls(w) == 0 ? rest1 : rest2) += 1;
    }
    if (used + shortfall > deficit_budget_) return false;
    const long k = n_ - 1 - a;
    remaining_pairs = k * (k - 1) / 2;
    remaining_cut = static_cast<long>(rest1) * rest2;
    if (m_ + remaining_pairs < m_lo_) return false;
    if (pam_ && cut_ + remaining_cut < cut_lo_) return false;
    return true;
  }

  void dfs(Vertex a, Vertex b, int used) {
    if (b >= n_) {
      if (!finish_row(a, used)) return;
      if (a + 1 >= n_ - 1) {
        if (!finish_row(n_ - 1, used)) return;
        leaf();
      } else {
        dfs(a + 1, a + 2, used);
      }
      return;
    }
    const bool c = cut(a, b);
    if (allowed(a, b) && deg_[a] < upper_[a] && deg_[b] < upper_[b] && m_ < m_hi_ && (!pam_ || !c || cut_ < cut_hi_)) {
      const int extra = (deg_[a] >= d_[a]) + (deg_[b] >= d_[b]);
      if (excess_ + extra <= excess_budget_) {
        g_.add_edge(a, b);
        ++deg_[a];
        ++deg_[b];
        ++m_;
        cut_ += c;
        excess_ += extra;
        dfs(a, b + 1, used);
        excess_ -= extra;
        cut_ -= c;
        --m_;
        --deg_[b];
        --deg_[a];
        g_.remove_edge(a, b);
      }
    }
    dfs(a, b + 1, used);
  }

  void leaf() {
    const Classification c = classify_membership(g_, inst_);
    if (c.tag == Membership::Exact || (perturbed_ && c.tag == Membership::PerturbedWithin)) {
      out_->add(g_.code(), c.tag == Membership::Exact);
      if (out_->size() > limits_.max_states) throw Error(ErrorKind::TooLarge, "state space exceeds the state cap");
    }
  }

  const Instance& inst_;
  bool perturbed_;
  EnumerationLimits limits_;
  int n_;
  SmallGraph g_;
  std::vector<int> d_;
  std::vector<int> deg_;
  std::vector<int> upper_;
  const PamInstance* pam_ = nullptr;
  const BipartiteInstance* bip_ = nullptr;
  long m_ = 0;
  long m_lo_ = 0;
  long m_hi_ = 0;
  long cut_ = 0;
  long cut_lo_ = 0;
  long cut_hi_ = 0;
  int excess_ = 0;
  int excess_budget_ = 0;
  int deficit_budget_ = 0;
  StateSpace* out_ = nullptr;
};

}  // namespace

StateSpace enumerate(const Instance& inst, bool perturbed, const EnumerationLimits& limits) {
  validate(inst);
  const int n = order(inst);
  if (n > limits.max_vertices || n > kSmallMax)
    throw Error(ErrorKind::TooLarge, "too many vertices for exhaustive enumeration");
  return Enumerator(inst, perturbed, limits).run();
}

TransitionLists transition_lists(const ChainSpec& spec, const StateSpace& s) {
  validate(spec);
  TransitionLists out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const SmallGraph g = s.small(i);
    Rational moving = 0;
    for (auto& [mv, p] : enumerate_moves(spec, g)) {
      SmallGraph h = g;
      apply(h, mv);
      const auto j = s.find(h.code());
      if (!j) throw Error(ErrorKind::InvariantViolation, "chain move leaves the enumerated state space");
      out[i].emplace_back(*j, p);
      moving += p;
    }
    out[i].emplace_back(static_cast<int>(i), Rational(1) - moving);
  }
  return out;
}

std::vector<std::vector<int>> adjacency_lists(const ChainSpec& spec, const StateSpace& s) {
  validate(spec);
  std::vector<std::vector<int>> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const SmallGraph g = s.small(i);
    for (auto& [mv, p] : enumerate_moves(spec, g)) {
      SmallGraph h = g;
      apply(h, mv);
      const auto j = s.find(h.code());
      if (!j) throw Error(ErrorKind::InvariantViolation, "chain move leaves the enumerated state space");
      out[i].push_back(*j);
    }
  }
  return out;
}

static double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Eigen::MatrixXd to_dense(const TransitionLists& lists) {
  const auto n = static_cast<Eigen::Index>(lists.size());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (const auto& [j, q] : lists[i]) p(i, j) += to_double(q);
  return p;
}

Eigen::SparseMatrix<double, Eigen::RowMajor> to_sparse(const TransitionLists& lists) {
  const auto n = static_cast<Eigen::Index>(lists.size());
  std::vector<Eigen::Triplet<double>> trips;
  for (Eigen::Index i = 0; i < n; ++i)
    for (const auto& [j, q] : lists[i]) trips.emplace_back(static_cast<int>(i), j, to_double(q));
  Eigen::SparseMatrix<double, Eigen::RowMajor> p(n, n);
  p.setFromTriplets(trips.begin(), trips.end());
  return p;
}

Eigen::MatrixXd transition_matrix(const ChainSpec& spec, const StateSpace& s) {
  return to_dense(transition_lists(spec, s));
}

}  // namespace degmc
