#include <cmath>

#include "degmc/rng.hpp"
#include "degmc/statespace.hpp"

namespace degmc {

SpectralResult spectral_gap(const Eigen::SparseMatrix<double, Eigen::RowMajor>& p, double tol,
                            std::size_t max_iterations) {
  const Eigen::Index n = p.rows();
  SpectralResult res;
  if (n <= 1) return res;  // degenerate: gap 1 by convention
  Rng rng(0x5eed5eedULL);
  Eigen::VectorXd x(n);
  for (Eigen::Index i = 0; i < n; ++i) x[i] = rng.uniform01() - 0.5;
  x.array() -= x.mean();
  x.normalize();
  Eigen::VectorXd y(n);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    y.noalias() = p * x;
    y.array() -= y.mean();  // deflate the uniform eigenvector
    const double rho = x.dot(y);
    const double residual = (y - rho * x).norm();
    const double norm = y.norm();
    if (residual <= tol || norm == 0.0) {
      res.lambda1 = norm == 0.0 ? 0.0 : rho;
      res.gap = 1.0 - res.lambda1;
      res.iterations = it;
      return res;
    }
    x = y / norm;
  }
  throw Error(ErrorKind::NonConvergence, "power iteration did not reach the tolerance");
}

SpectralResult spectral_gap(const Eigen::MatrixXd& p, double tol, std::size_t max_iterations) {
  Eigen::SparseMatrix<double, Eigen::RowMajor> s = p.sparseView();
  return spectral_gap(s, tol, max_iterations);
}

static double tv_row(const Eigen::Ref<const Eigen::RowVectorXd>& row) {
  const double u = 1.0 / static_cast<double>(row.size());
  return 0.5 * (row.array() - u).abs().sum();
}

double tv_distance(const Eigen::MatrixXd& p, int x, std::size_t t) {
  Eigen::SparseMatrix<double, Eigen::RowMajor> s = p.sparseView();
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(p.rows());
  row[x] = 1.0;
  for (std::size_t i = 0; i < t; ++i) row = row * s;
  return tv_row(row);
}

std::vector<double> tv_curve(const Eigen::MatrixXd& p, int x, std::size_t t_max) {
  Eigen::SparseMatrix<double, Eigen::RowMajor> s = p.sparseView();
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(p.rows());
  row[x] = 1.0;
  std::vector<double> out{tv_row(row)};
  for (std::size_t i = 0; i < t_max; ++i) {
    row = row * s;
    out.push_back(tv_row(row));
  }
  return out;
}

MixingResult mixing_time(const Eigen::MatrixXd& p, double eps, std::size_t max_steps) {
  const Eigen::Index n = p.rows();
  Eigen::SparseMatrix<double, Eigen::RowMajor> s = p.sparseView();
  Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n, n);
  MixingResult res;
  auto worst = [&r]() {
    double w = 0.0;
    for (Eigen::Index i = 0; i < r.rows(); ++i) w = std::max(w, tv_row(r.row(i)));
    return w;
  };
  res.worst_tv.push_back(worst());
  while (res.worst_tv.back() > eps) {
    if (res.tau >= max_steps) throw Error(ErrorKind::NonConvergence, "mixing time exceeds the step cap");
    Eigen::MatrixXd next = r * s;
    r.swap(next);
    ++res.tau;
    res.worst_tv.push_back(worst());
    if (res.worst_tv.back() > res.worst_tv[res.worst_tv.size() - 2] + 1e-12) res.monotone = false;
  }
  return res;
}

double sinclair_bound(std::size_t states, double eps, double lambda1) {
  return std::log(static_cast<double>(states) / eps) / (1.0 - lambda1);
}

}  // namespace degmc
