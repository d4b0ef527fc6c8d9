#include "refdist/nelder_mead.hpp"

#include "refdist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace refdist {

void NelderMeadConfig::validate() const
{
  if (!(reflection > 0 && expansion > 0 && contraction > 0 && shrink > 0))
    throw std::invalid_argument("nelder_mead: coefficients must be positive");
  if (!(expansion > reflection))
    throw std::invalid_argument("nelder_mead: expansion must exceed reflection");
  if (!(contraction < 1 && shrink < 1))
    throw std::invalid_argument("nelder_mead: contraction and shrink must be below 1");
  if (max_iter < 0 || restarts < 0)
    throw std::invalid_argument("nelder_mead: max_iter and restarts must be nonnegative");
  if (!(xtol >= 0 && ftol >= 0 && initial_step > 0))
    throw std::invalid_argument("nelder_mead: tolerances must be nonnegative");
}

Eigen::MatrixXd initial_simplex(const Eigen::VectorXd& init, double step)
{
  const Eigen::Index n = init.size();
  Eigen::MatrixXd simplex = init.replicate(1, n + 1);
  for (Eigen::Index i = 0; i < n; ++i)
    simplex(i, i + 1) += init[i] != 0.0 ? step * std::abs(init[i]) : 2.5e-4;
  return simplex;
}

NelderMeadResult nelder_mead_simplex(const Objective& objective,
                                     const Eigen::MatrixXd& simplex,
                                     const NelderMeadConfig& config)
{
  config.validate();
  const Eigen::Index n = simplex.rows();
  if (n < 1 || simplex.cols() != n + 1)
    throw std::invalid_argument("nelder_mead: simplex must have n + 1 columns");

  constexpr double inf = std::numeric_limits<double>::infinity();
  auto eval = [&](const Eigen::VectorXd& x) {
    const double v = objective(x);
    return std::isfinite(v) ? v : inf;
  };

  Eigen::MatrixXd v = simplex;
  Eigen::VectorXd f(n + 1);
  for (Eigen::Index j = 0; j <= n; ++j) {
    if (!v.col(j).allFinite())
      throw InitError("nelder_mead: non-finite starting vertex");
    f[j] = objective(v.col(j));
    if (!std::isfinite(f[j]))
      throw InitError("nelder_mead: objective is not finite at a starting vertex");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n + 1));
  auto sort_vertices = [&] {
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return f[a] < f[b]; });
    Eigen::MatrixXd vs(n, n + 1);
    Eigen::VectorXd fs(n + 1);
    for (Eigen::Index j = 0; j <= n; ++j) {
      vs.col(j) = v.col(order[static_cast<std::size_t>(j)]);
      fs[j] = f[order[static_cast<std::size_t>(j)]];
    }
    v.swap(vs);
    f.swap(fs);
  };

  auto converged = [&] {
    const double spread = f[n] - f[0];
    const double diameter = (v.rightCols(n).colwise() - v.col(0)).cwiseAbs().maxCoeff();
    return diameter <= config.xtol && spread <= config.ftol;
  };

  NelderMeadResult result;
  sort_vertices();
  int iter = 0;
  for (; iter < config.max_iter && !converged(); ++iter) {
    const Eigen::VectorXd centroid = v.leftCols(n).rowwise().mean();
    const Eigen::VectorXd worst = v.col(n);

    const Eigen::VectorXd xr = centroid + config.reflection * (centroid - worst);
    const double fr = eval(xr);

    bool do_shrink = false;
    if (fr < f[0]) {
      const Eigen::VectorXd xe = centroid + config.expansion * (centroid - worst);
      const double fe = eval(xe);
      if (fe < fr) {
        v.col(n) = xe;
        f[n] = fe;
      } else {
        v.col(n) = xr;
        f[n] = fr;
      }
    } else if (fr < f[n - 1]) {
      v.col(n) = xr;
      f[n] = fr;
    } else if (fr < f[n]) {
      const Eigen::VectorXd xc = centroid + config.contraction * (xr - centroid);
      const double fc = eval(xc);
      if (fc <= fr) {
        v.col(n) = xc;
        f[n] = fc;
      } else {
        do_shrink = true;
      }
    } else {
      const Eigen::VectorXd xcc = centroid + config.contraction * (worst - centroid);
      const double fcc = eval(xcc);
      if (fcc < f[n]) {
        v.col(n) = xcc;
        f[n] = fcc;
      } else {
        do_shrink = true;
      }
    }

    if (do_shrink) {
      for (Eigen::Index j = 1; j <= n; ++j) {
        v.col(j) = v.col(0) + config.shrink * (v.col(j) - v.col(0));
        f[j] = eval(v.col(j));
      }
    }
    sort_vertices();
    result.best_history.push_back(f[0]);
  }

  result.argmin = v.col(0);
  result.value = f[0];
  result.iterations = iter;
  result.converged = converged();
  return result;
}

NelderMeadResult nelder_mead(const Objective& objective,
                             const Eigen::VectorXd& init,
                             const NelderMeadConfig& config)
{
  return nelder_mead_simplex(objective, initial_simplex(init, config.initial_step), config);
}

} // namespace refdist
