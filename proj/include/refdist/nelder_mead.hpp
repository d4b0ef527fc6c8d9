#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace refdist {

struct NelderMeadConfig
{
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  int max_iter = 2000;
  /// Largest vertex distance (max-norm) from the best vertex.
  double xtol = 1e-8;
  /// Spread between the worst and best objective values.
  double ftol = 1e-12;
  /// Extra jittered starts used by the histogram fitter.
  int restarts = 5;
  /// Relative size of the initial simplex edges.
  double initial_step = 0.05;

  void validate() const;
};

struct NelderMeadResult
{
  Eigen::VectorXd argmin;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Best objective value after each iteration; never increases.
  std::vector<double> best_history;
};

using Objective = std::function<double(const Eigen::VectorXd&)>;

/// Axis-aligned starting simplex around `init`: each coordinate moves by
/// step * |x_i|, or by 2.5e-4 where x_i is zero.
Eigen::MatrixXd initial_simplex(const Eigen::VectorXd& init, double step);

/// Downhill simplex minimization from an explicit simplex (one vertex per
/// column, n + 1 columns). Non-finite objective values inside the search are
/// treated as +inf; non-finite values at the starting vertices throw InitError.
NelderMeadResult nelder_mead_simplex(const Objective& objective,
                                     const Eigen::MatrixXd& simplex,
                                     const NelderMeadConfig& config = {});

NelderMeadResult nelder_mead(const Objective& objective,
                             const Eigen::VectorXd& init,
                             const NelderMeadConfig& config = {});

} // namespace refdist
