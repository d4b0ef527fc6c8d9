#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace refdist {

/// Sample variance with n - 1 in the denominator.
inline double sample_variance(const Eigen::Ref<const Eigen::VectorXd>& x)
{
  if (x.size() < 2)
    throw std::invalid_argument("sample_variance: needs at least two values");
  return (x.array() - x.mean()).square().sum() / static_cast<double>(x.size() - 1);
}

/// Linear-interpolation quantile of sorted data (Hyndman-Fan type 7, R's default).
inline double sorted_quantile(const Eigen::Ref<const Eigen::VectorXd>& sorted, double prob)
{
  if (sorted.size() == 0)
    throw std::invalid_argument("sorted_quantile: empty input");
  const double h = prob * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<Eigen::Index>(std::floor(h));
  if (lo + 1 >= sorted.size())
    return sorted[sorted.size() - 1];
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

inline Eigen::VectorXd sorted_copy(const Eigen::Ref<const Eigen::VectorXd>& x)
{
  Eigen::VectorXd s = x;
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace refdist
