#include "refdist/kde.hpp"

#include "refdist/errors.hpp"
#include "refdist/special.hpp"
#include "refdist/stats.hpp"

#include <algorithm>
#include <cmath>

namespace refdist {

double silverman_bandwidth(const Eigen::Ref<const Eigen::VectorXd>& samples)
{
  if (samples.size() < 2)
    throw BandwidthError("kde: automatic bandwidth needs at least two samples");
  const double sd = std::sqrt(sample_variance(samples));
  const Eigen::VectorXd sorted = sorted_copy(samples);
  const double iqr = (sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25)) / 1.34;
  double spread = std::min(sd, iqr);
  if (!(spread > 0))
    spread = std::max(sd, iqr);
  if (!(spread > 0) || !std::isfinite(spread))
    throw BandwidthError("kde: samples have zero spread; bandwidth is undefined");
  return 1.06 * spread * std::pow(static_cast<double>(samples.size()), -0.2);
}

Kde::Kde(Eigen::VectorXd samples, std::optional<double> bandwidth)
  : samples_(std::move(samples))
  , bandwidth_(0.0)
  , auto_bandwidth_(!bandwidth.has_value())
{
  if (samples_.size() == 0)
    throw BandwidthError("kde: no samples");
  if (bandwidth) {
    if (!(*bandwidth > 0) || !std::isfinite(*bandwidth))
      throw BandwidthError("kde: bandwidth must be positive");
    bandwidth_ = *bandwidth;
  } else {
    bandwidth_ = silverman_bandwidth(samples_);
  }
}

double Kde::operator()(double x) const
{
  double total = 0.0;
  for (const double s : samples_)
    total += normal_pdf((x - s) / bandwidth_);
  return total / (static_cast<double>(samples_.size()) * bandwidth_);
}

Eigen::VectorXd Kde::evaluate(const Eigen::Ref<const Eigen::VectorXd>& grid) const
{
  return grid.unaryExpr([this](double x) { return (*this)(x); });
}

} // namespace refdist
