#pragma once

#include <Eigen/Dense>

#include <optional>

namespace refdist {

/// Silverman's rule, 1.06 min(sd, IQR/1.34) n^(-1/5). When one of the two
/// spread measures is zero the other is used; throws BandwidthError if both are.
double silverman_bandwidth(const Eigen::Ref<const Eigen::VectorXd>& samples);

/// Gaussian kernel density estimate.
class Kde
{
public:
  /// Without a bandwidth, Silverman's rule is applied and at least two
  /// samples are needed. An explicit bandwidth must be positive.
  explicit Kde(Eigen::VectorXd samples, std::optional<double> bandwidth = std::nullopt);

  double bandwidth() const { return bandwidth_; }
  bool auto_bandwidth() const { return auto_bandwidth_; }
  const Eigen::VectorXd& samples() const { return samples_; }

  double operator()(double x) const;
  Eigen::VectorXd evaluate(const Eigen::Ref<const Eigen::VectorXd>& grid) const;

private:
  Eigen::VectorXd samples_;
  double bandwidth_;
  bool auto_bandwidth_;
};

} // namespace refdist
