#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>

namespace refdist {

/// Binned data on strictly increasing edges.
///
/// A histogram is either on the frequency scale (counts, percentages, any
/// nonnegative weights per bin) or on the density scale, where
/// sum(value_b * width_b) == 1. Density histograms only come out of
/// `normalize`, `average_normalized` or `from_density`, which check that.
class Histogram
{
public:
  Histogram(Eigen::VectorXd edges,
            Eigen::VectorXd frequencies,
            std::optional<std::size_t> sample_size = std::nullopt);

  /// Wraps values that already integrate to one (within 1e-12).
  static Histogram from_density(Eigen::VectorXd edges,
                                Eigen::VectorXd densities,
                                std::optional<std::size_t> sample_size = std::nullopt);

  const Eigen::VectorXd& edges() const { return edges_; }
  const Eigen::VectorXd& values() const { return values_; }
  Eigen::Index bins() const { return values_.size(); }
  bool is_density() const { return density_; }
  std::optional<std::size_t> sample_size() const { return sample_size_; }

  Eigen::VectorXd widths() const;
  Eigen::VectorXd centers() const;

  /// Integral of the step function, sum(value_b * width_b).
  double area() const;

  /// Same scale, same edges, same values, bit for bit.
  bool operator==(const Histogram& other) const;

private:
  friend Histogram normalize(const Histogram& hist);
  friend Histogram average_normalized(std::span<const Histogram> hists);


  Eigen::VectorXd edges_;
  Eigen::VectorXd values_;
  std::optional<std::size_t> sample_size_;
  bool density_ = false;
};

/// Density view: value_b / (width_b * sum(values)). Density input is returned
/// unchanged. Throws EmptyHistogramError when every frequency is zero.
Histogram normalize(const Histogram& hist);

/// Bin-wise mean of the normalized inputs, which must share their edges.
Histogram average_normalized(std::span<const Histogram> hists);

} // namespace refdist
