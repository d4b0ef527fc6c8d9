#include "refdist/histogram.hpp"

#include "refdist/errors.hpp"

#include <cmath>
#include <string>

namespace refdist {

namespace {

void check_shape(const Eigen::VectorXd& edges, const Eigen::VectorXd& values)
{
  if (values.size() < 2)
    throw InputError("histogram: at least 2 bins are required");
  if (edges.size() != values.size() + 1)
    throw InputError("histogram: expected " + std::to_string(values.size() + 1) +
                     " edges for " + std::to_string(values.size()) + " bins, got " +
                     std::to_string(edges.size()));
  for (Eigen::Index i = 0; i < edges.size(); ++i) {
    if (!std::isfinite(edges[i]))
      throw InputError("histogram: edges must be finite");
    if (i > 0 && !(edges[i] > edges[i - 1]))
      throw InputError("histogram: edges must be strictly increasing (edge " +
                       std::to_string(i) + ")");
  }
  for (Eigen::Index i = 0; i < values.size(); ++i)
    if (!std::isfinite(values[i]) || values[i] < 0)
      throw InputError("histogram: bin " + std::to_string(i) +
                       " has a negative or non-finite value");
}

} // namespace

Histogram::Histogram(Eigen::VectorXd edges,
                     Eigen::VectorXd frequencies,
                     std::optional<std::size_t> sample_size)
  : edges_(std::move(edges))
  , values_(std::move(frequencies))
  , sample_size_(sample_size)
{
  check_shape(edges_, values_);
}

Histogram Histogram::from_density(Eigen::VectorXd edges,
                                  Eigen::VectorXd densities,
                                  std::optional<std::size_t> sample_size)
{
  Histogram h(std::move(edges), std::move(densities), sample_size);
  if (std::abs(h.area() - 1.0) > 1e-12)
    throw InputError("histogram: density values do not integrate to 1");
  h.density_ = true;
  return h;
}

Eigen::VectorXd Histogram::widths() const
{
  const Eigen::Index n = bins();
  return edges_.tail(n) - edges_.head(n);
}

Eigen::VectorXd Histogram::centers() const
{
  const Eigen::Index n = bins();
  return 0.5 * (edges_.head(n) + edges_.tail(n));
}

double Histogram::area() const
{
  return values_.dot(widths());
}

bool Histogram::operator==(const Histogram& other) const
{
  return density_ == other.density_ && sample_size_ == other.sample_size_ &&
         edges_.size() == other.edges_.size() && values_.size() == other.values_.size() &&
         edges_ == other.edges_ && values_ == other.values_;
}

Histogram normalize(const Histogram& hist)
{
  if (hist.is_density())
    return hist;
  const double total = hist.values().sum();
  if (!(total > 0))
    throw EmptyHistogramError("histogram: all frequencies are zero");
  Histogram out = hist;
  out.values_ = hist.values().cwiseQuotient(hist.widths()) / total;
  out.density_ = true;
  return out;
}

Histogram average_normalized(std::span<const Histogram> hists)
{
  if (hists.empty())
    throw InputError("histogram: nothing to average");
  const Eigen::VectorXd& edges = hists.front().edges();
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(hists.front().bins());
  std::optional<std::size_t> total;
  for (const auto& h : hists) {
    if (h.edges().size() != edges.size() || h.edges() != edges)
      throw InputError("histogram: averaged inputs must share bin edges");
    mean += normalize(h).values();
    if (h.sample_size())
      total = total.value_or(0) + *h.sample_size();
  }
  mean /= static_cast<double>(hists.size());
  Histogram out(edges, mean, total);
  out.density_ = true;
  return out;
}

} // namespace refdist
