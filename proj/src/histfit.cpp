#include "refdist/histfit.hpp"

#include "refdist/errors.hpp"
#include "refdist/random.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace refdist {

std::string_view to_string(Family family)
{
  return family == Family::Lnorm3 ? "lnorm3" : "norm3";
}

Family parse_family(std::string_view name)
{
  if (name == "lnorm3")
    return Family::Lnorm3;
  if (name == "norm3")
    return Family::Norm3;
  throw InputError("unknown family '" + std::string(name) + "' (expected lnorm3 or norm3)");
}

namespace {

template <typename Dist>
double sse_at(const Eigen::VectorXd& centers,
              const Eigen::VectorXd& density,
              const Eigen::VectorXd& weights,
              const Dist& dist)
{
  double total = 0.0;
  for (Eigen::Index b = 0; b < centers.size(); ++b) {
    const double r = density[b] - pdf(dist, centers[b]);
    total += weights[b] * r * r;
  }
  return total;
}

// Maps the unconstrained search vector back to a density. Returns nullopt when
// exp() leaves the finite range.
struct Lnorm3Coords
{
  double anchor; // leftmost bin center

  std::optional<Lnorm3d> operator()(const Eigen::VectorXd& t) const
  {
    const double sigma = std::exp(t[1]);
    const double gap = std::exp(t[2]);
    const double d = anchor - gap;
    if (!std::isfinite(t[0]) || !(sigma > 0) || !std::isfinite(sigma) || !std::isfinite(d))
      return std::nullopt;
    return Lnorm3d(t[0], sigma, d);
  }

  Eigen::VectorXd inverse(const Lnorm3d& p) const
  {
    return Eigen::Vector3d(p.mu(), std::log(p.sigma()), std::log(anchor - p.d()));
  }
};

struct Norm3Coords
{
  std::optional<Norm3d> operator()(const Eigen::VectorXd& t) const
  {
    const double sigma = std::exp(t[1]);
    if (!std::isfinite(t[0]) || !(sigma > 0) || !std::isfinite(sigma))
      return std::nullopt;
    return Norm3d(t[0], sigma, 0.0);
  }

  Eigen::VectorXd inverse(const Norm3d& p) const
  {
    return Eigen::Vector2d(p.location(), std::log(p.sigma()));
  }
};

struct Moments
{
  double mean;
  double sd;
};

Moments weighted_moments(const Eigen::VectorXd& x, const Eigen::VectorXd& w)
{
  const double total = w.sum();
  const double mean = x.dot(w) / total;
  const double var = (x.array() - mean).square().matrix().dot(w) / total;
  return {mean, std::sqrt(var)};
}

} // namespace

double sse_objective(const Histogram& density_hist, const Distribution& params, bool width_weighted)
{
  if (!density_hist.is_density())
    throw std::invalid_argument("sse_objective: histogram must be normalized to a density");
  const Eigen::VectorXd weights = width_weighted
                                    ? density_hist.widths()
                                    : Eigen::VectorXd::Ones(density_hist.bins()).eval();
  const Eigen::VectorXd centers = density_hist.centers();
  return std::visit(
    [&](const auto& p) { return sse_at(centers, density_hist.values(), weights, p); }, params);
}

FitResult fit_histogram(const Histogram& hist, Family family, const HistFitOptions& options)
{
  options.optimizer.validate();
  if (hist.bins() < 4)
    throw InputError("fit_histogram: a three-parameter family needs at least 4 bins");
  const Histogram dens = normalize(hist);

  const Eigen::VectorXd centers = dens.centers();
  const Eigen::VectorXd& density = dens.values();
  const Eigen::VectorXd weights = options.width_weighted
                                    ? dens.widths()
                                    : Eigen::VectorXd::Ones(dens.bins()).eval();
  const Eigen::VectorXd mass = density.cwiseProduct(dens.widths());
  const Moments raw = weighted_moments(centers, mass);

  constexpr double inf = std::numeric_limits<double>::infinity();
  Rng jitter_rng(options.seed);
  auto jitter = [&] { return jitter_rng.uniform(0.8, 1.2); };

  auto run_all = [&](const auto& coords, Eigen::VectorXd start, auto&& perturb) {
    auto objective = [&](const Eigen::VectorXd& t) {
      const auto dist = coords(t);
      return dist ? sse_at(centers, density, weights, *dist) : inf;
    };
    FitResult out{Distribution{*coords(start)}, 0.0, 0, false, 0};
    NelderMeadResult best = nelder_mead(objective, start, options.optimizer);
    out.iterations = best.iterations;
    for (int r = 0; r < options.optimizer.restarts; ++r) {
      const Eigen::VectorXd restart = coords.inverse(perturb(*coords(best.argmin)));
      NelderMeadResult next = nelder_mead(objective, restart, options.optimizer);
      out.iterations += next.iterations;
      ++out.restarts_used;
      if (next.value < best.value)
        best = std::move(next);
    }
    out.params = *coords(best.argmin);
    out.converged = best.converged;
    out.sse = sse_objective(dens, out.params, options.width_weighted);
    return out;
  };

  if (family == Family::Norm3) {
    const Norm3Coords coords;
    const double sd = raw.sd > 0 ? raw.sd : dens.widths().mean();
    const Eigen::VectorXd start = coords.inverse(Norm3d(raw.mean, sd, 0.0));
    return run_all(coords, start, [&](const Norm3d& p) {
      const double shift = (jitter() - 1.0) * p.sigma();
      const double scale = jitter();
      return Norm3d(p.location() + shift, p.sigma() * scale, 0.0);
    });
  }

  const double anchor = centers[0];
  const Lnorm3Coords coords{anchor};
  double gap = 0.5 * (raw.mean - anchor);
  if (!(gap > 0))
    gap = 0.5 * dens.widths()[0];
  const Eigen::ArrayXd logs = (centers.array() - (anchor - gap)).log();
  const Moments lm = weighted_moments(logs.matrix(), mass);
  const double sigma0 = lm.sd > 1e-6 ? lm.sd : 1e-6;
  const Eigen::VectorXd start = coords.inverse(Lnorm3d(lm.mean, sigma0, anchor - gap));
  return run_all(coords, start, [&](const Lnorm3d& p) {
    const double g = (anchor - p.d()) * jitter();
    const double mu = p.mu() + std::log(jitter());
    const double sigma = p.sigma() * jitter();
    return Lnorm3d(mu, sigma, anchor - g);
  });
}

} // namespace refdist
