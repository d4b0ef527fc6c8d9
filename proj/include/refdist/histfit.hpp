#pragma once

#include "refdist/distributions.hpp"
#include "refdist/histogram.hpp"
#include "refdist/nelder_mead.hpp"

#include <cstdint>
#include <string_view>

namespace refdist {

enum class Family
{
  Lnorm3,
  Norm3
};

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

struct HistFitOptions
{
  NelderMeadConfig optimizer;
  /// Weight each squared residual by its bin width.
  bool width_weighted = false;
  /// Seeds the jitter of restart points.
  std::uint64_t seed = 0;
};

struct FitResult
{
  Distribution params;
  /// sse_objective(hist, params) at the returned parameters.
  double sse = 0.0;
  /// Simplex iterations summed over every start.
  int iterations = 0;
  bool converged = false;
  int restarts_used = 0;
};

/// Sum over bins of (density_b - pdf(center_b))^2. The histogram must be on
/// the density scale. Parameters whose support misses some bins simply
/// contribute pdf = 0 there.
double sse_objective(const Histogram& density_hist,
                     const Distribution& params,
                     bool width_weighted = false);

/// Least-squares fit of a density family to the bin-center heights of a
/// histogram (normalized first if needed).
///
/// lnorm3 is searched over (mu, log sigma, log(c_min - d)), with c_min the
/// leftmost bin center, so every simplex vertex is a valid parameter set and
/// the fitted shift stays below c_min. norm3 is searched over
/// (d + mu, log sigma) and reported with d = 0, since only the sum is
/// identifiable.
///
/// The first start comes from a moment heuristic; each restart begins at the
/// best point so far with its shift gap, scale and exp(mu) jittered by up to
/// 20%. The best result over all starts is returned. Requires at least 4 bins.
FitResult fit_histogram(const Histogram& hist, Family family, const HistFitOptions& options = {});

} // namespace refdist
