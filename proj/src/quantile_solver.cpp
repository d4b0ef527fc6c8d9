#include "refdist/quantile_solver.hpp"

#include "refdist/errors.hpp"

#include <cmath>
#include <sstream>

namespace refdist {

void QuantileTriple::validate() const
{
  if (!(std::isfinite(lower) && std::isfinite(median) && std::isfinite(upper)))
    throw InputError("quantile triple: values must be finite");
  if (!(lower < median && median < upper))
    throw InputError("quantile triple: requires lower < median < upper");
  if (!(alpha > 0 && alpha < 0.5))
    throw InputError("quantile triple: alpha must lie in (0, 0.5)");
}

SkewClass classify_skew(const QuantileTriple& triple, double tol)
{
  // (U - M) - (M - L) avoids forming U + L when both are large.
  const double lower_gap = triple.median - triple.lower;
  const double upper_gap = triple.upper - triple.median;
  const double excess = upper_gap - lower_gap;
  if (std::abs(excess) <= tol * (triple.upper - triple.lower))
    return SkewClass::Symmetric;
  return excess > 0 ? SkewClass::RightSkew : SkewClass::LeftSkew;
}

Lnorm3d solve_lnorm3_from_triple(const QuantileTriple& triple, double tol)
{
  triple.validate();
  switch (classify_skew(triple, tol)) {
    case SkewClass::Symmetric:
      throw DegenerateSymmetricError(
        "quantile triple is symmetric: the lognormal shift diverges; fit a normal instead");
    case SkewClass::LeftSkew: {
      std::ostringstream msg;
      msg << "quantile triple is left-skewed (2*median > lower + upper); "
          << "enable reflected fitting to solve on -x (" << -triple.upper << ", "
          << -triple.median << ", " << -triple.lower << ") and mirror the result";
      throw LeftSkewUnsupportedError(msg.str());
    }
    case SkewClass::RightSkew:
      break;
  }

  const double a = triple.median - triple.lower;
  const double b = triple.upper - triple.median;
  const double z = -normal_quantile(triple.alpha);
  const double scale = a * b / (b - a); // M - d
  return Lnorm3d(std::log(scale), std::log(b / a) / z, triple.median - scale);
}

Distribution solve_from_triple_allow_reflection(const QuantileTriple& triple, double tol)
{
  triple.validate();
  if (classify_skew(triple, tol) != SkewClass::LeftSkew)
    return solve_lnorm3_from_triple(triple, tol);
  const QuantileTriple mirrored{-triple.upper, -triple.median, -triple.lower, triple.alpha};
  return ReflectedLnorm3d(solve_lnorm3_from_triple(mirrored, tol));
}

QuantileTriple triple_from_params(const Lnorm3d& params, double alpha)
{
  if (!(alpha > 0 && alpha < 0.5))
    throw InputError("triple_from_params: alpha must lie in (0, 0.5)");
  const double z = -normal_quantile(alpha);
  const double scale = std::exp(params.mu());
  return {params.d() + scale * std::exp(-params.sigma() * z),
          params.d() + scale,
          params.d() + scale * std::exp(params.sigma() * z),
          alpha};
}

} // namespace refdist
