#pragma once

#include "refdist/distributions.hpp"

namespace refdist {

/// Published "three values": reference-interval endpoints and the median.
/// `lower` is the alpha quantile, `upper` the 1 - alpha quantile.
struct QuantileTriple
{
  double lower;
  double median;
  double upper;
  double alpha = 0.025;

  /// Throws InputError unless lower < median < upper and 0 < alpha < 0.5.
  void validate() const;
};

enum class SkewClass
{
  RightSkew,
  LeftSkew,
  Symmetric
};

inline constexpr double kDefaultSymmetryTolerance = 1e-6;

/// Symmetric iff |U + L - 2M| <= tol (U - L); otherwise by the sign of U + L - 2M.
SkewClass classify_skew(const QuantileTriple& triple, double tol = kDefaultSymmetryTolerance);

/// Closed-form shifted lognormal through the three quantiles.
///
/// With a = M - L, b = U - M and z = Phi^-1(1 - alpha) the solution is
///   d = M - ab/(b - a),  mu = log(ab/(b - a)),  sigma = log(b/a)/z,
/// which is the usual d = (M^2 - UL)/(2M - U - L) rearranged so that no
/// large terms cancel when the values sit far from zero.
///
/// Throws DegenerateSymmetricError for symmetric triples (d diverges) and
/// LeftSkewUnsupportedError for left-skewed ones.
Lnorm3d solve_lnorm3_from_triple(const QuantileTriple& triple,
                                 double tol = kDefaultSymmetryTolerance);

/// As above, but a left-skewed triple is fitted on the negated axis and
/// returned as a mirrored lognormal. Right-skewed triples give a plain Lnorm3.
Distribution solve_from_triple_allow_reflection(const QuantileTriple& triple,
                                                double tol = kDefaultSymmetryTolerance);

/// (q(alpha), q(0.5), q(1 - alpha)) of the given parameters.
QuantileTriple triple_from_params(const Lnorm3d& params, double alpha);

} // namespace refdist
