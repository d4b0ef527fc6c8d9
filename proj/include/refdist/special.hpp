#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace refdist {

template <typename Scalar>
inline constexpr Scalar kInvSqrt2Pi = Scalar(0.398942280401432677939946059934381868L);

/// Standard normal density.
template <typename Scalar>
Scalar normal_pdf(Scalar z)
{
  return kInvSqrt2Pi<Scalar> * std::exp(Scalar(-0.5) * z * z);
}

/// Standard normal CDF, Phi(z) = erfc(-z/sqrt(2))/2. erfc keeps full relative
/// precision in the lower tail, where 1 + erf would cancel.
template <typename Scalar>
Scalar normal_cdf(Scalar z)
{
  return Scalar(0.5) * std::erfc(-z / std::numbers::sqrt2_v<Scalar>);
}

/// Upper tail 1 - Phi(z) without cancellation.
template <typename Scalar>
Scalar normal_ccdf(Scalar z)
{
  return Scalar(0.5) * std::erfc(z / std::numbers::sqrt2_v<Scalar>);
}

namespace detail {

template <typename Scalar>
Scalar horner(Scalar x, const Scalar* c, int n)
{
  Scalar acc = c[n - 1];
  for (int i = n - 2; i >= 0; --i)
    acc = acc * x + c[i];
  return acc;
}

// Wichura (1988), algorithm AS 241, PPND16. Coefficients are lowest order first.
template <typename Scalar>
Scalar ppnd16(Scalar p)
{
  static constexpr Scalar a[] = {
    3.3871328727963666080e0,  1.3314166789178437745e+2, 1.9715909503065514427e+3,
    1.3731693765509461125e+4, 4.5921953931549871457e+4, 6.7265770927008700853e+4,
    3.3430575583588128105e+4, 2.5090809287301226727e+3};
  static constexpr Scalar b[] = {
    1.0,                      4.2313330701600911252e+1, 6.8718700749205790830e+2,
    5.3941960214247511077e+3, 2.1213794301586595867e+4, 3.9307895800092710610e+4,
    2.8729085735721942674e+4, 5.2264952788528545610e+3};
  static constexpr Scalar c[] = {
    1.42343711074968357734e0,  4.63033784615654529590e0,  5.76949722146069140550e0,
    3.64784832476320460504e0,  1.27045825245236838258e0,  2.41780725177450611770e-1,
    2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static constexpr Scalar d[] = {
    1.0,                       2.05319162663775882187e0,  1.67638483018380384940e0,
    6.89767334985100004550e-1, 1.48103976427480074590e-1, 1.51986665636164571966e-2,
    5.47593808499534494600e-4, 1.05075007164441684324e-9};
  static constexpr Scalar e[] = {
    6.65790464350110377720e0,  5.46378491116411436990e0,  1.78482653991729133580e0,
    2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static constexpr Scalar f[] = {
    1.0,                       5.99832206555887937690e-1, 1.36929880922735805310e-1,
    1.48753612908506148525e-2, 7.86869131145613259100e-4, 1.84631831751005468180e-5,
    1.42151175831644588870e-7, 2.04426310338993978564e-15};

  const Scalar q = p - Scalar(0.5);
  if (std::abs(q) <= Scalar(0.425)) {
    const Scalar r = Scalar(0.180625) - q * q;
    return q * horner(r, a, 8) / horner(r, b, 8);
  }
  Scalar r = std::sqrt(-std::log(q < 0 ? p : Scalar(1) - p));
  Scalar z;
  if (r <= Scalar(5)) {
    r -= Scalar(1.6);
    z = horner(r, c, 8) / horner(r, d, 8);
  } else {
    r -= Scalar(5);
    z = horner(r, e, 8) / horner(r, f, 8);
  }
  return q < 0 ? -z : z;
}

} // namespace detail

/// Inverse of the standard normal CDF on (0, 1).
///
/// A rational approximation followed by one Newton step on Phi. The residual
/// is taken on whichever tail is smaller so that it is computed at full
/// relative precision.
template <typename Scalar>
Scalar normal_quantile(Scalar prob)
{
  if (!(prob > 0 && prob < 1))
    throw std::domain_error("normal_quantile: probability must lie in (0, 1)");
  Scalar z = detail::ppnd16(prob);
  const Scalar density = normal_pdf(z);
  if (density > 0) {
    const Scalar residual = prob < Scalar(0.5) ? normal_cdf(z) - prob
                                               : (Scalar(1) - prob) - normal_ccdf(z);
    z -= residual / density;
  }
  return z;
}

} // namespace refdist
