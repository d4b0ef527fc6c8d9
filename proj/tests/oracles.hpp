#pragma once

// Reference computations used only by the tests. They rely on Boost.Math,
// which the library itself does not use for densities or quantiles.

#include <boost/math/distributions/lognormal.hpp>
#include <boost/math/distributions/normal.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <filesystem>
#include <limits>
#include <random>
#include <string>

namespace oracle {

inline double z_upper(double alpha)
{
  return boost::math::quantile(boost::math::complement(boost::math::normal(), alpha));
}

/// Adaptive Gauss-Kronrod; accepts infinite limits.
template <typename F>
double integrate(F&& f, double a, double b, double tol = 1e-12)
{
  double err = 0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, tol, &err);
}

/// Split at `mid` so a narrow peak sits at an interval endpoint.
template <typename F>
double integrate_split(F&& f, double a, double mid, double b)
{
  return integrate(f, a, mid) + integrate(f, mid, b);
}

/// For integrands with an integrable singularity at `a`: tanh-sinh on
/// [a, a + 1], Gauss-Kronrod beyond.
template <typename F>
double integrate_singular_left(F&& f, double a, double b)
{
  const double mid = std::min(a + 1.0, b);
  const double head = boost::math::quadrature::tanh_sinh<double>().integrate(f, a, mid, 1e-13);
  return mid < b ? head + integrate(f, mid, b) : head;
}

/// Boost lognormal shifted by d.
inline double lnorm3_quantile(double mu, double sigma, double d, double p)
{
  return d + boost::math::quantile(boost::math::lognormal(mu, sigma), p);
}

inline double lnorm3_pdf(double mu, double sigma, double d, double x)
{
  if (!(x > d))
    return 0.0;
  return boost::math::pdf(boost::math::lognormal(mu, sigma), x - d);
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name)
{
  const auto dir = std::filesystem::temp_directory_path() /
                   ("refdist_test_" + name + "_" + std::to_string(std::random_device{}()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace oracle
