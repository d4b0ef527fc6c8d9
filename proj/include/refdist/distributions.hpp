#pragma once

#include "refdist/random.hpp"
#include "refdist/special.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

namespace refdist {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Open interval (lower, upper) outside of which a density vanishes.
template <typename Scalar>
struct Support
{
  Scalar lower = -std::numeric_limits<Scalar>::infinity();
  Scalar upper = std::numeric_limits<Scalar>::infinity();

  bool contains(Scalar x) const { return x > lower && x < upper; }
};

namespace detail {

template <typename Scalar>
void require_scale(Scalar sigma, const char* family)
{
  if (!(sigma > 0) || !std::isfinite(sigma))
    throw std::invalid_argument(std::string(family) + ": sigma must be positive and finite");
}

template <typename Scalar>
void require_finite(Scalar v, const char* family, const char* name)
{
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string(family) + ": " + name + " must be finite");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Shifted (three-parameter) lognormal: log(X - d) ~ N(mu, sigma^2), X > d.
// ---------------------------------------------------------------------------

template <typename Scalar = double>
class Lnorm3
{
public:
  using value_type = Scalar;

  Lnorm3(Scalar mu, Scalar sigma, Scalar d)
    : mu_(mu)
    , sigma_(sigma)
    , d_(d)
  {
    detail::require_finite(mu, "lnorm3", "mu");
    detail::require_scale(sigma, "lnorm3");
    detail::require_finite(d, "lnorm3", "d");
  }

  Scalar mu() const { return mu_; }
  Scalar sigma() const { return sigma_; }
  Scalar d() const { return d_; }

  bool operator==(const Lnorm3&) const = default;

private:
  Scalar mu_;
  Scalar sigma_;
  Scalar d_;
};

template <typename Scalar>
Scalar pdf(const Lnorm3<Scalar>& p, Scalar x)
{
  if (!(x > p.d()))
    return Scalar(0);
  const Scalar offset = x - p.d();
  const Scalar z = (std::log(offset) - p.mu()) / p.sigma();
  return normal_pdf(z) / (p.sigma() * offset);
}

template <typename Scalar>
Scalar cdf(const Lnorm3<Scalar>& p, Scalar x)
{
  if (!(x > p.d()))
    return Scalar(0);
  return normal_cdf((std::log(x - p.d()) - p.mu()) / p.sigma());
}

template <typename Scalar>
Scalar quantile(const Lnorm3<Scalar>& p, Scalar prob)
{
  return p.d() + std::exp(p.mu() + p.sigma() * normal_quantile(prob));
}

/// exp(mu + sigma^2/2) + d
template <typename Scalar>
Scalar expected_value(const Lnorm3<Scalar>& p)
{
  return std::exp(p.mu() + p.sigma() * p.sigma() / 2) + p.d();
}

template <typename Scalar>
Support<Scalar> support(const Lnorm3<Scalar>& p)
{
  return {p.d(), std::numeric_limits<Scalar>::infinity()};
}

/// n draws of d + exp(mu + sigma Z). Identical seeds give identical draws.
template <typename Scalar>
VectorX<Scalar> sample(const Lnorm3<Scalar>& p, std::size_t n, std::uint64_t seed)
{
  Rng rng(seed);
  VectorX<Scalar> out(static_cast<Eigen::Index>(n));
  for (auto& v : out)
    v = p.d() + std::exp(p.mu() + p.sigma() * Scalar(rng.normal()));
  return out;
}

// ---------------------------------------------------------------------------
// Mirror image of a shifted lognormal: -X follows `mirror()`. Produced only
// when a left-skewed quantile triple is fitted with reflection enabled.
// ---------------------------------------------------------------------------

template <typename Scalar = double>
class ReflectedLnorm3
{
public:
  using value_type = Scalar;

  explicit ReflectedLnorm3(Lnorm3<Scalar> mirror)
    : mirror_(mirror)
  {}

  const Lnorm3<Scalar>& mirror() const { return mirror_; }

  bool operator==(const ReflectedLnorm3&) const = default;

private:
  Lnorm3<Scalar> mirror_;
};

template <typename Scalar>
Scalar pdf(const ReflectedLnorm3<Scalar>& p, Scalar x)
{
  return pdf(p.mirror(), -x);
}

template <typename Scalar>
Scalar cdf(const ReflectedLnorm3<Scalar>& p, Scalar x)
{
  if (!(-x > p.mirror().d()))
    return Scalar(1);
  return normal_ccdf((std::log(-x - p.mirror().d()) - p.mirror().mu()) / p.mirror().sigma());
}

template <typename Scalar>
Scalar quantile(const ReflectedLnorm3<Scalar>& p, Scalar prob)
{
  return -quantile(p.mirror(), Scalar(1) - prob);
}

template <typename Scalar>
Scalar expected_value(const ReflectedLnorm3<Scalar>& p)
{
  return -expected_value(p.mirror());
}

template <typename Scalar>
Support<Scalar> support(const ReflectedLnorm3<Scalar>& p)
{
  return {-std::numeric_limits<Scalar>::infinity(), -p.mirror().d()};
}

// ---------------------------------------------------------------------------
// Normal with a redundant shift: mean d + mu, standard deviation sigma.
// Only d + mu is identifiable; (mu + c, d - c) describe the same density.
// ---------------------------------------------------------------------------

template <typename Scalar = double>
class Norm3
{
public:
  using value_type = Scalar;

  Norm3(Scalar mu, Scalar sigma, Scalar d)
    : mu_(mu)
    , sigma_(sigma)
    , d_(d)
  {
    detail::require_finite(mu, "norm3", "mu");
    detail::require_scale(sigma, "norm3");
    detail::require_finite(d, "norm3", "d");
  }

  Scalar mu() const { return mu_; }
  Scalar sigma() const { return sigma_; }
  Scalar d() const { return d_; }
  Scalar location() const { return d_ + mu_; }

  bool operator==(const Norm3&) const = default;

private:
  Scalar mu_;
  Scalar sigma_;
  Scalar d_;
};

template <typename Scalar>
Scalar pdf(const Norm3<Scalar>& p, Scalar x)
{
  return normal_pdf((x - p.d() - p.mu()) / p.sigma()) / p.sigma();
}

template <typename Scalar>
Scalar cdf(const Norm3<Scalar>& p, Scalar x)
{
  return normal_cdf((x - p.d() - p.mu()) / p.sigma());
}

template <typename Scalar>
Scalar quantile(const Norm3<Scalar>& p, Scalar prob)
{
  return p.location() + p.sigma() * normal_quantile(prob);
}

template <typename Scalar>
Scalar expected_value(const Norm3<Scalar>& p)
{
  return p.location();
}

template <typename Scalar>
Support<Scalar> support(const Norm3<Scalar>&)
{
  return {};
}

// ---------------------------------------------------------------------------
// Modified Box-Cox density
//
//   h(x) = u^(p-1) / (sqrt(2 pi) sigma) * exp(-(((u^p - 1)/p - m)^2) / (2 sigma^2)),
//   u = x - mu + 4 sigma > 0.
//
// With y(u) = (u^p - 1)/p, h is the density of x = mu - 4 sigma + (1 + p y)^(1/p)
// for y ~ N(m, sigma^2), restricted to the range that y(u) can reach. That range
// is (-1/p, inf) for p > 0 and (-inf, -1/p) for p < 0, so h carries total mass
// below one whenever the normal puts weight outside it. h is used as-is; the
// `normalized_*` functions divide by that mass.
// ---------------------------------------------------------------------------

template <typename Scalar = double>
class BoxCox
{
public:
  using value_type = Scalar;

  BoxCox(Scalar mu, Scalar sigma, Scalar p, Scalar m)
    : mu_(mu)
    , sigma_(sigma)
    , p_(p)
    , m_(m)
  {
    detail::require_finite(mu, "boxcox", "mu");
    detail::require_scale(sigma, "boxcox");
    detail::require_finite(p, "boxcox", "p");
    detail::require_finite(m, "boxcox", "m");
    // The p -> 0 (logarithmic) limit is a different formula; not supported.
    if (p == 0)
      throw std::domain_error("boxcox: power p must be nonzero");
  }

  Scalar mu() const { return mu_; }
  Scalar sigma() const { return sigma_; }
  Scalar p() const { return p_; }
  Scalar m() const { return m_; }

  /// Left end of the support, mu - 4 sigma.
  Scalar origin() const { return mu_ - 4 * sigma_; }

  /// Transformed value y for x inside the support.
  Scalar transform(Scalar x) const
  {
    return (std::pow(x - origin(), p_) - Scalar(1)) / p_;
  }

  Scalar inverse_transform(Scalar y) const
  {
    return origin() + std::pow(Scalar(1) + p_ * y, Scalar(1) / p_);
  }

  bool operator==(const BoxCox&) const = default;

private:
  Scalar mu_;
  Scalar sigma_;
  Scalar p_;
  Scalar m_;
};

template <typename Scalar>
Scalar pdf(const BoxCox<Scalar>& b, Scalar x)
{
  const Scalar u = x - b.origin();
  if (!(u > 0))
    return Scalar(0);
  const Scalar z = (b.transform(x) - b.m()) / b.sigma();
  return std::pow(u, b.p() - Scalar(1)) * normal_pdf(z) / b.sigma();
}

namespace detail {

// Standardized end of the reachable y-range, (-1/p - m)/sigma.
template <typename Scalar>
Scalar boxcox_edge(const BoxCox<Scalar>& b)
{
  return (Scalar(-1) / b.p() - b.m()) / b.sigma();
}

} // namespace detail

/// Total mass of h, i.e. its integral over the support.
template <typename Scalar>
Scalar mass(const BoxCox<Scalar>& b)
{
  const Scalar edge = detail::boxcox_edge(b);
  return b.p() > 0 ? normal_ccdf(edge) : normal_cdf(edge);
}

/// Integral of h from the support origin to x (not renormalized).
template <typename Scalar>
Scalar cdf(const BoxCox<Scalar>& b, Scalar x)
{
  if (!(x > b.origin()))
    return Scalar(0);
  const Scalar z = (b.transform(x) - b.m()) / b.sigma();
  if (b.p() > 0)
    return normal_cdf(z) - normal_cdf(detail::boxcox_edge(b));
  return normal_cdf(z);
}

template <typename Scalar>
Scalar normalized_pdf(const BoxCox<Scalar>& b, Scalar x)
{
  return pdf(b, x) / mass(b);
}

/// Quantile of the normalized view h / mass(h).
template <typename Scalar>
Scalar quantile(const BoxCox<Scalar>& b, Scalar prob)
{
  if (!(prob > 0 && prob < 1))
    throw std::domain_error("boxcox quantile: probability must lie in (0, 1)");
  const Scalar below = b.p() > 0 ? normal_cdf(detail::boxcox_edge(b)) : Scalar(0);
  const Scalar z = normal_quantile(below + prob * mass(b));
  return b.inverse_transform(b.m() + b.sigma() * z);
}

template <typename Scalar>
Support<Scalar> support(const BoxCox<Scalar>& b)
{
  return {b.origin(), std::numeric_limits<Scalar>::infinity()};
}

using Lnorm3d = Lnorm3<double>;
using ReflectedLnorm3d = ReflectedLnorm3<double>;
using Norm3d = Norm3<double>;
using BoxCoxd = BoxCox<double>;

/// Any of the supported density families, in double precision.
using Distribution = std::variant<Lnorm3d, ReflectedLnorm3d, Norm3d, BoxCoxd>;

inline double pdf(const Distribution& dist, double x)
{
  return std::visit([x](const auto& p) { return pdf(p, x); }, dist);
}

inline double cdf(const Distribution& dist, double x)
{
  return std::visit([x](const auto& p) { return cdf(p, x); }, dist);
}

inline double quantile(const Distribution& dist, double prob)
{
  return std::visit([prob](const auto& p) { return quantile(p, prob); }, dist);
}

inline Support<double> support(const Distribution& dist)
{
  return std::visit([](const auto& p) { return support(p); }, dist);
}

/// Expected value; the Box-Cox family has no closed form and is rejected.
inline double expected_value(const Distribution& dist)
{
  return std::visit(
    [](const auto& p) -> double {
      if constexpr (std::is_same_v<std::decay_t<decltype(p)>, BoxCoxd>)
        throw std::invalid_argument("expected_value: not available for boxcox");
      else
        return expected_value(p);
    },
    dist);
}

inline std::string_view family_name(const Distribution& dist)
{
  constexpr std::string_view names[] = {"lnorm3", "lnorm3_reflected", "norm3", "boxcox"};
  return names[dist.index()];
}

/// Element-wise density over an Eigen expression.
template <typename Dist, typename Derived>
auto pdf(const Dist& dist, const Eigen::DenseBase<Derived>& x)
{
  return x.derived().unaryExpr([dist](typename Derived::Scalar v) { return pdf(dist, v); });
}

/// Element-wise CDF over an Eigen expression.
template <typename Dist, typename Derived>
auto cdf(const Dist& dist, const Eigen::DenseBase<Derived>& x)
{
  return x.derived().unaryExpr([dist](typename Derived::Scalar v) { return cdf(dist, v); });
}

} // namespace refdist
