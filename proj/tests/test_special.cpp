#include "oracles.hpp"

#include "refdist/special.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace refdist;

TEST_CASE("normal_cdf agrees with Boost across the real line")
{
  const boost::math::normal n;
  for (double z = -37.0; z <= 8.0; z += 0.125) {
    const double ref = boost::math::cdf(n, z);
    CHECK(normal_cdf(z) == doctest::Approx(ref).epsilon(1e-13));
    CHECK(normal_ccdf(-z) == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("normal_pdf")
{
  CHECK(normal_pdf(0.0) == doctest::Approx(1.0 / std::sqrt(2 * M_PI)).epsilon(1e-15));
  CHECK(normal_pdf(1.5) == doctest::Approx(boost::math::pdf(boost::math::normal(), 1.5)).epsilon(1e-14));
}

TEST_CASE("normal_quantile agrees with Boost")
{
  const boost::math::normal n;
  SUBCASE("central and moderate tails")
  {
    for (double p = 1e-6; p < 1.0; p += 0.0137) {
      const double ref = boost::math::quantile(n, p);
      CHECK(normal_quantile(p) == doctest::Approx(ref).epsilon(1e-14).scale(1.0));
    }
  }
  SUBCASE("deep tails")
  {
    for (int e = 7; e <= 300; e += 7) {
      const double p = std::pow(10.0, -e);
      const double ref = boost::math::quantile(n, p);
      CHECK(normal_quantile(p) == doctest::Approx(ref).epsilon(1e-14));
      CHECK(normal_quantile(1 - 1e-15) ==
            doctest::Approx(boost::math::quantile(n, 1 - 1e-15)).epsilon(1e-12));
    }
  }
  SUBCASE("the 97.5% point")
  {
    CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-15));
    CHECK(normal_quantile(0.5) == 0.0);
  }
}

TEST_CASE("normal_quantile inverts normal_cdf")
{
  for (double p : {1e-200, 1e-50, 1e-10, 0.001, 0.025, 0.3, 0.5, 0.7, 0.975, 0.999999}) {
    const double z = normal_quantile(p);
    const double back = p < 0.5 ? normal_cdf(z) : 1 - normal_ccdf(z);
    CHECK(back == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("normal_quantile rejects probabilities outside (0, 1)")
{
  CHECK_THROWS_AS(normal_quantile(0.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(-0.5), std::domain_error);
  CHECK_THROWS_AS(normal_quantile(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("single precision instantiation")
{
  CHECK(normal_quantile(0.975f) == doctest::Approx(1.959964f).epsilon(1e-6));
  CHECK(normal_cdf(1.0f) == doctest::Approx(0.8413447f).epsilon(1e-6));
}
