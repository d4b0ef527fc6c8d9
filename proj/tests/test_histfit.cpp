#include "refdist/errors.hpp"
#include "refdist/histfit.hpp"
#include "refdist/synth.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace refdist;

namespace {

// Expected counts of `total` draws from `dist` on equal-width bins.
Histogram exact_histogram(const Distribution& dist, double lo, double hi, int bins, double total)
{
  const Eigen::VectorXd edges = Eigen::VectorXd::LinSpaced(bins + 1, lo, hi);
  Eigen::VectorXd counts(bins);
  for (int b = 0; b < bins; ++b)
    counts[b] = total * (cdf(dist, edges[b + 1]) - cdf(dist, edges[b]));
  return Histogram(edges, counts);
}

} // namespace

TEST_CASE("recovers lnorm3 from an exact histogram")
{
  const Lnorm3d truth(0.5, 0.3, 10.0);
  const Histogram h = exact_histogram(truth, quantile(truth, 1e-4), quantile(truth, 1 - 1e-4), 50, 1e5);
  const FitResult r = fit_histogram(h, Family::Lnorm3);
  REQUIRE(std::holds_alternative<Lnorm3d>(r.params));
  const auto& p = std::get<Lnorm3d>(r.params);
  CHECK(p.mu() == doctest::Approx(0.5).epsilon(2e-2));
  CHECK(p.sigma() == doctest::Approx(0.3).epsilon(2e-2));
  CHECK(expected_value(p) == doctest::Approx(expected_value(truth)).epsilon(1e-3));
  CHECK(r.sse < 1e-6);
}

TEST_CASE("recovers norm3 location and scale")
{
  const Norm3d truth(4.0, 1.5, 0.0);
  const Histogram h = exact_histogram(truth, -1.0, 9.0, 40, 1000);
  const FitResult r = fit_histogram(h, Family::Norm3);
  REQUIRE(std::holds_alternative<Norm3d>(r.params));
  const auto& p = std::get<Norm3d>(r.params);
  CHECK(p.d() == 0.0);
  CHECK(p.location() == doctest::Approx(4.0).epsilon(1e-3));
  CHECK(p.sigma() == doctest::Approx(1.5).epsilon(1e-2));
}

TEST_CASE("reported sse is the objective at the reported parameters")
{
  const Lnorm3d truth(1.0, 0.5, -2.0);
  const Histogram h = build_histogram(sample(truth, 5000, 3), 30);
  for (bool weighted : {false, true}) {
    HistFitOptions opts;
    opts.width_weighted = weighted;
    const FitResult r = fit_histogram(h, Family::Lnorm3, opts);
    CHECK(r.sse == sse_objective(normalize(h), r.params, weighted));
    CHECK(r.sse <= sse_objective(normalize(h), truth, weighted));
  }
}

TEST_CASE("fits are deterministic per seed")
{
  const Histogram h = build_histogram(sample(Lnorm3d(0.2, 0.6, 1.0), 2000, 9), 25);
  HistFitOptions opts;
  opts.seed = 17;
  const FitResult a = fit_histogram(h, Family::Lnorm3, opts);
  const FitResult b = fit_histogram(h, Family::Lnorm3, opts);
  CHECK(a.params == b.params);
  CHECK(a.sse == b.sse);
  CHECK(a.iterations == b.iterations);
}

TEST_CASE("restarts never make the fit worse")
{
  const Histogram h = build_histogram(sample(Lnorm3d(0.2, 0.9, 1.0), 3000, 4), 30);
  HistFitOptions none;
  none.optimizer.restarts = 0;
  const FitResult single = fit_histogram(h, Family::Lnorm3, none);
  const FitResult multi = fit_histogram(h, Family::Lnorm3);
  CHECK(multi.sse <= single.sse);
  CHECK(single.restarts_used == 0);
}

TEST_CASE("lnorm3 fits skewed data at least as well as norm3")
{
  const Histogram h = build_histogram(sample(Lnorm3d(1.0, 0.6, 5.0), 20000, 8), 50);
  const double s_l = fit_histogram(h, Family::Lnorm3).sse;
  const double s_n = fit_histogram(h, Family::Norm3).sse;
  CHECK(s_l <= s_n);
}

TEST_CASE("input checks")
{
  Eigen::VectorXd edges = Eigen::VectorXd::LinSpaced(4, 0, 3);
  const Histogram small(edges, Eigen::Vector3d(1, 2, 1));
  CHECK_THROWS_AS(fit_histogram(small, Family::Lnorm3), InputError);
  CHECK_THROWS_AS(sse_objective(small, Lnorm3d(0, 1, -1)), std::invalid_argument);
  CHECK(parse_family("norm3") == Family::Norm3);
  CHECK(to_string(Family::Lnorm3) == "lnorm3");
  CHECK_THROWS_AS(parse_family("gamma"), InputError);
}

TEST_CASE("sse_objective")
{
  const Histogram h = Histogram::from_density(Eigen::Vector3d(0, 1, 2), Eigen::Vector2d(0.5, 0.5));
  const Norm3d n(1.0, 1.0, 0.0);
  const double r0 = 0.5 - pdf(n, 0.5);
  const double r1 = 0.5 - pdf(n, 1.5);
  CHECK(sse_objective(h, n) == doctest::Approx(r0 * r0 + r1 * r1).epsilon(1e-15));
}

TEST_CASE("a histogram equal to a norm3 density at its centers is fitted exactly")
{
  const Norm3d truth(3.0, 1.2, 0.0);
  const Eigen::VectorXd edges = Eigen::VectorXd::LinSpaced(61, -7.0, 13.0);
  Eigen::VectorXd values(60);
  for (int b = 0; b < 60; ++b)
    values[b] = pdf(truth, 0.5 * (edges[b] + edges[b + 1]));
  const FitResult r = fit_histogram(Histogram(edges, values), Family::Norm3);
  CHECK(r.sse < 1e-12);
}

TEST_CASE("shifting every edge shifts d and nothing else")
{
  const Histogram h = build_histogram(sample(Lnorm3d(0.8, 0.4, 2.0), 5000, 21), 30);
  const double c = 37.5;
  const Eigen::VectorXd shifted = h.edges().array() + c;
  HistFitOptions opts;
  opts.seed = 4;
  const auto a = std::get<Lnorm3d>(fit_histogram(h, Family::Lnorm3, opts).params);
  const auto b = std::get<Lnorm3d>(fit_histogram(Histogram(shifted, h.values()), Family::Lnorm3, opts).params);
  CHECK(b.mu() == doctest::Approx(a.mu()).epsilon(1e-5));
  CHECK(b.sigma() == doctest::Approx(a.sigma()).epsilon(1e-5));
  CHECK(b.d() - c == doctest::Approx(a.d()).epsilon(1e-5).scale(std::exp(a.mu())));
}

TEST_CASE("recovery improves with sample size and bin count")
{
  const Lnorm3d truth(0.5, 0.3, 10.0);
  double previous = INFINITY;
  for (auto [n, bins] : {std::pair{1000, 15}, {10000, 30}, {100000, 50}}) {
    std::vector<double> err;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      HistFitOptions opts;
      opts.seed = seed;
      const Histogram h = build_histogram(sample(truth, n, 1000 * seed + bins), bins);
      const auto p = std::get<Lnorm3d>(fit_histogram(h, Family::Lnorm3, opts).params);
      err.push_back(std::abs(p.mu() / truth.mu() - 1) + std::abs(p.sigma() / truth.sigma() - 1));
    }
    std::nth_element(err.begin(), err.begin() + 10, err.end());
    const double median = err[10];
    MESSAGE("n=" << n << " bins=" << bins << " median error " << median);
    CHECK(median < previous);
    previous = median;
  }
}
