#include "refdist/errors.hpp"
#include "refdist/nelder_mead.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace refdist;

namespace {

double rosenbrock(const Eigen::VectorXd& x)
{
  return 100 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1 - x[0], 2);
}

// Compass search: a slow but simple derivative-free baseline.
Eigen::VectorXd compass_search(const Objective& f, Eigen::VectorXd x, double step, int max_eval)
{
  double fx = f(x);
  int evals = 1;
  while (step > 1e-12 && evals < max_eval) {
    bool improved = false;
    for (Eigen::Index i = 0; i < x.size() && !improved; ++i)
      for (double sign : {1.0, -1.0}) {
        Eigen::VectorXd y = x;
        y[i] += sign * step;
        const double fy = f(y);
        ++evals;
        if (fy < fx) {
          x = y;
          fx = fy;
          improved = true;
          break;
        }
      }
    if (!improved)
      step /= 2;
  }
  return x;
}

} // namespace

TEST_CASE("convex quadratic")
{
  const Objective f = [](const Eigen::VectorXd& x) {
    return std::pow(x[0] - 3, 2) + 10 * std::pow(x[1] + 1, 2) + 0.5 * std::pow(x[2], 2);
  };
  const NelderMeadResult r = nelder_mead(f, Eigen::Vector3d(0, 0, 1));
  CHECK(r.converged);
  CHECK(r.argmin[0] == doctest::Approx(3).epsilon(1e-6));
  CHECK(r.argmin[1] == doctest::Approx(-1).epsilon(1e-6));
  CHECK(std::abs(r.argmin[2]) < 1e-6);
  CHECK(r.value < 1e-12);
}

TEST_CASE("nonsmooth objective")
{
  const Objective f = [](const Eigen::VectorXd& x) {
    return std::abs(x[0] - 1) + std::abs(x[1] + 2);
  };
  const NelderMeadResult r = nelder_mead(f, Eigen::Vector2d(5, 5));
  CHECK(r.value < 1e-6);
}

TEST_CASE("Rosenbrock beats compass search")
{
  NelderMeadConfig cfg;
  cfg.max_iter = 5000;
  const Eigen::Vector2d start(-1.2, 1.0);
  const NelderMeadResult r = nelder_mead(rosenbrock, start, cfg);
  const Eigen::VectorXd c = compass_search(rosenbrock, start, 0.1, 200000);
  CHECK(r.converged);
  CHECK(r.value <= rosenbrock(c) + 1e-10);
  CHECK(r.argmin[0] == doctest::Approx(1).epsilon(1e-4));
  CHECK(r.argmin[1] == doctest::Approx(1).epsilon(1e-4));
}

TEST_CASE("best value never increases")
{
  const NelderMeadResult r = nelder_mead(rosenbrock, Eigen::Vector2d(-1.2, 1.0));
  REQUIRE(!r.best_history.empty());
  CHECK(r.best_history.size() == static_cast<std::size_t>(r.iterations));
  for (std::size_t i = 1; i < r.best_history.size(); ++i)
    CHECK(r.best_history[i] <= r.best_history[i - 1]);
  CHECK(r.best_history.back() == r.value);
}

TEST_CASE("iteration budget")
{
  NelderMeadConfig cfg;
  cfg.max_iter = 10;
  const NelderMeadResult r = nelder_mead(rosenbrock, Eigen::Vector2d(-1.2, 1.0), cfg);
  CHECK(r.iterations == 10);
  CHECK_FALSE(r.converged);
}

TEST_CASE("initial simplex")
{
  const Eigen::MatrixXd s = initial_simplex(Eigen::Vector2d(2.0, 0.0), 0.05);
  REQUIRE(s.rows() == 2);
  REQUIRE(s.cols() == 3);
  CHECK(s.col(0) == Eigen::Vector2d(2.0, 0.0));
  CHECK(s.col(1) == Eigen::Vector2d(2.1, 0.0));
  CHECK(s.col(2) == Eigen::Vector2d(2.0, 2.5e-4));
}

TEST_CASE("non-finite values")
{
  SUBCASE("inside the search they act as +inf")
  {
    const Objective f = [](const Eigen::VectorXd& x) {
      return x[0] <= 0 ? std::numeric_limits<double>::quiet_NaN() : std::pow(std::log(x[0]), 2);
    };
    const NelderMeadResult r = nelder_mead(f, Eigen::VectorXd::Constant(1, 0.2));
    CHECK(r.argmin[0] == doctest::Approx(1).epsilon(1e-6));
  }
  SUBCASE("at the start they are an error")
  {
    const Objective f = [](const Eigen::VectorXd&) { return std::numeric_limits<double>::infinity(); };
    CHECK_THROWS_AS(nelder_mead(f, Eigen::Vector2d(1, 1)), InitError);
  }
}

TEST_CASE("configuration checks")
{
  NelderMeadConfig cfg;
  cfg.contraction = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.expansion = 0.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.max_iter = -1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  CHECK_THROWS_AS(nelder_mead_simplex(rosenbrock, Eigen::MatrixXd::Zero(2, 2)), std::invalid_argument);
}
