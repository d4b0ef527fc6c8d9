#include "refdist/errors.hpp"
#include "refdist/histogram.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace refdist;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v)
{
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v)
    out[i++] = x;
  return out;
}

} // namespace

TEST_CASE("normalize divides by width and total")
{
  const Histogram h(vec({0, 1, 3}), vec({2, 2}));
  const Histogram d = normalize(h);
  CHECK(d.is_density());
  CHECK(d.values()[0] == doctest::Approx(0.5));
  CHECK(d.values()[1] == doctest::Approx(0.25));
  CHECK(d.area() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.edges() == h.edges());
}

TEST_CASE("normalize is idempotent")
{
  const Histogram h(vec({0, 0.5, 1.7, 2, 5}), vec({3, 11, 4, 1}));
  const Histogram once = normalize(h);
  CHECK(normalize(once) == once);
}

TEST_CASE("normalize keeps the sample size")
{
  const Histogram h(vec({0, 1, 2}), vec({3, 1}), 4);
  CHECK(normalize(h).sample_size() == 4u);
}

TEST_CASE("empty histogram")
{
  CHECK_THROWS_AS(normalize(Histogram(vec({0, 1, 2}), vec({0, 0}))), EmptyHistogramError);
}

TEST_CASE("construction checks")
{
  CHECK_THROWS_AS(Histogram(vec({0, 1}), vec({1})), InputError);
  CHECK_THROWS_AS(Histogram(vec({0, 1, 1}), vec({1, 1})), InputError);
  CHECK_THROWS_AS(Histogram(vec({0, 2, 1}), vec({1, 1})), InputError);
  CHECK_THROWS_AS(Histogram(vec({0, 1, 2}), vec({1, -1})), InputError);
  CHECK_THROWS_AS(Histogram(vec({0, 1, 2}), vec({1, 1, 1})), InputError);
  CHECK_THROWS_AS(Histogram(vec({0, 1, 2}), vec({1, std::nan("")})), InputError);
  CHECK_THROWS_AS(Histogram::from_density(vec({0, 1, 2}), vec({0.5, 0.6})), InputError);
  CHECK_NOTHROW(Histogram::from_density(vec({0, 1, 2}), vec({0.5, 0.5})));
}

TEST_CASE("geometry")
{
  const Histogram h(vec({0, 1, 3}), vec({1, 1}));
  CHECK(h.bins() == 2);
  CHECK(h.widths() == vec({1, 2}));
  CHECK(h.centers() == vec({0.5, 2}));
}

TEST_CASE("average of normalized histograms")
{
  const std::vector<Histogram> hs{Histogram(vec({0, 1, 2, 3}), vec({1, 2, 1}), 4),
                                  Histogram(vec({0, 1, 2, 3}), vec({10, 0, 30}), 40)};
  const Histogram avg = average_normalized(hs);
  CHECK(avg.is_density());
  CHECK(avg.area() == doctest::Approx(1.0));
  CHECK(avg.values()[0] == doctest::Approx(0.5 * (0.25 + 0.25)));
  CHECK(avg.values()[1] == doctest::Approx(0.5 * (0.5 + 0.0)));
  CHECK(avg.values()[2] == doctest::Approx(0.5 * (0.25 + 0.75)));
  CHECK(avg.sample_size() == 44u);

  const std::vector<Histogram> mismatched{Histogram(vec({0, 1, 2}), vec({1, 1})),
                                          Histogram(vec({0, 1, 3}), vec({1, 1}))};
  CHECK_THROWS_AS(average_normalized(mismatched), InputError);
  CHECK_THROWS_AS(average_normalized(std::vector<Histogram>{}), InputError);
}
