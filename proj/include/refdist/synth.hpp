#pragma once

#include "refdist/compare.hpp"
#include "refdist/distributions.hpp"
#include "refdist/histfit.hpp"
#include "refdist/histogram.hpp"
#include "refdist/quantile_solver.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace refdist {

/// One synthetic reference population.
struct CohortSpec
{
  Lnorm3d truth{0.0, 1.0, 0.0};
  std::size_t n = 1;
  std::uint64_t seed = 0;
  /// Correlation between the covariate and the normal score underlying the value.
  double rho = 0.0;

  void validate() const;
};

struct Population
{
  Eigen::VectorXd values;
  /// Standard normal auxiliary variable (a BMI-like screening covariate).
  Eigen::VectorXd covariates;

  Eigen::Index size() const { return values.size(); }
};

/// values_i = d + exp(mu + sigma Z_i); covariate_i = rho Z_i + sqrt(1 - rho^2) E_i
/// with Z, E independent standard normals (a Gaussian copula).
Population generate_population(const CohortSpec& spec);

enum class RuleTarget
{
  TestValue,
  Covariate
};

enum class RuleKind
{
  /// Drop values above the threshold.
  UpperTail,
  /// Drop values below the threshold.
  LowerTail,
  /// Keep only values inside [threshold, upper].
  Band
};

enum class ThresholdMode
{
  Absolute,
  /// Thresholds are probabilities, resolved to empirical quantiles of the
  /// unfiltered population.
  Percentile
};

struct ExclusionRule
{
  RuleTarget target = RuleTarget::TestValue;
  RuleKind kind = RuleKind::UpperTail;
  ThresholdMode mode = ThresholdMode::Absolute;
  double threshold = 0.0;
  /// Upper end for Band.
  double upper = 0.0;

  void validate() const;
};

struct FilteredPopulation
{
  Population kept;
  std::size_t excluded = 0;
};

/// Keeps the members that satisfy every rule, in their original order.
/// Throws EmptyCohortError when nobody is left.
FilteredPopulation apply_exclusion(const Population& pop, std::span<const ExclusionRule> rules);

/// Equal-width bins. The automatic range is [min, max] of the samples, with
/// the last bin closed on the right so every sample is counted; with a fixed
/// range, samples outside it are dropped.
Histogram build_histogram(const Eigen::Ref<const Eigen::VectorXd>& samples,
                          int bins,
                          std::optional<GridRange> range = std::nullopt);

/// (q(alpha), q(0.5), q(1 - alpha)) of the samples, type-7 quantiles.
QuantileTriple empirical_triple(const Eigen::Ref<const Eigen::VectorXd>& samples, double alpha);

// ---------------------------------------------------------------------------
// End-to-end experiment
// ---------------------------------------------------------------------------

enum class CohortSource
{
  /// Published as a histogram; fitted by least squares.
  Histogram,
  /// Published as three quantiles; solved in closed form.
  Triple
};

struct CohortConfig
{
  std::string name;
  /// Cohorts sharing a group share their selection criteria: pairs inside a
  /// group are Near, pairs across groups are Far.
  std::string group;
  CohortSource source = CohortSource::Histogram;
  std::vector<ExclusionRule> exclusion;
};

struct ParamRange
{
  double lo;
  double hi;
};

struct ExperimentConfig
{
  std::size_t n_tests = 20;
  /// Population size per cohort before exclusion.
  std::size_t n = 10000;
  int bins = 50;
  double alpha = 0.025;
  std::uint64_t seed = 0;
  /// Per-test truth is drawn uniformly from these ranges.
  ParamRange mu{0.5, 2.5};
  ParamRange sigma{0.3, 0.6};
  ParamRange d{-5.0, 50.0};
  double rho = 0.7;
  std::vector<CohortConfig> cohorts;
  /// Cohort whose expected value the others are compared with.
  std::string baseline;
  /// The first metric drives the Near/Far analysis; all are reported.
  std::vector<Metric> metrics{Metric::L1Grid, Metric::L2Grid};
  Eigen::Index points = kDefaultGridPoints;
  bool reflect_left_skew = false;
  NelderMeadConfig optimizer;

  /// Four cohorts, two groups of two, a known baseline, sane ranges.
  void validate() const;

  /// Two screened cohorts published as quantile triples (upper-tail exclusion
  /// on the covariate at `percentile`) and two unscreened histogram cohorts.
  /// A percentile of 1 or more leaves the screened cohorts unfiltered.
  static ExperimentConfig screened_vs_open(double percentile, std::uint64_t seed);
};

struct CohortFit
{
  std::string test_id;
  std::string cohort;
  std::string group;
  CohortSource source = CohortSource::Histogram;
  Lnorm3d truth{0.0, 1.0, 0.0};
  Distribution params = Lnorm3d{0.0, 1.0, 0.0};
  /// Histogram cohorts only.
  std::optional<double> sse;
  std::optional<bool> converged;
  /// Triple cohorts only.
  std::optional<QuantileTriple> triple;
  std::size_t n_kept = 0;
  std::size_t n_excluded = 0;
  double expected = 0.0;
};

struct ExperimentReport
{
  std::vector<CohortFit> fits;
  std::vector<DfeRecord> dfes;
  std::vector<DistanceRecord> distances;
  GroupReport group;
  KdeTable kde;
};

/// For each synthetic test: draw a truth, generate and screen every cohort,
/// fit it, compute all pairwise distances and the DFE of each cohort against
/// the baseline; then run the Near/Far analysis on the first metric. Tests use
/// streams derived from (seed, test), so the report does not depend on `jobs`.
ExperimentReport pipeline_experiment(const ExperimentConfig& config, unsigned jobs = 1);

std::string_view to_string(CohortSource s);
std::string_view to_string(RuleTarget t);
std::string_view to_string(RuleKind k);
std::string_view to_string(ThresholdMode m);

} // namespace refdist
