#pragma once

#include "refdist/distributions.hpp"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace refdist {

// ---------------------------------------------------------------------------
// Expected-value direction (DFE)
// ---------------------------------------------------------------------------

enum class Direction
{
  Higher,
  Lower,
  Tie
};

std::string_view to_string(Direction dir);
/// Accepts "higher" / "lower" (any case).
Direction parse_direction(std::string_view text);

enum class Gender
{
  M,
  F
};

std::string_view to_string(Gender g);
Gender parse_gender(std::string_view text);

struct DfeResult
{
  Direction direction;
  /// E[other] - E[baseline], in test units.
  double magnitude;
};

/// Compares expected values; an exact zero difference is a Tie.
DfeResult dfe(const Distribution& baseline, const Distribution& other);

struct DfeRecord
{
  std::string test_id;
  Gender gender = Gender::M;
  std::string baseline_dataset;
  std::string other_dataset;
  double baseline_expected = 0.0;
  double other_expected = 0.0;
  Direction direction = Direction::Tie;
  double magnitude = 0.0;
};

DfeRecord make_dfe_record(std::string test_id,
                          Gender gender,
                          std::string baseline_dataset,
                          const Distribution& baseline,
                          std::string other_dataset,
                          const Distribution& other);

struct PredictionEntry
{
  std::string test_id;
  Gender gender = Gender::M;
  std::string dataset;
  Direction predicted_direction = Direction::Higher;
};

/// (test_id, gender, dataset)
using PredictionKey = std::tuple<std::string, Gender, std::string>;

struct ConcordanceRow
{
  DfeRecord record;
  Direction predicted;
  bool match;
};

struct ConcordanceReport
{
  std::vector<ConcordanceRow> rows;
  std::vector<PredictionKey> matches;
  std::vector<PredictionKey> mismatches;
  /// Subset of `mismatches` whose computed direction was a Tie.
  std::vector<PredictionKey> ties;
  /// matches / records, or 0 for an empty record set.
  double coverage = 0.0;
};

/// Pairs every record with the prediction for (test, gender, other dataset).
/// Throws MissingPredictionError naming the first key without a prediction.
/// Duplicate prediction keys are an InputError. Rows are ordered by key.
ConcordanceReport concordance(const std::vector<DfeRecord>& records,
                              const std::vector<PredictionEntry>& predictions);

// ---------------------------------------------------------------------------
// Grid distances
// ---------------------------------------------------------------------------

enum class Metric
{
  L1Grid,
  L2Grid,
  SymKL
};

std::string_view to_string(Metric m);
/// "l1", "l2", "skl" (also the enum spellings).
Metric parse_metric(std::string_view text);

struct GridRange
{
  double lo;
  double hi;
};

inline constexpr double kAutoRangeTail = 5e-4;
inline constexpr double kSymKlFloor = 1e-300;
inline constexpr Eigen::Index kDefaultGridPoints = 10000;

/// [min(q_a(t), q_b(t)), max(q_a(1 - t), q_b(1 - t))] with t = 5e-4.
GridRange auto_range(const Distribution& a, const Distribution& b);

struct DistanceRecord
{
  std::string test_id;
  Gender gender = Gender::M;
  std::string dataset_a;
  std::string dataset_b;
  Metric metric = Metric::L1Grid;
  /// Riemann sum dx * sum_i g(x_i).
  double value = 0.0;
  /// sum_i g(x_i) without the dx factor.
  double raw_sum = 0.0;
  Eigen::Index n_points = 0;
  GridRange range{0.0, 0.0};
};

/// Distance between two densities sampled at n_points equally spaced points
/// on [lo, hi] (both ends included, dx = (hi - lo)/(n_points - 1)):
///   L1Grid: dx * sum |f_a - f_b|
///   L2Grid: dx * sum (f_a - f_b)^2
///   SymKL:  dx * sum (f_a - f_b) log(f_a / f_b), over grid points inside both
///           supports, with each density floored at 1e-300.
/// Without a range the auto range is used. A fixed range on which either
/// density has no mass throws RangeError; SymKL throws SupportError when the
/// supports do not meet on the grid.
DistanceRecord grid_distance(const Distribution& a,
                             const Distribution& b,
                             Metric metric = Metric::L1Grid,
                             Eigen::Index n_points = kDefaultGridPoints,
                             std::optional<GridRange> range = std::nullopt);

/// Symmetric Kullback-Leibler divergence on a grid (see grid_distance).
double symmetric_kl(const Distribution& a,
                    const Distribution& b,
                    Eigen::Index n_points = kDefaultGridPoints,
                    std::optional<GridRange> range = std::nullopt);

// ---------------------------------------------------------------------------
// Near / Far group statistics
// ---------------------------------------------------------------------------

struct WelchResult
{
  /// (mean_a - mean_b) / sqrt(var_a/n_a + var_b/n_b)
  double t_statistic;
  /// Welch-Satterthwaite degrees of freedom.
  double df;
  /// Two-sided.
  double p_value;
};

WelchResult welch_t_test(const Eigen::Ref<const Eigen::VectorXd>& a,
                         const Eigen::Ref<const Eigen::VectorXd>& b);

/// (mean_a - mean_b) / pooled sd, pooled sd from the (n - 1)-weighted variances.
double cohens_d(const Eigen::Ref<const Eigen::VectorXd>& a,
                const Eigen::Ref<const Eigen::VectorXd>& b);

/// Unordered dataset pair.
using DatasetPair = std::pair<std::string, std::string>;
DatasetPair make_pair_key(std::string a, std::string b);

struct GroupReport
{
  double near_mean = 0.0;
  double far_mean = 0.0;
  /// Welch test of far against near.
  double t_statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  /// Cohen's d of far against near, pooled sd.
  double effect_size = 0.0;
  std::size_t n_near = 0;
  std::size_t n_far = 0;
  std::string test = "welch_two_sided";
  std::string effect_size_kind = "cohens_d_pooled_sd";
};

/// Records whose pair is in `near_pairs` form the Near group, all others Far.
/// Each group needs at least two values (InsufficientDataError).
GroupReport group_analysis(const std::vector<DistanceRecord>& distances,
                           const std::set<DatasetPair>& near_pairs);

/// Per-group values, split by Near/Far.
std::map<std::string, Eigen::VectorXd> split_near_far(const std::vector<DistanceRecord>& distances,
                                                      const std::set<DatasetPair>& near_pairs);

struct KdeTable
{
  Eigen::VectorXd grid;
  std::vector<std::string> labels;
  /// One column per label.
  Eigen::MatrixXd density;
};

/// Gaussian KDE (Silverman bandwidth) of each group on one shared grid that
/// spans every group's data padded by three of its bandwidths.
KdeTable distance_kde_export(const std::map<std::string, Eigen::VectorXd>& groups,
                             Eigen::Index n_points = 512);

} // namespace refdist
