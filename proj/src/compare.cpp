#include "refdist/compare.hpp"

#include "refdist/errors.hpp"
#include "refdist/kde.hpp"
#include "refdist/stats.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace refdist {

namespace {

std::string lower_case(std::string_view text)
{
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

} // namespace

std::string_view to_string(Direction dir)
{
  switch (dir) {
    case Direction::Higher:
      return "higher";
    case Direction::Lower:
      return "lower";
    case Direction::Tie:
      return "tie";
  }
  return "tie";
}

Direction parse_direction(std::string_view text)
{
  const std::string t = lower_case(text);
  if (t == "higher")
    return Direction::Higher;
  if (t == "lower")
    return Direction::Lower;
  throw InputError("direction must be 'higher' or 'lower', got '" + std::string(text) + "'");
}

std::string_view to_string(Gender g)
{
  return g == Gender::M ? "M" : "F";
}

Gender parse_gender(std::string_view text)
{
  if (text == "M" || text == "m")
    return Gender::M;
  if (text == "F" || text == "f")
    return Gender::F;
  throw InputError("gender must be 'M' or 'F', got '" + std::string(text) + "'");
}

DfeResult dfe(const Distribution& baseline, const Distribution& other)
{
  const double magnitude = expected_value(other) - expected_value(baseline);
  if (magnitude > 0)
    return {Direction::Higher, magnitude};
  if (magnitude < 0)
    return {Direction::Lower, magnitude};
  return {Direction::Tie, 0.0};
}

DfeRecord make_dfe_record(std::string test_id,
                          Gender gender,
                          std::string baseline_dataset,
                          const Distribution& baseline,
                          std::string other_dataset,
                          const Distribution& other)
{
  const DfeResult r = dfe(baseline, other);
  return {std::move(test_id),       gender,
          std::move(baseline_dataset), std::move(other_dataset),
          expected_value(baseline), expected_value(other),
          r.direction,              r.magnitude};
}

ConcordanceReport concordance(const std::vector<DfeRecord>& records,
                              const std::vector<PredictionEntry>& predictions)
{
  std::map<PredictionKey, Direction> lookup;
  for (const auto& p : predictions) {
    PredictionKey key{p.test_id, p.gender, p.dataset};
    if (!lookup.emplace(key, p.predicted_direction).second)
      throw InputError("duplicate prediction for " + p.test_id + " (" +
                       std::string(to_string(p.gender)) + ") " + p.dataset);
  }

  std::vector<const DfeRecord*> sorted;
  sorted.reserve(records.size());
  for (const auto& r : records)
    sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const DfeRecord* a, const DfeRecord* b) {
    return std::tie(a->test_id, a->gender, a->other_dataset) <
           std::tie(b->test_id, b->gender, b->other_dataset);
  });

  ConcordanceReport report;
  for (const DfeRecord* r : sorted) {
    PredictionKey key{r->test_id, r->gender, r->other_dataset};
    const auto it = lookup.find(key);
    if (it == lookup.end())
      throw MissingPredictionError("no prediction for " + r->test_id + " (" +
                                   std::string(to_string(r->gender)) + ") " + r->other_dataset);
    const bool match = r->direction != Direction::Tie && r->direction == it->second;
    report.rows.push_back({*r, it->second, match});
    if (match) {
      report.matches.push_back(key);
    } else {
      report.mismatches.push_back(key);
      if (r->direction == Direction::Tie)
        report.ties.push_back(key);
    }
  }
  if (!records.empty())
    report.coverage =
      static_cast<double>(report.matches.size()) / static_cast<double>(records.size());
  return report;
}

std::string_view to_string(Metric m)
{
  switch (m) {
    case Metric::L1Grid:
      return "l1";
    case Metric::L2Grid:
      return "l2";
    case Metric::SymKL:
      return "skl";
  }
  return "l1";
}

Metric parse_metric(std::string_view text)
{
  const std::string t = lower_case(text);
  if (t == "l1" || t == "l1grid")
    return Metric::L1Grid;
  if (t == "l2" || t == "l2grid")
    return Metric::L2Grid;
  if (t == "skl" || t == "symkl")
    return Metric::SymKL;
  throw InputError("metric must be l1, l2 or skl, got '" + std::string(text) + "'");
}

GridRange auto_range(const Distribution& a, const Distribution& b)
{
  return {std::min(quantile(a, kAutoRangeTail), quantile(b, kAutoRangeTail)),
          std::max(quantile(a, 1.0 - kAutoRangeTail), quantile(b, 1.0 - kAutoRangeTail))};
}

DistanceRecord grid_distance(const Distribution& a,
                             const Distribution& b,
                             Metric metric,
                             Eigen::Index n_points,
                             std::optional<GridRange> range)
{
  if (n_points < 2)
    throw InputError("grid_distance: at least 2 grid points are required");
  const GridRange r = range ? *range : auto_range(a, b);
  if (!(r.lo < r.hi) || !std::isfinite(r.lo) || !std::isfinite(r.hi))
    throw RangeError("grid_distance: range must satisfy lo < hi");
  if (range) {
    for (const Distribution* dist : {&a, &b})
      if (!(cdf(*dist, r.hi) - cdf(*dist, r.lo) > 0))
        throw RangeError("grid_distance: a " + std::string(family_name(*dist)) +
                         " density has no mass on the requested range");
  }

  const Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(n_points, r.lo, r.hi);
  const double dx = (r.hi - r.lo) / static_cast<double>(n_points - 1);
  const Eigen::ArrayXd fa = pdf(a, x).array();
  const Eigen::ArrayXd fb = pdf(b, x).array();

  double raw = 0.0;
  switch (metric) {
    case Metric::L1Grid:
      raw = (fa - fb).abs().sum();
      break;
    case Metric::L2Grid:
      raw = (fa - fb).square().sum();
      break;
    case Metric::SymKL: {
      const Support<double> sa = support(a);
      const Support<double> sb = support(b);
      Eigen::Index used = 0;
      for (Eigen::Index i = 0; i < n_points; ++i) {
        if (!sa.contains(x[i]) || !sb.contains(x[i]))
          continue;
        const double pa = std::max(fa[i], kSymKlFloor);
        const double pb = std::max(fb[i], kSymKlFloor);
        raw += (pa - pb) * std::log(pa / pb);
        ++used;
      }
      if (used == 0)
        throw SupportError("symmetric_kl: the supports do not overlap on the grid");
      break;
    }
  }

  DistanceRecord rec;
  rec.metric = metric;
  rec.raw_sum = raw;
  rec.value = dx * raw;
  rec.n_points = n_points;
  rec.range = r;
  return rec;
}

double symmetric_kl(const Distribution& a,
                    const Distribution& b,
                    Eigen::Index n_points,
                    std::optional<GridRange> range)
{
  return grid_distance(a, b, Metric::SymKL, n_points, range).value;
}

WelchResult welch_t_test(const Eigen::Ref<const Eigen::VectorXd>& a,
                         const Eigen::Ref<const Eigen::VectorXd>& b)
{
  if (a.size() < 2 || b.size() < 2)
    throw InsufficientDataError("welch_t_test: each group needs at least two values");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double va = sample_variance(a) / na;
  const double vb = sample_variance(b) / nb;
  const double diff = a.mean() - b.mean();
  const double se2 = va + vb;

  if (!(se2 > 0)) {
    if (diff == 0)
      return {0.0, na + nb - 2, 1.0};
    return {std::copysign(std::numeric_limits<double>::infinity(), diff), na + nb - 2, 0.0};
  }

  const double t = diff / std::sqrt(se2);
  const double df = se2 * se2 / (va * va / (na - 1) + vb * vb / (nb - 1));
  const boost::math::students_t_distribution<double> dist(df);
  const double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  return {t, df, std::clamp(p, 0.0, 1.0)};
}

double cohens_d(const Eigen::Ref<const Eigen::VectorXd>& a, const Eigen::Ref<const Eigen::VectorXd>& b)
{
  if (a.size() < 2 || b.size() < 2)
    throw InsufficientDataError("cohens_d: each group needs at least two values");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double pooled =
    std::sqrt(((na - 1) * sample_variance(a) + (nb - 1) * sample_variance(b)) / (na + nb - 2));
  const double diff = a.mean() - b.mean();
  if (!(pooled > 0))
    return diff == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
  return diff / pooled;
}

DatasetPair make_pair_key(std::string a, std::string b)
{
  if (b < a)
    std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::map<std::string, Eigen::VectorXd> split_near_far(const std::vector<DistanceRecord>& distances,
                                                      const std::set<DatasetPair>& near_pairs)
{
  // Sorting first keeps the group vectors independent of record order.
  std::vector<const DistanceRecord*> sorted;
  for (const auto& d : distances)
    sorted.push_back(&d);
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto* x, const auto* y) {
    return std::tie(x->test_id, x->gender, x->dataset_a, x->dataset_b, x->value) <
           std::tie(y->test_id, y->gender, y->dataset_a, y->dataset_b, y->value);
  });

  std::vector<double> near, far;
  for (const auto* d : sorted) {
    if (near_pairs.count(make_pair_key(d->dataset_a, d->dataset_b)))
      near.push_back(d->value);
    else
      far.push_back(d->value);
  }
  std::map<std::string, Eigen::VectorXd> out;
  out["near"] = Eigen::Map<Eigen::VectorXd>(near.data(), static_cast<Eigen::Index>(near.size()));
  out["far"] = Eigen::Map<Eigen::VectorXd>(far.data(), static_cast<Eigen::Index>(far.size()));
  return out;
}

GroupReport group_analysis(const std::vector<DistanceRecord>& distances,
                           const std::set<DatasetPair>& near_pairs)
{
  const auto groups = split_near_far(distances, near_pairs);
  const Eigen::VectorXd& near = groups.at("near");
  const Eigen::VectorXd& far = groups.at("far");
  if (near.size() < 2 || far.size() < 2)
    throw InsufficientDataError("group_analysis: Near and Far groups need at least two distances "
                                "each (have " +
                                std::to_string(near.size()) + " and " +
                                std::to_string(far.size()) + ")");
  const WelchResult w = welch_t_test(far, near);
  GroupReport rep;
  rep.near_mean = near.mean();
  rep.far_mean = far.mean();
  rep.t_statistic = w.t_statistic;
  rep.df = w.df;
  rep.p_value = w.p_value;
  rep.effect_size = cohens_d(far, near);
  rep.n_near = static_cast<std::size_t>(near.size());
  rep.n_far = static_cast<std::size_t>(far.size());
  return rep;
}

KdeTable distance_kde_export(const std::map<std::string, Eigen::VectorXd>& groups,
                             Eigen::Index n_points)
{
  if (groups.empty())
    throw InputError("distance_kde_export: no groups");
  if (n_points < 2)
    throw InputError("distance_kde_export: at least 2 grid points are required");

  std::vector<Kde> kdes;
  KdeTable table;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& [label, values] : groups) {
    if (values.size() < 2)
      throw InsufficientDataError("distance_kde_export: group '" + label +
                                  "' needs at least two distances");
    kdes.emplace_back(values);
    const double h = kdes.back().bandwidth();
    lo = std::min(lo, values.minCoeff() - 3 * h);
    hi = std::max(hi, values.maxCoeff() + 3 * h);
    table.labels.push_back(label);
  }
  table.grid = Eigen::VectorXd::LinSpaced(n_points, lo, hi);
  table.density.resize(n_points, static_cast<Eigen::Index>(kdes.size()));
  for (std::size_t k = 0; k < kdes.size(); ++k)
    table.density.col(static_cast<Eigen::Index>(k)) = kdes[k].evaluate(table.grid);
  return table;
}

} // namespace refdist
