#include "refdist/synth.hpp"

#include "refdist/errors.hpp"
#include "refdist/parallel.hpp"
#include "refdist/random.hpp"
#include "refdist/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace refdist {

void CohortSpec::validate() const
{
  if (n < 1)
    throw InputError("cohort: n must be at least 1");
  if (!(std::abs(rho) <= 1))
    throw InputError("cohort: rho must lie in [-1, 1]");
}

Population generate_population(const CohortSpec& spec)
{
  spec.validate();
  Rng rng(spec.seed);
  const auto n = static_cast<Eigen::Index>(spec.n);
  const double noise = std::sqrt(1.0 - spec.rho * spec.rho);
  Population pop{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const double z = rng.normal();
    const double e = rng.normal();
    pop.values[i] = spec.truth.d() + std::exp(spec.truth.mu() + spec.truth.sigma() * z);
    pop.covariates[i] = spec.rho * z + noise * e;
  }
  return pop;
}

void ExclusionRule::validate() const
{
  if (!std::isfinite(threshold) || (kind == RuleKind::Band && !std::isfinite(upper)))
    throw InputError("exclusion rule: thresholds must be finite");
  if (kind == RuleKind::Band && !(threshold < upper))
    throw InputError("exclusion rule: band requires lower < upper");
  if (mode == ThresholdMode::Percentile) {
    const bool ok = threshold >= 0 && threshold <= 1 &&
                    (kind != RuleKind::Band || (upper >= 0 && upper <= 1));
    if (!ok)
      throw InputError("exclusion rule: percentile thresholds must lie in [0, 1]");
  }
}

FilteredPopulation apply_exclusion(const Population& pop, std::span<const ExclusionRule> rules)
{
  struct Resolved
  {
    const Eigen::VectorXd* data;
    RuleKind kind;
    double lo;
    double hi;
  };
  std::vector<Resolved> resolved;
  for (const auto& rule : rules) {
    rule.validate();
    const Eigen::VectorXd& data =
      rule.target == RuleTarget::TestValue ? pop.values : pop.covariates;
    double lo = rule.threshold;
    double hi = rule.upper;
    if (rule.mode == ThresholdMode::Percentile) {
      const Eigen::VectorXd sorted = sorted_copy(data);
      lo = sorted_quantile(sorted, rule.threshold);
      if (rule.kind == RuleKind::Band)
        hi = sorted_quantile(sorted, rule.upper);
    }
    resolved.push_back({&data, rule.kind, lo, hi});
  }

  std::vector<Eigen::Index> keep;
  keep.reserve(static_cast<std::size_t>(pop.size()));
  for (Eigen::Index i = 0; i < pop.size(); ++i) {
    const bool ok = std::all_of(resolved.begin(), resolved.end(), [i](const Resolved& r) {
      const double v = (*r.data)[i];
      switch (r.kind) {
        case RuleKind::UpperTail:
          return v <= r.lo;
        case RuleKind::LowerTail:
          return v >= r.lo;
        case RuleKind::Band:
          return v >= r.lo && v <= r.hi;
      }
      return true;
    });
    if (ok)
      keep.push_back(i);
  }
  if (keep.empty())
    throw EmptyCohortError("exclusion rules removed every member of the cohort");

  const auto m = static_cast<Eigen::Index>(keep.size());
  FilteredPopulation out{{Eigen::VectorXd(m), Eigen::VectorXd(m)},
                         static_cast<std::size_t>(pop.size() - m)};
  for (Eigen::Index k = 0; k < m; ++k) {
    out.kept.values[k] = pop.values[keep[static_cast<std::size_t>(k)]];
    out.kept.covariates[k] = pop.covariates[keep[static_cast<std::size_t>(k)]];
  }
  return out;
}

Histogram build_histogram(const Eigen::Ref<const Eigen::VectorXd>& samples,
                          int bins,
                          std::optional<GridRange> range)
{
  if (bins < 2)
    throw InputError("build_histogram: at least 2 bins are required");
  if (samples.size() < 2)
    throw InputError("build_histogram: at least 2 samples are required");
  const double lo = range ? range->lo : samples.minCoeff();
  const double hi = range ? range->hi : samples.maxCoeff();
  if (!(lo < hi))
    throw InputError("build_histogram: samples have zero range");

  const Eigen::VectorXd edges = Eigen::VectorXd::LinSpaced(bins + 1, lo, hi);
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(bins);
  std::size_t used = 0;
  const double width = (hi - lo) / bins;
  for (const double v : samples) {
    if (v < lo || v > hi)
      continue;
    auto b = static_cast<Eigen::Index>(std::floor((v - lo) / width));
    b = std::clamp<Eigen::Index>(b, 0, bins - 1);
    // Floating-point division can land one bin off near an edge.
    if (v < edges[b] && b > 0)
      --b;
    else if (b + 1 < bins && v >= edges[b + 1])
      ++b;
    counts[b] += 1.0;
    ++used;
  }
  return Histogram(edges, counts, used);
}

QuantileTriple empirical_triple(const Eigen::Ref<const Eigen::VectorXd>& samples, double alpha)
{
  const Eigen::VectorXd sorted = sorted_copy(samples);
  return {sorted_quantile(sorted, alpha), sorted_quantile(sorted, 0.5),
          sorted_quantile(sorted, 1.0 - alpha), alpha};
}

void ExperimentConfig::validate() const
{
  if (n_tests < 1 || n < 2)
    throw InputError("experiment: n_tests must be >= 1 and n >= 2");
  if (bins < 4)
    throw InputError("experiment: at least 4 bins are required");
  if (!(alpha > 0 && alpha < 0.5))
    throw InputError("experiment: alpha must lie in (0, 0.5)");
  if (!(sigma.lo > 0) || !(mu.lo <= mu.hi && sigma.lo <= sigma.hi && d.lo <= d.hi))
    throw InputError("experiment: invalid truth ranges");
  if (!(std::abs(rho) <= 1))
    throw InputError("experiment: rho must lie in [-1, 1]");
  if (metrics.empty())
    throw InputError("experiment: at least one metric is required");
  if (points < 2)
    throw InputError("experiment: at least 2 grid points are required");
  if (cohorts.size() != 4)
    throw InputError("experiment: exactly four cohorts are required");

  std::map<std::string, int> group_sizes;
  std::set<std::string> names;
  for (const auto& c : cohorts) {
    if (c.name.empty() || !names.insert(c.name).second)
      throw InputError("experiment: cohort names must be unique and nonempty");
    ++group_sizes[c.group];
    for (const auto& r : c.exclusion)
      r.validate();
  }
  if (group_sizes.size() != 2 || group_sizes.begin()->second != 2)
    throw InputError("experiment: cohorts must form two groups of two");
  if (!names.count(baseline))
    throw InputError("experiment: baseline '" + baseline + "' is not a cohort");
  optimizer.validate();
}

ExperimentConfig ExperimentConfig::screened_vs_open(double percentile, std::uint64_t seed)
{
  ExperimentConfig cfg;
  cfg.seed = seed;
  std::vector<ExclusionRule> screen;
  if (percentile < 1.0)
    screen.push_back({RuleTarget::Covariate, RuleKind::UpperTail, ThresholdMode::Percentile,
                      percentile, 0.0});
  cfg.cohorts = {
    {"screened_a", "screened", CohortSource::Triple, screen},
    {"screened_b", "screened", CohortSource::Triple, screen},
    {"open_a", "open", CohortSource::Histogram, {}},
    {"open_b", "open", CohortSource::Histogram, {}},
  };
  cfg.baseline = "open_a";
  return cfg;
}

namespace {

std::string test_label(std::size_t t, std::size_t total)
{
  const int width = static_cast<int>(std::to_string(total).size());
  std::ostringstream os;
  os << 'T' << std::setw(std::max(width, 2)) << std::setfill('0') << (t + 1);
  return os.str();
}

struct TestOutcome
{
  std::vector<CohortFit> fits;
  std::vector<DfeRecord> dfes;
  std::vector<DistanceRecord> distances;
};

TestOutcome run_test(const ExperimentConfig& cfg, std::size_t t)
{
  const Rng root(cfg.seed);
  Rng truth_rng = root.split(2 * t);
  const double mu = truth_rng.uniform(cfg.mu.lo, cfg.mu.hi);
  const double sigma = truth_rng.uniform(cfg.sigma.lo, cfg.sigma.hi);
  const double d = truth_rng.uniform(cfg.d.lo, cfg.d.hi);
  const Lnorm3d truth(mu, sigma, d);
  const std::string test_id = test_label(t, cfg.n_tests);

  TestOutcome out;
  Rng seeds = root.split(2 * t + 1);
  for (const auto& cohort : cfg.cohorts) {
    const std::uint64_t pop_seed = static_cast<std::uint64_t>(seeds.uniform() * 0x1.0p53);
    const std::uint64_t fit_seed = static_cast<std::uint64_t>(seeds.uniform() * 0x1.0p53);
    const Population pop = generate_population({truth, cfg.n, pop_seed, cfg.rho});
    const FilteredPopulation filtered = apply_exclusion(pop, cohort.exclusion);

    CohortFit fit;
    fit.test_id = test_id;
    fit.cohort = cohort.name;
    fit.group = cohort.group;
    fit.source = cohort.source;
    fit.truth = truth;
    fit.params = truth;
    fit.n_kept = static_cast<std::size_t>(filtered.kept.size());
    fit.n_excluded = filtered.excluded;
    if (cohort.source == CohortSource::Triple) {
      const QuantileTriple triple = empirical_triple(filtered.kept.values, cfg.alpha);
      fit.triple = triple;
      fit.params = cfg.reflect_left_skew ? solve_from_triple_allow_reflection(triple)
                                         : Distribution{solve_lnorm3_from_triple(triple)};
    } else {
      const Histogram hist = build_histogram(filtered.kept.values, cfg.bins);
      HistFitOptions opts;
      opts.optimizer = cfg.optimizer;
      opts.seed = fit_seed;
      const FitResult r = fit_histogram(hist, Family::Lnorm3, opts);
      fit.params = r.params;
      fit.sse = r.sse;
      fit.converged = r.converged;
    }
    fit.expected = expected_value(fit.params);
    out.fits.push_back(std::move(fit));
  }

  const auto& fits = out.fits;
  const auto base = std::find_if(fits.begin(), fits.end(),
                                 [&](const CohortFit& f) { return f.cohort == cfg.baseline; });
  for (const auto& f : fits)
    if (&f != &*base)
      out.dfes.push_back(
        make_dfe_record(test_id, Gender::M, base->cohort, base->params, f.cohort, f.params));

  for (std::size_t i = 0; i < fits.size(); ++i)
    for (std::size_t j = i + 1; j < fits.size(); ++j)
      for (const Metric m : cfg.metrics) {
        DistanceRecord rec = grid_distance(fits[i].params, fits[j].params, m, cfg.points);
        rec.test_id = test_id;
        rec.gender = Gender::M;
        rec.dataset_a = fits[i].cohort;
        rec.dataset_b = fits[j].cohort;
        out.distances.push_back(std::move(rec));
      }
  return out;
}

} // namespace

ExperimentReport pipeline_experiment(const ExperimentConfig& config, unsigned jobs)
{
  config.validate();
  std::vector<TestOutcome> outcomes(config.n_tests);
  parallel_for(config.n_tests, jobs, [&](std::size_t t) { outcomes[t] = run_test(config, t); });

  ExperimentReport report;
  for (auto& o : outcomes) {
    std::move(o.fits.begin(), o.fits.end(), std::back_inserter(report.fits));
    std::move(o.dfes.begin(), o.dfes.end(), std::back_inserter(report.dfes));
    std::move(o.distances.begin(), o.distances.end(), std::back_inserter(report.distances));
  }

  std::set<DatasetPair> near;
  for (const auto& a : config.cohorts)
    for (const auto& b : config.cohorts)
      if (a.name != b.name && a.group == b.group)
        near.insert(make_pair_key(a.name, b.name));

  std::vector<DistanceRecord> primary;
  for (const auto& rec : report.distances)
    if (rec.metric == config.metrics.front())
      primary.push_back(rec);
  report.group = group_analysis(primary, near);
  report.kde = distance_kde_export(split_near_far(primary, near));
  return report;
}

std::string_view to_string(CohortSource s)
{
  return s == CohortSource::Triple ? "triple" : "histogram";
}

std::string_view to_string(RuleTarget t)
{
  return t == RuleTarget::Covariate ? "covariate" : "test_value";
}

std::string_view to_string(RuleKind k)
{
  switch (k) {
    case RuleKind::UpperTail:
      return "upper_tail";
    case RuleKind::LowerTail:
      return "lower_tail";
    case RuleKind::Band:
      return "band";
  }
  return "upper_tail";
}

std::string_view to_string(ThresholdMode m)
{
  return m == ThresholdMode::Percentile ? "percentile" : "absolute";
}

} // namespace refdist
