// Acceptance suite: one line per criterion, nonzero exit if any fails.
// `--known-failure N` reports criterion N as usual but keeps it out of the
// exit status; if it unexpectedly passes, that is an error.

#include "oracles.hpp"

#include "refdist/cli.hpp"
#include "refdist/compare.hpp"
#include "refdist/distributions.hpp"
#include "refdist/histfit.hpp"
#include "refdist/io.hpp"
#include "refdist/quantile_solver.hpp"
#include "refdist/random.hpp"
#include "refdist/synth.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace refdist;
using refdist::io::json;

namespace {

struct Outcome
{
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args)
{
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double median(std::vector<double> v)
{
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int cli(const std::vector<std::string>& args, std::string* out = nullptr)
{
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  if (out)
    *out = o.str();
  if (code != 0)
    std::cerr << e.str();
  return code;
}

std::string slurp(const std::filesystem::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------

Outcome quantile_round_trip()
{
  Rng rng(20240601);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const Lnorm3d truth(rng.uniform(-1.0, 3.0), rng.uniform(0.05, 1.5), rng.uniform(-10.0, 100.0));
    const double alpha = i % 2 ? 0.025 : 0.05;
    const Lnorm3d got = solve_lnorm3_from_triple(triple_from_params(truth, alpha));
    // mu is a log-scale location and d a location; both are measured
    // relative to a scale that cannot vanish.
    const double e_mu = std::abs(got.mu() - truth.mu()) / std::max(std::abs(truth.mu()), 1.0);
    const double e_sigma = std::abs(got.sigma() - truth.sigma()) / truth.sigma();
    const double e_d =
      std::abs(got.d() - truth.d()) / std::max(std::abs(truth.d()), std::exp(truth.mu()));
    worst = std::max({worst, e_mu, e_sigma, e_d});
  }
  return {worst < 1e-9, fmt("max relative error %.3g over 1000 cases", worst)};
}

Outcome worked_triple()
{
  const Lnorm3d p = solve_lnorm3_from_triple({1.0, 2.0, 5.0, 0.025});
  const double e = expected_value(p);
  const double e_quad = oracle::integrate([&](double x) { return x * pdf(p, x); }, p.d(),
                                          std::numeric_limits<double>::infinity());
  double q_err = 0;
  for (auto [prob, want] : {std::pair{0.025, 1.0}, {0.5, 2.0}, {0.975, 5.0}})
    q_err = std::max(q_err, std::abs(oracle::lnorm3_quantile(p.mu(), p.sigma(), p.d(), prob) - want));
  const double err = std::max({std::abs(p.d() - 0.5), std::abs(p.mu() - std::log(1.5)),
                               std::abs(p.sigma() - std::log(3.0) / 1.959964),
                               std::abs(p.sigma() - std::log(3.0) / oracle::z_upper(0.025)),
                               std::abs(e - e_quad), q_err});
  const bool ok = err < 1e-6 && std::abs(e - 2.2551) < 1e-4;
  return {ok, fmt("d=%.9g mu=%.9g sigma=%.9g E=%.7f (quadrature %.7f), max deviation %.2g", p.d(),
                  p.mu(), p.sigma(), e, e_quad, err)};
}

Outcome histogram_recovery()
{
  const Lnorm3d truth(0.5, 0.3, 10.0);
  std::vector<double> e_mu, e_sigma;
  double worst_e = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Histogram h = build_histogram(sample(truth, 100000, seed), 50);
    HistFitOptions opts;
    opts.seed = seed;
    const auto p = std::get<Lnorm3d>(fit_histogram(h, Family::Lnorm3, opts).params);
    e_mu.push_back(std::abs(p.mu() / truth.mu() - 1));
    e_sigma.push_back(std::abs(p.sigma() / truth.sigma() - 1));
    worst_e = std::max(worst_e, std::abs(expected_value(p) / expected_value(truth) - 1));
  }
  const double m_mu = median(e_mu), m_sigma = median(e_sigma);
  return {m_mu < 0.02 && m_sigma < 0.02 && worst_e < 0.01,
          fmt("median rel. error mu %.4f, sigma %.4f; worst expected-value error %.5f", m_mu,
              m_sigma, worst_e)};
}

Outcome lnorm3_vs_norm3()
{
  Rng rng(77);
  int wins = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Lnorm3d truth(rng.uniform(0.5, 2.5), rng.uniform(0.3, 0.6), rng.uniform(-5.0, 50.0));
    const Histogram h = build_histogram(sample(truth, 10000, seed), 50);
    HistFitOptions opts;
    opts.seed = seed;
    const double s_l = fit_histogram(h, Family::Lnorm3, opts).sse;
    const double s_n = fit_histogram(h, Family::Norm3, opts).sse;
    wins += s_l <= s_n;
  }
  return {wins >= 19, fmt("sse(lnorm3) <= sse(norm3) in %d/20 seeds", wins)};
}

Outcome near_far(const std::filesystem::path& scratch)
{
  const auto cfg = scratch / "screen80.json";
  std::ofstream(cfg) << R"({"screen_percentile": 0.8, "n_tests": 20, "n": 10000})";
  std::string out;
  if (cli({"synth", "run", cfg.string(), "--seed", "1", "--out", (scratch / "c5").string()}, &out))
    return {false, "synth run failed"};
  const json g = json::parse(out);
  const double near = g["near_mean"], far = g["far_mean"], p = g["p_value"], d = g["effect_size"];
  const bool screened_ok = near < far && p < 0.01 && d > 0.5;

  int null_ok = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ExperimentReport r = pipeline_experiment(ExperimentConfig::screened_vs_open(1.0, seed));
    null_ok += r.group.p_value > 0.05;
  }
  return {screened_ok && null_ok >= 18,
          fmt("screened: Near %.4f < Far %.4f, p=%.3g, d=%.2f; unscreened: p>.05 in %d/20 seeds",
              near, far, p, d, null_ok)};
}

Outcome dfe_direction(const std::filesystem::path& scratch)
{
  const ExperimentReport r = pipeline_experiment(ExperimentConfig::screened_vs_open(0.8, 1));
  std::vector<DfeRecord> screened;
  for (const auto& rec : r.dfes)
    if (rec.other_dataset.rfind("screened", 0) == 0)
      screened.push_back(rec);
  const auto lower = std::count_if(screened.begin(), screened.end(),
                                   [](const DfeRecord& d) { return d.direction == Direction::Lower; });

  // A machine-generated physician prediction file: Lower everywhere.
  std::vector<PredictionEntry> preds;
  for (const auto& rec : screened)
    preds.push_back({rec.test_id, rec.gender, rec.other_dataset, Direction::Lower});
  const auto path = scratch / "predictions.csv";
  {
    std::ofstream f(path);
    io::write_predictions_csv(f, preds);
  }
  const ConcordanceReport c = concordance(screened, io::read_predictions_csv(path));
  const double frac = static_cast<double>(lower) / static_cast<double>(screened.size());
  return {frac >= 0.95 && c.coverage >= 0.95,
          fmt("Lower in %lld/%zu screened-vs-open comparisons; concordance %.3f",
              static_cast<long long>(lower), screened.size(), c.coverage)};
}

Outcome hygiene()
{
  Rng rng(4242);
  double norm_err = 0, rt_err = 0;
  for (int i = 0; i < 100; ++i) {
    const Lnorm3d l(rng.uniform(-1.0, 3.0), rng.uniform(0.05, 1.5), rng.uniform(-10.0, 100.0));
    const Norm3d n(rng.uniform(-5.0, 5.0), rng.uniform(0.05, 5.0), rng.uniform(-10.0, 100.0));
    constexpr double inf = std::numeric_limits<double>::infinity();
    norm_err = std::max(
      norm_err, std::abs(oracle::integrate_split([&](double x) { return pdf(l, x); }, l.d(),
                                                 oracle::lnorm3_quantile(l.mu(), l.sigma(), l.d(), 0.5),
                                                 inf) - 1));
    norm_err = std::max(
      norm_err, std::abs(oracle::integrate_split([&](double x) { return pdf(n, x); }, -inf,
                                                 n.d() + n.mu(), inf) - 1));
    for (double p : {1e-4, 0.025, 0.25, 0.5, 0.75, 0.975, 1 - 1e-4}) {
      rt_err = std::max(rt_err, std::abs(cdf(l, quantile(l, p)) - p) / p);
      rt_err = std::max(rt_err, std::abs(cdf(n, quantile(n, p)) - p) / p);
    }
  }

  double bc_err = 0;
  for (double m : {-0.5, 0.0, 0.8}) {
    const BoxCoxd b(2.0, 0.6, 1.0, m);
    const boost::math::normal ref(2.0 - 4 * 0.6 + 1 + m, 0.6);
    for (double x = b.origin() + 1e-3; x < 8; x += 0.01)
      bc_err = std::max(bc_err, std::abs(pdf(b, x) - boost::math::pdf(ref, x)));
  }

  // Against quadrature over the grid's own range (discretization error) and
  // over the whole support (adds the truncated tails).
  double l1_err = 0, l1_full_err = 0;
  for (int i = 0; i < 5; ++i) {
    const Lnorm3d a(rng.uniform(0.5, 2.5), rng.uniform(0.3, 0.6), rng.uniform(-5.0, 50.0));
    const Lnorm3d b(a.mu() + rng.uniform(-0.3, 0.3), a.sigma() * rng.uniform(0.8, 1.2),
                    a.d() + rng.uniform(-1.0, 1.0));
    const DistanceRecord rec = grid_distance(a, b, Metric::L1Grid);
    const auto diff = [&](double x) { return std::abs(pdf(a, x) - pdf(b, x)); };
    const double lo = std::min(a.d(), b.d()), kink = std::max(a.d(), b.d());
    const double same = oracle::integrate(diff, rec.range.lo, rec.range.hi, 1e-10);
    const double full = oracle::integrate(diff, lo, kink) +
                        oracle::integrate(diff, kink, std::numeric_limits<double>::infinity());
    l1_err = std::max(l1_err, std::abs(rec.value - same));
    l1_full_err = std::max(l1_full_err, std::abs(rec.value - full));
  }

  // The automatic range cuts 5e-4 of each tail, which biases this value by
  // about 4e-3; a range covering both normals to 1e-23 is used instead.
  const Norm3d n0(0, 1, 0), n1(1, 1, 0);
  const double skl = symmetric_kl(n0, n1, kDefaultGridPoints, GridRange{-10, 11});
  const double skl_auto = symmetric_kl(n0, n1);
  const bool ok = norm_err < 1e-6 && rt_err < 1e-9 && bc_err < 1e-12 && l1_err < 1e-3 &&
                  l1_full_err < 1e-3 && std::abs(skl - 1.0) < 1e-3;
  return {ok, fmt("normalization %.2g, cdf/quantile %.2g, Box-Cox p=1 %.2g, L1 grid vs quadrature "
                  "%.2g (whole support %.2g), symmetric KL %.6f on [-10, 11] (%.6f on auto range)",
                  norm_err, rt_err, bc_err, l1_err, l1_full_err, skl, skl_auto)};
}

Outcome determinism(const std::filesystem::path& scratch)
{
  const auto cfg = scratch / "det.json";
  std::ofstream(cfg) << R"({"screen_percentile": 0.8, "n_tests": 6, "n": 5000})";
  const std::vector<std::pair<std::string, std::string>> runs{{"d1", "1"}, {"d2", "1"}, {"d3", "3"}};
  for (const auto& [dir, jobs] : runs)
    if (cli({"synth", "run", cfg.string(), "--seed", "99", "--out", (scratch / dir).string(),
             "--jobs", jobs}))
      return {false, "synth run failed"};

  int files = 0;
  for (const char* f : {"fits.csv", "dfe.csv", "distances.csv", "group.json", "kde_near_far.csv",
                        "config.json"}) {
    const std::string ref = slurp(scratch / "d1" / f);
    if (ref.empty() || ref != slurp(scratch / "d2" / f) || ref != slurp(scratch / "d3" / f))
      return {false, fmt("%s differs between runs", f)};
    ++files;
  }

  const auto hist = scratch / "h.csv";
  {
    std::ofstream h(hist);
    io::write_histogram_csv(h, build_histogram(sample(Lnorm3d(0.5, 0.3, 10), 20000, 5), 40));
  }
  std::string a, b;
  if (cli({"fit-hist", hist.string(), "--seed", "3"}, &a) || cli({"fit-hist", hist.string(), "--seed", "3"}, &b))
    return {false, "fit-hist failed"};
  if (a != b)
    return {false, "fit-hist output differs between runs"};
  return {true, fmt("%d report files identical across 3 runs (jobs 1, 1, 3); fit-hist identical", files)};
}

} // namespace

int main(int argc, char** argv)
{
  std::vector<int> known;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--known-failure" && i + 1 < argc) {
      known.push_back(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--known-failure N]...\n";
      return 2;
    }
  }
  const auto scratch = oracle::scratch_dir("acceptance");
  struct Criterion
  {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
    {1, "quantile-solver round trip", 1, quantile_round_trip},
    {2, "worked triple (1, 2, 5)", 1, worked_triple},
    {3, "histogram fit recovery", 30, histogram_recovery},
    {4, "lnorm3 fits right-skewed histograms at least as well as norm3", 30, lnorm3_vs_norm3},
    {5, "Near/Far distances under exclusion", 60, [&] { return near_far(scratch); }},
    {6, "DFE direction and concordance", 30, [&] { return dfe_direction(scratch); }},
    {7, "numerical hygiene", 10, hygiene},
    {8, "determinism", 60, [&] { return determinism(scratch); }},
  };

  int failed = 0, known_failed = 0, unexpected = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = o.pass && in_time;
    const bool is_known = std::find(known.begin(), known.end(), c.id) != known.end();
    failed += !pass;
    known_failed += !pass && is_known;
    unexpected += pass && is_known;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " -- "
              << o.detail
              << fmt(" [%.2f s, limit %.0f s%s]", secs, c.limit_s, in_time ? "" : ", too slow")
              << (is_known ? (pass ? " (listed as a known failure but passed)" : " (known failure)") : "")
              << std::endl;
  }
  std::filesystem::remove_all(scratch);
  if (failed == 0)
    std::cout << "all criteria passed" << std::endl;
  else
    std::cout << "FAILED: " << failed << " criteria (" << known_failed << " known)" << std::endl;
  return failed > known_failed || unexpected ? 1 : 0;
}
