#include "refdist/cli.hpp"

#include "refdist/compare.hpp"
#include "refdist/errors.hpp"
#include "refdist/histfit.hpp"
#include "refdist/io.hpp"
#include "refdist/kde.hpp"
#include "refdist/parallel.hpp"
#include "refdist/synth.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>

namespace refdist {
namespace {

using io::json;

// Routes spdlog to the caller's error stream for the duration of one run.
class LogScope
{
public:
  explicit LogScope(std::ostream& err)
      : previous_(spdlog::default_logger())
  {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
    auto logger = std::make_shared<spdlog::logger>("refdist", sink);
    logger->set_pattern("refdist: %l: %v");
    logger->set_level(spdlog::level::warn);
    std::optional<std::string> bad;
    if (const char* env = std::getenv("REFDIST_LOG")) {
      const std::string level = env;
      if (level == "error" || level == "warn" || level == "info" || level == "debug")
        logger->set_level(spdlog::level::from_str(level));
      else
        bad = level;
    }
    spdlog::set_default_logger(logger);
    if (bad)
      spdlog::warn("ignoring REFDIST_LOG='{}' (expected error, warn, info or debug)", *bad);
  }
  ~LogScope() { spdlog::set_default_logger(previous_); }
  LogScope(const LogScope&) = delete;
  LogScope& operator=(const LogScope&) = delete;

private:
  std::shared_ptr<spdlog::logger> previous_;
};

std::vector<std::string> split_list(const std::string& text)
{
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos)
      break;
    start = comma + 1;
  }
  return parts;
}

std::optional<GridRange> parse_range_arg(const std::string& text)
{
  if (text == "auto")
    return std::nullopt;
  const auto parts = split_list(text);
  if (parts.size() != 2)
    throw InputError("--range must be 'auto' or 'lo,hi', got '" + text + "'");
  const auto lo = io::parse_number(parts[0]);
  const auto hi = io::parse_number(parts[1]);
  if (!lo || !hi || !std::isfinite(*lo) || !std::isfinite(*hi) || !(*lo < *hi))
    throw InputError("--range needs finite lo < hi, got '" + text + "'");
  return GridRange{*lo, *hi};
}

// Writes to --out when given, else to the standard output stream.
template <typename F>
void emit(const std::string& path, std::ostream& out, F&& write)
{
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file)
    throw InputError("cannot write '" + path + "'");
  write(file);
}

std::string stem(const std::string& path)
{
  return std::filesystem::path(path).stem().string();
}

// Parameter sets of two files matched by (test_id, gender). Unlabelled
// records take the default label, which requires one record per file.
struct MatchedParams
{
  std::string test_id;
  Gender gender;
  Distribution a;
  Distribution b;
};

using LabelKey = std::pair<std::string, Gender>;

std::map<LabelKey, Distribution> label_records(const std::string& path,
                                               const std::string& default_id,
                                               Gender default_gender)
{
  const auto records = io::read_params_file(path);
  std::map<LabelKey, Distribution> out;
  for (const auto& r : records) {
    if (!r.test_id && records.size() > 1)
      throw InputError(path + ": records in a list need a test_id");
    const LabelKey key{r.test_id.value_or(default_id), r.gender.value_or(default_gender)};
    if (!out.emplace(key, r.params).second)
      throw InputError(path + ": duplicate record for test '" + key.first + "', gender " +
                       std::string(to_string(key.second)));
  }
  return out;
}

std::vector<MatchedParams> match_params(const std::string& path_a,
                                        const std::string& path_b,
                                        const std::string& default_id,
                                        Gender default_gender)
{
  const auto a = label_records(path_a, default_id, default_gender);
  const auto b = label_records(path_b, default_id, default_gender);
  std::vector<MatchedParams> out;
  for (const auto& [key, dist] : a) {
    const auto it = b.find(key);
    if (it == b.end())
      throw InputError(path_b + ": no record for test '" + key.first + "', gender " +
                       std::string(to_string(key.second)));
    out.push_back({key.first, key.second, dist, it->second});
  }
  for (const auto& [key, dist] : b)
    if (!a.count(key))
      throw InputError(path_a + ": no record for test '" + key.first + "', gender " +
                       std::string(to_string(key.second)));
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct FitTripleArgs
{
  std::string input;
  bool reflect = false;
  std::string catalog;
  std::string out;
};

void cmd_fit_triple(const FitTripleArgs& args, std::ostream& out)
{
  const auto rows = io::read_triples_csv(args.input);
  std::map<std::string, io::TestCatalogEntry> catalog;
  if (!args.catalog.empty())
    catalog = io::read_catalog_csv(args.catalog);

  json result = json::array();
  for (const auto& row : rows) {
    const std::string where = args.input + ":" + std::to_string(row.line) + ": ";
    Distribution params = Lnorm3d(0.0, 1.0, 0.0);
    try {
      params = args.reflect ? solve_from_triple_allow_reflection(row.triple)
                            : Distribution{solve_lnorm3_from_triple(row.triple)};
    } catch (const NumericalError& e) {
      throw NumericalError(where + e.what());
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
    json item = {{"test_id", row.test_id},
                 {"gender", to_string(row.gender)},
                 {"alpha", row.triple.alpha},
                 {"lower", row.triple.lower},
                 {"median", row.triple.median},
                 {"upper", row.triple.upper},
                 {"params", io::to_json(params)}};
    if (!args.catalog.empty()) {
      const auto it = catalog.find(row.test_id);
      if (it == catalog.end())
        throw InputError(where + "test_id '" + row.test_id + "' is not in " + args.catalog);
      item["display_name"] = it->second.display_name;
      item["unit"] = it->second.unit;
    }
    result.push_back(std::move(item));
  }
  emit(args.out, out, [&](std::ostream& os) { os << result.dump(2) << '\n'; });
}

struct FitHistArgs
{
  std::vector<std::string> inputs;
  std::string family = "lnorm3";
  int restarts = NelderMeadConfig{}.restarts;
  int max_iter = NelderMeadConfig{}.max_iter;
  bool width_weighted = false;
  std::uint64_t seed = 0;
  bool each = false;
  unsigned jobs = 1;
  std::string out;
};

void cmd_fit_hist(const FitHistArgs& args, std::ostream& out)
{
  HistFitOptions opts;
  opts.optimizer.restarts = args.restarts;
  opts.optimizer.max_iter = args.max_iter;
  opts.optimizer.validate();
  opts.width_weighted = args.width_weighted;
  opts.seed = args.seed;
  const Family family = parse_family(args.family);

  std::vector<Histogram> hists;
  for (const auto& path : args.inputs)
    hists.push_back(io::read_histogram_csv(path));

  json result;
  if (args.each) {
    std::vector<std::optional<FitResult>> fits(hists.size());
    parallel_for(hists.size(), args.jobs,
                 [&](std::size_t i) { fits[i] = fit_histogram(hists[i], family, opts); });
    result = json::array();
    for (std::size_t i = 0; i < hists.size(); ++i) {
      json item = io::to_json(*fits[i]);
      item["file"] = args.inputs[i];
      result.push_back(std::move(item));
    }
  } else {
    const Histogram hist = hists.size() == 1 ? hists.front() : average_normalized(hists);
    result = io::to_json(fit_histogram(hist, family, opts));
  }
  emit(args.out, out, [&](std::ostream& os) { os << result.dump(2) << '\n'; });
}

void cmd_expect(const std::string& input, std::ostream& out)
{
  const auto records = io::read_params_file(input);
  if (records.size() == 1 && !records.front().test_id) {
    out << io::format_double(expected_value(records.front().params)) << '\n';
    return;
  }
  out << "test_id,gender,family,expected_value\n";
  for (const auto& r : records)
    out << r.test_id.value_or("") << ',' << (r.gender ? to_string(*r.gender) : "") << ','
        << family_name(r.params) << ',' << io::format_double(expected_value(r.params)) << '\n';
}

struct DfeArgs
{
  std::string baseline;
  std::string other;
  std::string baseline_name;
  std::string other_name;
  std::string predictions;
  std::string test_id = "1";
  std::string gender = "M";
  std::string out;
};

void cmd_dfe(const DfeArgs& args, std::ostream& out)
{
  const std::string base_name = args.baseline_name.empty() ? stem(args.baseline) : args.baseline_name;
  const std::string other_name = args.other_name.empty() ? stem(args.other) : args.other_name;
  std::vector<DfeRecord> records;
  for (const auto& m : match_params(args.baseline, args.other, args.test_id, parse_gender(args.gender)))
    records.push_back(make_dfe_record(m.test_id, m.gender, base_name, m.a, other_name, m.b));

  if (args.predictions.empty()) {
    emit(args.out, out, [&](std::ostream& os) { io::write_dfe_csv(os, records); });
    return;
  }
  const ConcordanceReport report = concordance(records, io::read_predictions_csv(args.predictions));
  spdlog::info("concordance: {} match, {} mismatch ({} tie), coverage {}", report.matches.size(),
               report.mismatches.size(), report.ties.size(), report.coverage);
  emit(args.out, out, [&](std::ostream& os) { io::write_concordance_csv(os, report); });
}

struct DistanceArgs
{
  std::string a;
  std::string b;
  std::string metric = "l1";
  Eigen::Index points = kDefaultGridPoints;
  std::string range = "auto";
  bool csv = false;
  std::string name_a;
  std::string name_b;
  std::string test_id = "1";
  std::string gender = "M";
  std::string out;
};

void cmd_distance(const DistanceArgs& args, std::ostream& out)
{
  const Metric metric = parse_metric(args.metric);
  const auto range = parse_range_arg(args.range);
  if (args.points < 2)
    throw InputError("--points must be at least 2");
  const std::string name_a = args.name_a.empty() ? stem(args.a) : args.name_a;
  const std::string name_b = args.name_b.empty() ? stem(args.b) : args.name_b;

  std::vector<DistanceRecord> records;
  for (const auto& m : match_params(args.a, args.b, args.test_id, parse_gender(args.gender))) {
    DistanceRecord rec = grid_distance(m.a, m.b, metric, args.points, range);
    rec.test_id = m.test_id;
    rec.gender = m.gender;
    rec.dataset_a = name_a;
    rec.dataset_b = name_b;
    records.push_back(std::move(rec));
  }

  emit(args.out, out, [&](std::ostream& os) {
    if (args.csv) {
      io::write_distances_csv(os, records);
    } else if (records.size() == 1) {
      os << io::to_json(records.front()).dump(2) << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : records)
        arr.push_back(io::to_json(r));
      os << arr.dump(2) << '\n';
    }
  });
}

struct GroupArgs
{
  std::string distances;
  std::vector<std::string> near;
  std::string pairs;
  std::string metric;
  std::string kde;
  std::string out;
};

void cmd_group(const GroupArgs& args, std::ostream& out)
{
  std::vector<DistanceRecord> all = io::read_distances_csv(args.distances);
  std::vector<DistanceRecord> records;
  if (!args.metric.empty()) {
    const Metric metric = parse_metric(args.metric);
    std::copy_if(all.begin(), all.end(), std::back_inserter(records),
                 [&](const DistanceRecord& r) { return r.metric == metric; });
  } else {
    const bool mixed = std::any_of(all.begin(), all.end(), [&](const DistanceRecord& r) {
      return r.metric != all.front().metric;
    });
    if (mixed)
      throw InputError(args.distances + ": several metrics present; choose one with --metric");
    records = std::move(all);
  }

  if (args.near.empty() == args.pairs.empty())
    throw InputError("give the Near pairs with either --near A,B or --pairs FILE");
  std::set<DatasetPair> near;
  for (const auto& spec : args.near) {
    const auto parts = split_list(spec);
    if (parts.size() != 2 || parts[0].empty() || parts[1].empty())
      throw InputError("--near expects 'A,B', got '" + spec + "'");
    near.insert(make_pair_key(parts[0], parts[1]));
  }
  if (!args.pairs.empty()) {
    static constexpr std::string_view cols[] = {"dataset_a", "dataset_b", "relation"};
    const io::CsvTable t = io::read_csv(args.pairs, cols);
    std::set<DatasetPair> classified;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const DatasetPair key = make_pair_key(t.at(r, "dataset_a"), t.at(r, "dataset_b"));
      const std::string& rel = t.at(r, "relation");
      if (rel == "near")
        near.insert(key);
      else if (rel != "far")
        t.fail(r, "relation must be 'near' or 'far', got '" + rel + "'");
      classified.insert(key);
    }
    for (const auto& rec : records)
      if (!classified.count(make_pair_key(rec.dataset_a, rec.dataset_b)))
        throw InputError(args.pairs + ": pair (" + rec.dataset_a + ", " + rec.dataset_b +
                         ") is not classified");
  }

  const GroupReport report = group_analysis(records, near);
  if (!args.kde.empty())
    emit(args.kde, out, [&](std::ostream& os) {
      io::write_kde_csv(os, distance_kde_export(split_near_far(records, near)));
    });
  emit(args.out, out, [&](std::ostream& os) { os << io::to_json(report).dump(2) << '\n'; });
}

struct SynthArgs
{
  std::string config;
  std::uint64_t seed = 0;
  std::string out;
  unsigned jobs = 1;
};

void cmd_synth_run(const SynthArgs& args, std::ostream& out)
{
  const json j = io::read_json_file(args.config);
  ExperimentConfig cfg = io::experiment_config_from_json(j);
  if (j.contains("seed"))
    spdlog::warn("{}: the 'seed' field is ignored; --seed {} is used", args.config, args.seed);
  cfg.seed = args.seed;
  const ExperimentReport report = pipeline_experiment(cfg, args.jobs);
  io::write_report(report, args.out);
  emit((std::filesystem::path(args.out) / "config.json").string(), out,
       [&](std::ostream& os) { os << io::to_json(cfg).dump(2) << '\n'; });
  out << io::to_json(report.group).dump(2) << '\n';
}

struct PlotArgs
{
  std::vector<std::string> params;
  std::string samples;
  bool overlay = false;
  int bins = 50;
  Eigen::Index points = 512;
  std::string range = "auto";
  std::uint64_t seed = 0;
  std::string out;
};

void cmd_plot_data(const PlotArgs& args, std::ostream& out)
{
  if (args.points < 2)
    throw InputError("--points must be at least 2");
  if (args.overlay && args.samples.empty())
    throw InputError("--overlay needs --samples");

  std::vector<std::string> labels;
  std::vector<Distribution> curves;
  std::optional<Kde> kde;
  if (!args.samples.empty()) {
    const Eigen::VectorXd samples = io::read_samples(args.samples);
    kde.emplace(samples);
    if (args.overlay) {
      const Histogram hist = build_histogram(samples, args.bins);
      HistFitOptions opts;
      opts.seed = args.seed;
      labels = {"norm3", "lnorm3"};
      curves = {fit_histogram(hist, Family::Norm3, opts).params,
                fit_histogram(hist, Family::Lnorm3, opts).params};
    }
  }
  for (const auto& path : args.params) {
    const auto records = io::read_params_file(path);
    for (std::size_t i = 0; i < records.size(); ++i) {
      std::string label = stem(path);
      if (records[i].test_id)
        label += ":" + *records[i].test_id;
      else if (records.size() > 1)
        label += ":" + std::to_string(i);
      labels.push_back(label);
      curves.push_back(records[i].params);
    }
  }
  if (!kde && curves.empty())
    throw InputError("plot-data needs parameter files or --samples");

  std::optional<GridRange> range = parse_range_arg(args.range);
  if (!range) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    if (kde) {
      const double pad = 3 * kde->bandwidth();
      lo = kde->samples().minCoeff() - pad;
      hi = kde->samples().maxCoeff() + pad;
    }
    for (const auto& c : curves) {
      lo = std::min(lo, quantile(c, kAutoRangeTail));
      hi = std::max(hi, quantile(c, 1 - kAutoRangeTail));
    }
    range = GridRange{lo, hi};
  }

  const Eigen::VectorXd grid = Eigen::VectorXd::LinSpaced(args.points, range->lo, range->hi);
  std::vector<Eigen::VectorXd> columns;
  std::vector<std::string> header;
  if (kde) {
    header.push_back("kde");
    columns.push_back(kde->evaluate(grid));
  }
  for (std::size_t k = 0; k < curves.size(); ++k) {
    header.push_back(labels[k]);
    columns.push_back(pdf(curves[k], grid));
  }

  emit(args.out, out, [&](std::ostream& os) {
    os << 'x';
    for (const auto& h : header)
      os << ',' << h;
    os << '\n';
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      os << io::format_double(grid[i]);
      for (const auto& col : columns)
        os << ',' << io::format_double(col[i]);
      os << '\n';
    }
  });
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  LogScope log_scope(err);

  CLI::App app{"Reference distribution toolkit: three-parameter lognormal fitting and comparison",
               "refdist"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "refdist 0.1.0");

  FitTripleArgs triple;
  auto* fit_triple = app.add_subcommand("fit-triple", "Solve lnorm3 parameters from quantile triples");
  fit_triple->add_option("triples", triple.input, "CSV: test_id,gender,lower,median,upper,alpha")
    ->required();
  fit_triple->add_flag("--reflect-left-skew", triple.reflect,
                       "Fit left-skewed triples as a mirrored lognormal");
  fit_triple->add_option("--catalog", triple.catalog, "CSV: test_id,display_name,unit");
  fit_triple->add_option("-o,--out", triple.out, "Output file (default stdout)");

  FitHistArgs hist;
  auto* fit_hist = app.add_subcommand("fit-hist", "Least-squares fit of a histogram");
  fit_hist->add_option("histograms", hist.inputs, "CSV: bin_lower,bin_upper,frequency")
    ->required();
  fit_hist->add_option("--family", hist.family, "lnorm3 or norm3")->capture_default_str();
  fit_hist->add_option("--restarts", hist.restarts)->capture_default_str();
  fit_hist->add_option("--max-iter", hist.max_iter)->capture_default_str();
  fit_hist->add_flag("--width-weighted", hist.width_weighted, "Weight squared residuals by bin width");
  fit_hist->add_option("--seed", hist.seed, "Seed for restart jitter")->capture_default_str();
  fit_hist->add_flag("--each", hist.each,
                     "Fit every file separately instead of their averaged density");
  fit_hist->add_option("-j,--jobs", hist.jobs)->capture_default_str();
  fit_hist->add_option("-o,--out", hist.out);

  std::string expect_input;
  auto* expect = app.add_subcommand("expect", "Expected value of fitted parameters");
  expect->add_option("params", expect_input, "Parameter JSON")->required();

  DfeArgs dfe_args;
  auto* dfe_cmd = app.add_subcommand("dfe", "Direction of the expected-value difference");
  dfe_cmd->add_option("baseline", dfe_args.baseline, "Baseline parameter JSON")->required();
  dfe_cmd->add_option("other", dfe_args.other, "Compared parameter JSON")->required();
  dfe_cmd->add_option("--baseline-name", dfe_args.baseline_name, "Default: file stem");
  dfe_cmd->add_option("--other-name", dfe_args.other_name, "Default: file stem");
  dfe_cmd->add_option("--predictions", dfe_args.predictions,
                      "CSV: test_id,gender,dataset,predicted_direction");
  dfe_cmd->add_option("--test-id", dfe_args.test_id, "Label for unlabelled parameters")
    ->capture_default_str();
  dfe_cmd->add_option("--gender", dfe_args.gender)->capture_default_str();
  dfe_cmd->add_option("-o,--out", dfe_args.out);

  DistanceArgs dist_args;
  auto* distance = app.add_subcommand("distance", "Grid distance between two densities");
  distance->add_option("a", dist_args.a, "Parameter JSON")->required();
  distance->add_option("b", dist_args.b, "Parameter JSON")->required();
  distance->add_option("--metric", dist_args.metric, "l1, l2 or skl")->capture_default_str();
  distance->add_option("--points", dist_args.points)->capture_default_str();
  distance->add_option("--range", dist_args.range, "auto or lo,hi")->capture_default_str();
  distance->add_flag("--csv", dist_args.csv, "Write CSV rows instead of JSON");
  distance->add_option("--name-a", dist_args.name_a, "Default: file stem");
  distance->add_option("--name-b", dist_args.name_b, "Default: file stem");
  distance->add_option("--test-id", dist_args.test_id)->capture_default_str();
  distance->add_option("--gender", dist_args.gender)->capture_default_str();
  distance->add_option("-o,--out", dist_args.out);

  GroupArgs group_args;
  auto* group = app.add_subcommand("group", "Near/Far comparison of distances");
  group->add_option("distances", group_args.distances, "Distance CSV")->required();
  group->add_option("--near", group_args.near, "A Near pair 'A,B' (repeatable)")->take_all();
  group->add_option("--pairs", group_args.pairs, "CSV: dataset_a,dataset_b,relation (near|far)");
  group->add_option("--metric", group_args.metric, "Use only this metric");
  group->add_option("--kde", group_args.kde, "Also write the Near/Far KDE table here");
  group->add_option("-o,--out", group_args.out);

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Synthetic exclusion-criteria experiments");
  synth->require_subcommand(1);
  auto* synth_run = synth->add_subcommand("run", "Run an experiment and write a report directory");
  synth_run->add_option("config", synth_args.config, "Experiment JSON")->required();
  synth_run->add_option("--seed", synth_args.seed)->required();
  synth_run->add_option("-o,--out", synth_args.out, "Report directory")->required();
  synth_run->add_option("-j,--jobs", synth_args.jobs)->capture_default_str();

  PlotArgs plot_args;
  auto* plot = app.add_subcommand("plot-data", "Density curves on a grid as CSV");
  plot->add_option("params", plot_args.params, "Parameter JSON files");
  plot->add_option("--samples", plot_args.samples, "Raw values, one per line (KDE column)");
  plot->add_flag("--overlay", plot_args.overlay, "Add norm3 and lnorm3 fits of the samples");
  plot->add_option("--bins", plot_args.bins, "Histogram bins for --overlay")->capture_default_str();
  plot->add_option("--points", plot_args.points)->capture_default_str();
  plot->add_option("--range", plot_args.range, "auto or lo,hi")->capture_default_str();
  plot->add_option("--seed", plot_args.seed)->capture_default_str();
  plot->add_option("-o,--out", plot_args.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*fit_triple)
      cmd_fit_triple(triple, out);
    else if (*fit_hist)
      cmd_fit_hist(hist, out);
    else if (*expect)
      cmd_expect(expect_input, out);
    else if (*dfe_cmd)
      cmd_dfe(dfe_args, out);
    else if (*distance)
      cmd_distance(dist_args, out);
    else if (*group)
      cmd_group(group_args, out);
    else if (*synth_run)
      cmd_synth_run(synth_args, out);
    else if (*plot)
      cmd_plot_data(plot_args, out);
    return 0;
  } catch (const NumericalError& e) {
    err << "refdist: error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "refdist: error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "refdist: error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    err << "refdist: error: " << e.what() << '\n';
    return 1;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "refdist: error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "refdist: error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "refdist: error: " << e.what() << '\n';
    return 2;
  }
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err)
{
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

} // namespace refdist
