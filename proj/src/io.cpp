#include "refdist/io.hpp"

#include "refdist/errors.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace refdist::io {

std::string format_double(double v)
{
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_number(std::string_view text)
{
  if (!text.empty() && text.front() == '+')
    text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty())
    return std::nullopt;
  return v;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

namespace {

std::string_view trim(std::string_view s)
{
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(std::string_view line)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

std::ifstream open_input(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path.string() + "'");
  return in;
}

void write_line(std::ostream& out, std::initializer_list<std::string> fields)
{
  bool first = true;
  for (const auto& f : fields) {
    if (!first)
      out << ',';
    out << f;
    first = false;
  }
  out << '\n';
}

std::string opt_number(const std::optional<double>& v)
{
  return v ? format_double(*v) : std::string();
}

} // namespace

std::size_t CsvTable::column(std::string_view name) const
{
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end())
    throw InputError(source + ": missing column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - header.begin());
}

const std::string& CsvTable::at(std::size_t row, std::string_view name) const
{
  return rows.at(row).at(column(name));
}

double CsvTable::number(std::size_t row, std::string_view name) const
{
  const std::string& field = at(row, name);
  const auto v = parse_number(field);
  if (!v || !std::isfinite(*v))
    fail(row, "column '" + std::string(name) + "' is not a finite number: '" + field + "'");
  return *v;
}

void CsvTable::fail(std::size_t row, const std::string& what) const
{
  throw InputError(source + ":" + std::to_string(lines.at(row)) + ": " + what);
}

CsvTable parse_csv(std::istream& in, std::string source, std::span<const std::string_view> required)
{
  CsvTable table;
  table.source = std::move(source);
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.starts_with("\xEF\xBB\xBF"))
      view.remove_prefix(3);
    if (trim(view).empty())
      continue;
    auto fields = split_fields(view);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size())
      throw InputError(table.source + ":" + std::to_string(line_no) + ": expected " +
                       std::to_string(table.header.size()) + " fields, found " +
                       std::to_string(fields.size()));
    table.rows.push_back(std::move(fields));
    table.lines.push_back(line_no);
  }
  if (!have_header)
    throw InputError(table.source + ": empty file");
  for (const auto name : required)
    table.column(name);
  return table;
}

CsvTable read_csv(const std::filesystem::path& path, std::span<const std::string_view> required)
{
  auto in = open_input(path);
  return parse_csv(in, path.string(), required);
}

Histogram read_histogram_csv(const std::filesystem::path& path)
{
  static constexpr std::string_view cols[] = {"bin_lower", "bin_upper", "frequency"};
  const CsvTable t = read_csv(path, cols);
  if (t.rows.size() < 2)
    throw InputError(path.string() + ": a histogram needs at least 2 bins");
  const auto n = static_cast<Eigen::Index>(t.rows.size());
  Eigen::VectorXd edges(n + 1);
  Eigen::VectorXd freq(n);
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double lo = t.number(r, "bin_lower");
    const double hi = t.number(r, "bin_upper");
    const double f = t.number(r, "frequency");
    if (!(hi > lo))
      t.fail(r, "bin_upper must exceed bin_lower");
    if (f < 0)
      t.fail(r, "frequency must be nonnegative");
    const auto i = static_cast<Eigen::Index>(r);
    if (r > 0 && lo != edges[i])
      t.fail(r, "bins must be contiguous (bin_lower equals the previous bin_upper)");
    edges[i] = lo;
    edges[i + 1] = hi;
    freq[i] = f;
  }
  return Histogram(edges, freq);
}

void write_histogram_csv(std::ostream& out, const Histogram& hist)
{
  out << "bin_lower,bin_upper,frequency\n";
  for (Eigen::Index b = 0; b < hist.bins(); ++b)
    write_line(out, {format_double(hist.edges()[b]), format_double(hist.edges()[b + 1]),
                     format_double(hist.values()[b])});
}

std::vector<TripleRow> read_triples_csv(const std::filesystem::path& path)
{
  static constexpr std::string_view cols[] = {"test_id", "gender", "lower",
                                              "median",  "upper",  "alpha"};
  const CsvTable t = read_csv(path, cols);
  std::vector<TripleRow> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    TripleRow row;
    row.test_id = t.at(r, "test_id");
    try {
      row.gender = parse_gender(t.at(r, "gender"));
      row.triple = {t.number(r, "lower"), t.number(r, "median"), t.number(r, "upper"),
                    t.number(r, "alpha")};
      row.triple.validate();
    } catch (const InputError& e) {
      if (std::string_view(e.what()).starts_with(t.source))
        throw;
      t.fail(r, e.what());
    }
    row.line = t.lines[r];
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<PredictionEntry> read_predictions_csv(const std::filesystem::path& path)
{
  static constexpr std::string_view cols[] = {"test_id", "gender", "dataset",
                                              "predicted_direction"};
  const CsvTable t = read_csv(path, cols);
  std::vector<PredictionEntry> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    try {
      out.push_back({t.at(r, "test_id"), parse_gender(t.at(r, "gender")), t.at(r, "dataset"),
                     parse_direction(t.at(r, "predicted_direction"))});
    } catch (const InputError& e) {
      t.fail(r, e.what());
    }
  }
  return out;
}

void write_predictions_csv(std::ostream& out, std::span<const PredictionEntry> predictions)
{
  out << "test_id,gender,dataset,predicted_direction\n";
  for (const auto& p : predictions)
    write_line(out, {p.test_id, std::string(to_string(p.gender)), p.dataset,
                     std::string(to_string(p.predicted_direction))});
}

std::map<std::string, TestCatalogEntry> read_catalog_csv(const std::filesystem::path& path)
{
  static constexpr std::string_view cols[] = {"test_id", "display_name", "unit"};
  const CsvTable t = read_csv(path, cols);
  std::map<std::string, TestCatalogEntry> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    TestCatalogEntry e{t.at(r, "test_id"), t.at(r, "display_name"), t.at(r, "unit")};
    if (e.test_id.empty())
      t.fail(r, "empty test_id");
    const std::string id = e.test_id;
    if (!out.emplace(id, std::move(e)).second)
      t.fail(r, "duplicate test_id '" + id + "'");
  }
  return out;
}

Eigen::VectorXd read_samples(const std::filesystem::path& path)
{
  auto in = open_input(path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto field = trim(line);
    if (field.empty())
      continue;
    const auto v = parse_number(field);
    if (!v) {
      if (values.empty() && line_no == 1)
        continue;
      throw InputError(path.string() + ":" + std::to_string(line_no) + ": not a number: '" +
                       std::string(field) + "'");
    }
    values.push_back(*v);
  }
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void write_distances_csv(std::ostream& out, std::span<const DistanceRecord> records)
{
  out << kDistanceColumns << '\n';
  for (const auto& r : records)
    write_line(out, {r.test_id, std::string(to_string(r.gender)), r.dataset_a, r.dataset_b,
                     std::string(to_string(r.metric)), format_double(r.value),
                     format_double(r.raw_sum), std::to_string(r.n_points),
                     format_double(r.range.lo), format_double(r.range.hi)});
}

std::vector<DistanceRecord> read_distances_csv(const std::filesystem::path& path)
{
  static constexpr std::string_view cols[] = {"test_id", "gender", "dataset_a", "dataset_b",
                                              "metric",  "value"};
  const CsvTable t = read_csv(path, cols);
  const bool has_extra = std::find(t.header.begin(), t.header.end(), "raw_sum") != t.header.end();
  std::vector<DistanceRecord> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    DistanceRecord rec;
    try {
      rec.test_id = t.at(r, "test_id");
      rec.gender = parse_gender(t.at(r, "gender"));
      rec.dataset_a = t.at(r, "dataset_a");
      rec.dataset_b = t.at(r, "dataset_b");
      rec.metric = parse_metric(t.at(r, "metric"));
    } catch (const InputError& e) {
      t.fail(r, e.what());
    }
    rec.value = t.number(r, "value");
    if (rec.value < 0)
      t.fail(r, "distance values must be nonnegative");
    if (has_extra) {
      rec.raw_sum = t.number(r, "raw_sum");
      rec.n_points = static_cast<Eigen::Index>(t.number(r, "n_points"));
      rec.range = {t.number(r, "lo"), t.number(r, "hi")};
    }
    out.push_back(std::move(rec));
  }
  return out;
}

void write_dfe_csv(std::ostream& out, std::span<const DfeRecord> records)
{
  out << kDfeColumns << '\n';
  for (const auto& r : records)
    write_line(out, {r.test_id, std::string(to_string(r.gender)), r.baseline_dataset,
                     r.other_dataset, format_double(r.baseline_expected),
                     format_double(r.other_expected), format_double(r.magnitude),
                     std::string(to_string(r.direction))});
}

void write_concordance_csv(std::ostream& out, const ConcordanceReport& report)
{
  out << kConcordanceColumns << '\n';
  for (const auto& row : report.rows) {
    const auto& r = row.record;
    const char* status =
      row.match ? "match" : (r.direction == Direction::Tie ? "tie" : "mismatch");
    write_line(out, {r.test_id, std::string(to_string(r.gender)), r.baseline_dataset,
                     r.other_dataset, format_double(r.baseline_expected),
                     format_double(r.other_expected), format_double(r.magnitude),
                     std::string(to_string(r.direction)), std::string(to_string(row.predicted)),
                     status});
  }
}

void write_fits_csv(std::ostream& out, std::span<const CohortFit> fits)
{
  out << kFitColumns << '\n';
  for (const auto& f : fits) {
    const json p = to_json(f.params);
    const json& core = p.contains("mirror") ? p["mirror"] : p;
    std::optional<double> lower, median, upper;
    if (f.triple) {
      lower = f.triple->lower;
      median = f.triple->median;
      upper = f.triple->upper;
    }
    write_line(out, {f.test_id, f.cohort, f.group, std::string(to_string(f.source)),
                     std::string(family_name(f.params)), format_double(core.at("mu").get<double>()),
                     format_double(core.at("sigma").get<double>()),
                     format_double(core.at("d").get<double>()), opt_number(f.sse),
                     f.converged ? (*f.converged ? "true" : "false") : "", opt_number(lower),
                     opt_number(median), opt_number(upper), std::to_string(f.n_kept),
                     std::to_string(f.n_excluded), format_double(f.expected),
                     format_double(f.truth.mu()), format_double(f.truth.sigma()),
                     format_double(f.truth.d())});
  }
}

void write_kde_csv(std::ostream& out, const KdeTable& table)
{
  out << 'x';
  for (const auto& label : table.labels)
    out << ',' << label;
  out << '\n';
  for (Eigen::Index i = 0; i < table.grid.size(); ++i) {
    out << format_double(table.grid[i]);
    for (Eigen::Index k = 0; k < table.density.cols(); ++k)
      out << ',' << format_double(table.density(i, k));
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

double get_number(const json& j, const char* key)
{
  if (!j.contains(key))
    throw InputError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number())
    throw InputError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

json lnorm3_json(const Lnorm3d& p)
{
  return {{"family", "lnorm3"}, {"mu", p.mu()}, {"sigma", p.sigma()}, {"d", p.d()}};
}

template <typename T, typename F>
T with_param_errors(F&& make)
{
  try {
    return make();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
}

} // namespace

json to_json(const Distribution& dist)
{
  return std::visit(
    [](const auto& p) -> json {
      using T = std::decay_t<decltype(p)>;
      if constexpr (std::is_same_v<T, Lnorm3d>)
        return lnorm3_json(p);
      else if constexpr (std::is_same_v<T, ReflectedLnorm3d>)
        return {{"family", "lnorm3_reflected"}, {"mirror", lnorm3_json(p.mirror())}};
      else if constexpr (std::is_same_v<T, Norm3d>)
        return {{"family", "norm3"}, {"mu", p.mu()}, {"sigma", p.sigma()}, {"d", p.d()}};
      else
        return {{"family", "boxcox"}, {"mu", p.mu()}, {"sigma", p.sigma()}, {"p", p.p()},
                {"m", p.m()}};
    },
    dist);
}

Distribution distribution_from_json(const json& j)
{
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw InputError("parameter object needs a string 'family' field");
  const std::string family = j["family"].get<std::string>();
  return with_param_errors<Distribution>([&]() -> Distribution {
    if (family == "lnorm3")
      return Lnorm3d(get_number(j, "mu"), get_number(j, "sigma"), get_number(j, "d"));
    if (family == "norm3")
      return Norm3d(get_number(j, "mu"), get_number(j, "sigma"), get_number(j, "d"));
    if (family == "boxcox")
      return BoxCoxd(get_number(j, "mu"), get_number(j, "sigma"), get_number(j, "p"),
                     get_number(j, "m"));
    if (family == "lnorm3_reflected") {
      if (!j.contains("mirror"))
        throw InputError("lnorm3_reflected needs a 'mirror' object");
      const Distribution inner = distribution_from_json(j["mirror"]);
      if (!std::holds_alternative<Lnorm3d>(inner))
        throw InputError("lnorm3_reflected mirror must be an lnorm3 object");
      return ReflectedLnorm3d(std::get<Lnorm3d>(inner));
    }
    throw InputError("unknown family '" + family + "'");
  });
}

json to_json(const FitResult& fit)
{
  return {{"family", family_name(fit.params)},
          {"params", to_json(fit.params)},
          {"sse", fit.sse},
          {"iterations", fit.iterations},
          {"converged", fit.converged},
          {"restarts_used", fit.restarts_used}};
}

json to_json(const DistanceRecord& rec)
{
  return {{"test_id", rec.test_id},
          {"gender", to_string(rec.gender)},
          {"dataset_a", rec.dataset_a},
          {"dataset_b", rec.dataset_b},
          {"metric", to_string(rec.metric)},
          {"value", rec.value},
          {"raw_sum", rec.raw_sum},
          {"n_points", rec.n_points},
          {"range", {rec.range.lo, rec.range.hi}}};
}

json to_json(const GroupReport& rep)
{
  return {{"near_mean", rep.near_mean},
          {"far_mean", rep.far_mean},
          {"t_statistic", rep.t_statistic},
          {"df", rep.df},
          {"p_value", rep.p_value},
          {"effect_size", rep.effect_size},
          {"effect_size_kind", rep.effect_size_kind},
          {"test", rep.test},
          {"n_near", rep.n_near},
          {"n_far", rep.n_far}};
}

json to_json(const QuantileTriple& t)
{
  return {{"lower", t.lower}, {"median", t.median}, {"upper", t.upper}, {"alpha", t.alpha}};
}

std::vector<ParamsRecord> params_from_json(const json& j)
{
  auto one = [](const json& obj) {
    if (!obj.is_object())
      throw InputError("expected a JSON object for a parameter record");
    ParamsRecord rec{std::nullopt, std::nullopt,
                     distribution_from_json(obj.contains("params") ? obj["params"] : obj)};
    if (obj.contains("test_id"))
      rec.test_id = obj["test_id"].get<std::string>();
    if (obj.contains("gender"))
      rec.gender = parse_gender(obj["gender"].get<std::string>());
    return rec;
  };
  std::vector<ParamsRecord> out;
  if (j.is_array()) {
    for (const auto& item : j)
      out.push_back(one(item));
  } else {
    out.push_back(one(j));
  }
  return out;
}

json read_json_file(const std::filesystem::path& path)
{
  auto in = open_input(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": invalid JSON (" + e.what() + ")");
  }
}

std::vector<ParamsRecord> read_params_file(const std::filesystem::path& path)
{
  try {
    return params_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  } catch (const InputError& e) {
    if (std::string_view(e.what()).starts_with(path.string()))
      throw;
    throw InputError(path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Experiment configuration
// ---------------------------------------------------------------------------

namespace {

template <typename Enum>
Enum parse_enum(const json& j,
                const char* key,
                std::initializer_list<std::pair<std::string_view, Enum>> options,
                Enum fallback)
{
  if (!j.contains(key))
    return fallback;
  const std::string text = j.at(key).get<std::string>();
  for (const auto& [name, value] : options)
    if (text == name)
      return value;
  throw InputError(std::string("unrecognized value '") + text + "' for '" + key + "'");
}

ParamRange parse_range(const json& j, const char* key, ParamRange fallback)
{
  if (!j.contains(key))
    return fallback;
  const json& r = j.at(key);
  if (!r.is_array() || r.size() != 2)
    throw InputError(std::string("'") + key + "' must be a [lo, hi] pair");
  return {r[0].get<double>(), r[1].get<double>()};
}

ExclusionRule parse_rule(const json& j)
{
  ExclusionRule rule;
  rule.target = parse_enum<RuleTarget>(
    j, "target", {{"test_value", RuleTarget::TestValue}, {"covariate", RuleTarget::Covariate}},
    RuleTarget::TestValue);
  rule.kind = parse_enum<RuleKind>(j, "kind",
                                   {{"upper_tail", RuleKind::UpperTail},
                                    {"lower_tail", RuleKind::LowerTail},
                                    {"band", RuleKind::Band}},
                                   RuleKind::UpperTail);
  rule.mode = parse_enum<ThresholdMode>(
    j, "mode",
    {{"absolute", ThresholdMode::Absolute}, {"percentile", ThresholdMode::Percentile}},
    ThresholdMode::Absolute);
  rule.threshold = get_number(j, "threshold");
  if (rule.kind == RuleKind::Band)
    rule.upper = get_number(j, "upper");
  return rule;
}

} // namespace

ExperimentConfig experiment_config_from_json(const json& j)
{
  if (!j.is_object())
    throw InputError("experiment config must be a JSON object");
  try {
    ExperimentConfig cfg;
    if (j.contains("screen_percentile"))
      cfg = ExperimentConfig::screened_vs_open(get_number(j, "screen_percentile"), 0);
    cfg.n_tests = j.value("n_tests", cfg.n_tests);
    cfg.n = j.value("n", cfg.n);
    cfg.bins = j.value("bins", cfg.bins);
    cfg.alpha = j.value("alpha", cfg.alpha);
    cfg.rho = j.value("rho", cfg.rho);
    if (j.contains("truth")) {
      const json& t = j["truth"];
      cfg.mu = parse_range(t, "mu", cfg.mu);
      cfg.sigma = parse_range(t, "sigma", cfg.sigma);
      cfg.d = parse_range(t, "d", cfg.d);
    }
    if (j.contains("cohorts")) {
      cfg.cohorts.clear();
      for (const auto& c : j["cohorts"]) {
        CohortConfig cc;
        cc.name = c.at("name").get<std::string>();
        cc.group = c.at("group").get<std::string>();
        cc.source = parse_enum<CohortSource>(
          c, "source", {{"histogram", CohortSource::Histogram}, {"triple", CohortSource::Triple}},
          CohortSource::Histogram);
        if (c.contains("exclusion"))
          for (const auto& r : c["exclusion"])
            cc.exclusion.push_back(parse_rule(r));
        cfg.cohorts.push_back(std::move(cc));
      }
    }
    cfg.baseline = j.value("baseline", cfg.baseline);
    if (j.contains("metrics")) {
      cfg.metrics.clear();
      for (const auto& m : j["metrics"])
        cfg.metrics.push_back(parse_metric(m.get<std::string>()));
    }
    cfg.points = j.value("points", cfg.points);
    cfg.reflect_left_skew = j.value("reflect_left_skew", cfg.reflect_left_skew);
    if (j.contains("optimizer")) {
      const json& o = j["optimizer"];
      cfg.optimizer.max_iter = o.value("max_iter", cfg.optimizer.max_iter);
      cfg.optimizer.restarts = o.value("restarts", cfg.optimizer.restarts);
      cfg.optimizer.xtol = o.value("xtol", cfg.optimizer.xtol);
      cfg.optimizer.ftol = o.value("ftol", cfg.optimizer.ftol);
    }
    return cfg;
  } catch (const json::exception& e) {
    throw InputError(std::string("experiment config: ") + e.what());
  }
}

json to_json(const ExperimentConfig& cfg)
{
  json cohorts = json::array();
  for (const auto& c : cfg.cohorts) {
    json rules = json::array();
    for (const auto& r : c.exclusion) {
      json rj = {{"target", to_string(r.target)},
                 {"kind", to_string(r.kind)},
                 {"mode", to_string(r.mode)},
                 {"threshold", r.threshold}};
      if (r.kind == RuleKind::Band)
        rj["upper"] = r.upper;
      rules.push_back(rj);
    }
    cohorts.push_back(
      {{"name", c.name}, {"group", c.group}, {"source", to_string(c.source)}, {"exclusion", rules}});
  }
  json metrics = json::array();
  for (const auto m : cfg.metrics)
    metrics.push_back(to_string(m));
  return {{"n_tests", cfg.n_tests},
          {"n", cfg.n},
          {"bins", cfg.bins},
          {"alpha", cfg.alpha},
          {"seed", cfg.seed},
          {"rho", cfg.rho},
          {"truth",
           {{"mu", {cfg.mu.lo, cfg.mu.hi}},
            {"sigma", {cfg.sigma.lo, cfg.sigma.hi}},
            {"d", {cfg.d.lo, cfg.d.hi}}}},
          {"cohorts", cohorts},
          {"baseline", cfg.baseline},
          {"metrics", metrics},
          {"points", cfg.points},
          {"reflect_left_skew", cfg.reflect_left_skew},
          {"optimizer",
           {{"max_iter", cfg.optimizer.max_iter},
            {"restarts", cfg.optimizer.restarts},
            {"xtol", cfg.optimizer.xtol},
            {"ftol", cfg.optimizer.ftol}}}};
}

void write_report(const ExperimentReport& report, const std::filesystem::path& dir)
{
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream out(dir / name);
    if (!out)
      throw InputError("cannot write '" + (dir / name).string() + "'");
    return out;
  };
  {
    auto out = open("fits.csv");
    write_fits_csv(out, report.fits);
  }
  {
    auto out = open("dfe.csv");
    write_dfe_csv(out, report.dfes);
  }
  {
    auto out = open("distances.csv");
    write_distances_csv(out, report.distances);
  }
  {
    auto out = open("group.json");
    out << to_json(report.group).dump(2) << '\n';
  }
  {
    auto out = open("kde_near_far.csv");
    write_kde_csv(out, report.kde);
  }
  spdlog::info("wrote report to {}", dir.string());
}

} // namespace refdist::io
