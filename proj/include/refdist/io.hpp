#pragma once

#include "refdist/compare.hpp"
#include "refdist/distributions.hpp"
#include "refdist/histfit.hpp"
#include "refdist/histogram.hpp"
#include "refdist/quantile_solver.hpp"
#include "refdist/synth.hpp"

#include <json.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace refdist::io {

using json = nlohmann::json;

/// Shortest decimal string that parses back to the same double.
std::string format_double(double v);

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Comma-separated text with a header row. Fields are trimmed; quoting is
/// not supported. Blank lines are skipped.
struct CsvTable
{
  std::string source;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// 1-based line number of each row in the source.
  std::vector<std::size_t> lines;

  /// Column index by name; InputError if absent.
  std::size_t column(std::string_view name) const;
  const std::string& at(std::size_t row, std::string_view name) const;
  double number(std::size_t row, std::string_view name) const;

  /// InputError naming source and line.
  [[noreturn]] void fail(std::size_t row, const std::string& what) const;
};

CsvTable parse_csv(std::istream& in, std::string source, std::span<const std::string_view> required);
CsvTable read_csv(const std::filesystem::path& path, std::span<const std::string_view> required);

/// Strict decimal parse of a whole field.
std::optional<double> parse_number(std::string_view text);

/// Header `bin_lower,bin_upper,frequency`; bins must be contiguous.
Histogram read_histogram_csv(const std::filesystem::path& path);
void write_histogram_csv(std::ostream& out, const Histogram& hist);

struct TripleRow
{
  std::string test_id;
  Gender gender = Gender::M;
  QuantileTriple triple{};
  std::size_t line = 0;
};

/// Header `test_id,gender,lower,median,upper,alpha`.
std::vector<TripleRow> read_triples_csv(const std::filesystem::path& path);

/// Header `test_id,gender,dataset,predicted_direction`.
std::vector<PredictionEntry> read_predictions_csv(const std::filesystem::path& path);
void write_predictions_csv(std::ostream& out, std::span<const PredictionEntry> predictions);

/// Display metadata for a laboratory test.
struct TestCatalogEntry
{
  std::string test_id;
  std::string display_name;
  std::string unit;
};

/// Header `test_id,display_name,unit`; test ids must be unique.
std::map<std::string, TestCatalogEntry> read_catalog_csv(const std::filesystem::path& path);

/// One value per line; a non-numeric first line is taken as a header.
Eigen::VectorXd read_samples(const std::filesystem::path& path);

inline constexpr std::string_view kDistanceColumns =
  "test_id,gender,dataset_a,dataset_b,metric,value,raw_sum,n_points,lo,hi";
inline constexpr std::string_view kDfeColumns =
  "test_id,gender,baseline_dataset,other_dataset,baseline_expected,other_expected,magnitude,"
  "direction";
inline constexpr std::string_view kConcordanceColumns =
  "test_id,gender,baseline_dataset,other_dataset,baseline_expected,other_expected,magnitude,"
  "direction,predicted_direction,status";
inline constexpr std::string_view kFitColumns =
  "test_id,cohort,group,source,family,mu,sigma,d,sse,converged,lower,median,upper,n_kept,"
  "n_excluded,expected_value,truth_mu,truth_sigma,truth_d";

void write_distances_csv(std::ostream& out, std::span<const DistanceRecord> records);
std::vector<DistanceRecord> read_distances_csv(const std::filesystem::path& path);
void write_dfe_csv(std::ostream& out, std::span<const DfeRecord> records);
void write_concordance_csv(std::ostream& out, const ConcordanceReport& report);
void write_fits_csv(std::ostream& out, std::span<const CohortFit> fits);
void write_kde_csv(std::ostream& out, const KdeTable& table);

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

/// {"family":"lnorm3","mu":..,"sigma":..,"d":..}; "norm3" alike; "boxcox"
/// with "mu","sigma","p","m"; "lnorm3_reflected" stores the mirrored lnorm3.
json to_json(const Distribution& dist);
Distribution distribution_from_json(const json& j);

json to_json(const FitResult& fit);
json to_json(const DistanceRecord& rec);
json to_json(const GroupReport& rep);
json to_json(const QuantileTriple& triple);

/// A parameter set, optionally labelled with the test it belongs to.
struct ParamsRecord
{
  std::optional<std::string> test_id;
  std::optional<Gender> gender;
  Distribution params;
};

/// Accepts a bare parameter object, an object with a "params" member (such
/// as fit-hist output), or an array of such objects.
std::vector<ParamsRecord> params_from_json(const json& j);
std::vector<ParamsRecord> read_params_file(const std::filesystem::path& path);

json read_json_file(const std::filesystem::path& path);

ExperimentConfig experiment_config_from_json(const json& j);
json to_json(const ExperimentConfig& cfg);

/// fits.csv, dfe.csv, distances.csv, group.json and kde_near_far.csv.
void write_report(const ExperimentReport& report, const std::filesystem::path& dir);

} // namespace refdist::io
