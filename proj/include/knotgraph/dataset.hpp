#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotgraph/diagram.hpp"
#include "knotgraph/encoder.hpp"
#include "knotgraph/key_value.hpp"

namespace knotgraph {

inline constexpr int kFeatureCount = 10;

/// Feature slot names in emission order. The last slot has no KnotInfo
/// column by default and stays 0.
inline constexpr std::string_view kFeatureSlots[kFeatureCount] = {
    "alternating", "fibered",     "positive_braid", "small_large", "crossing_number",
    "signature",   "arc_index",   "determinant",    "rasmussen",   "reserved"};

/// Which CSV column feeds each field. An empty feature column means the
/// slot is filled with 0.
struct ColumnMapping {
  std::string name = "name";
  std::string pd = "pd_notation";
  std::string crossing_number = "crossing_number";
  std::vector<std::string> features;       // one per slot
  std::map<std::string, std::string> targets;  // target name -> column

  /// KnotInfo column names.
  static ColumnMapping knotinfo();
};

struct KnotRecord {
  std::string name;
  Diagram diagram;
  int crossing_number = 0;  // solved crossing number from the CSV
  std::vector<double> features;
  std::map<std::string, double> targets;  // only the targets present in the row
};

struct SkippedRow {
  std::size_t line = 0;  // 1-based, header is line 1
  std::string name;
  std::string reason;
};

struct IngestResult {
  std::vector<KnotRecord> records;
  std::vector<SkippedRow> skipped;
};

/// Y/N, true/false, yes/no map to +1/-1; Small/Large to -1/+1; anything
/// else must be a number. Throws DatasetError otherwise.
double parse_feature(std::string_view field);

/// Rows whose PD code or numeric fields do not parse are skipped and
/// reported. Throws DatasetError for a missing mapped column or when no
/// row survives.
IngestResult ingest_csv_text(std::string_view text, const ColumnMapping& mapping);
IngestResult ingest_csv(const std::filesystem::path& path, const ColumnMapping& mapping);

/// Draws the shuffle complexity c for each version.
struct CSampler {
  int lo = 20;
  int hi = 60;
  /// When positive, c is raised by `escalation` and the shuffle retried
  /// until the result has at least this many crossings.
  int min_crossings = 0;
  int escalation = 20;
  int max_c = 2000;
};

struct AugmentedDiagram {
  Diagram diagram;
  int version = 0;  // 0 is the unshuffled original
  std::uint64_t seed = 0;
  int c = 0;  // final complexity; 0 for the original
};

/// `versions` shuffles, each from its own seed derive_seed(seed, k) for
/// k = 1..versions, preceded by the original when `include_original`.
std::vector<AugmentedDiagram> augment(const Diagram& d, int versions, const CSampler& sampler, std::uint64_t seed,
                                      double p_r1 = 0.2, bool include_original = true);

enum class SplitMode { RandomHoldout, BySolvedCrossings, LargeKnots };

SplitMode parse_split_mode(std::string_view text);
std::string_view to_string(SplitMode mode);

struct SplitSpec {
  SplitMode mode = SplitMode::RandomHoldout;
  double holdout = 0.20;
  int max_train_crossings = 11;
  int test_crossings = 12;
  std::uint64_t seed = 0;
};

struct Split {
  std::vector<std::size_t> train;  // record indices, ascending
  std::vector<std::size_t> test;
};

/// Splits by base knot. RandomHoldout and LargeKnots hold out a seeded
/// fraction; BySolvedCrossings trains on solved N <= 11 and tests on 12
/// (other records are ineligible). Throws DatasetError on an empty side.
Split split_records(const std::vector<KnotRecord>& records, const SplitSpec& spec);

struct DatasetConfig {
  ColumnMapping mapping = ColumnMapping::knotinfo();
  std::string target = "determinant";
  int versions = 3;
  CSampler sampler;
  double p_r1 = 0.2;
  /// "large": every sample has >= large_min_crossings and originals are left out.
  bool large_corpus = false;
  int large_min_crossings = 70;
  SplitSpec split;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency
  double distance_scale = kDefaultDistanceScale;
  KeyValues source;  // config as read, hashed into the manifest

  /// Keys: seed, target, versions, c_min, c_max, p_r1, corpus (standard|large),
  /// large_min_crossings, split (random|solved|large), holdout, threads, d_s,
  /// column.name, column.pd, column.crossing_number, feature.<slot>,
  /// target.<name>. Unknown keys are an error.
  static DatasetConfig from_key_values(const KeyValues& kv);
};

struct DatasetResult {
  std::size_t train_samples = 0;
  std::size_t test_samples = 0;
  std::vector<SkippedRow> skipped;
  std::size_t excluded_for_target = 0;
  std::string manifest;  // as written
};

/// Full pipeline: ingest, split, augment, encode, validate, emit
/// `train.jsonl`, `test.jsonl` and `manifest.json` into `out_dir`.
DatasetResult run_dataset(const std::filesystem::path& csv, const DatasetConfig& cfg,
                          const std::filesystem::path& out_dir);

}  // namespace knotgraph
