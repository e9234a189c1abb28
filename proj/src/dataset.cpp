#include "knotgraph/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "knotgraph/csv.hpp"
#include "knotgraph/decoder.hpp"
#include "knotgraph/error.hpp"
#include "knotgraph/graph_json.hpp"
#include "knotgraph/reidemeister.hpp"
#include "knotgraph/rng.hpp"

namespace knotgraph {

ColumnMapping ColumnMapping::knotinfo() {
  ColumnMapping m;
  m.features = {"alternating", "fibered",   "positive_braid", "small_large",         "crossing_number",
                "signature",   "arc_index", "determinant",    "rasmussen_invariant", ""};
  m.targets = {{"determinant", "determinant"},
               {"signature", "signature"},
               {"volume", "volume"},
               {"rasmussen_s", "rasmussen_invariant"},
               {"tau", "ozsvath_szabo_tau_invariant"},
               {"q_positivity", "quasipositive"}};
  return m;
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_feature(std::string_view field) {
  const std::string_view t = trim(field);
  const std::string l = lower(t);
  if (l == "y" || l == "yes" || l == "true") return 1.0;
  if (l == "n" || l == "no" || l == "false") return -1.0;
  if (l == "large") return 1.0;
  if (l == "small") return -1.0;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw DatasetError("not a number or boolean: '" + std::string(t) + "'");
  }
  return v;
}

IngestResult ingest_csv_text(std::string_view text, const ColumnMapping& mapping) {
  const CsvTable table = parse_csv(text);
  const auto need = [&](const std::string& column) {
    const int at = table.column(column);
    if (at < 0) throw DatasetError("csv: mapped column '" + column + "' is missing");
    return at;
  };
  const int name_col = need(mapping.name);
  const int pd_col = need(mapping.pd);
  const int n_col = need(mapping.crossing_number);
  std::vector<int> feature_cols;
  for (const std::string& c : mapping.features) feature_cols.push_back(c.empty() ? -1 : need(c));
  std::vector<std::pair<std::string, int>> target_cols;
  for (const auto& [target, column] : mapping.targets) target_cols.emplace_back(target, need(column));

  IngestResult result;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const std::size_t line = r + 2;
    const auto cell = [&](int col) -> std::string_view {
      return col < static_cast<int>(row.size()) ? std::string_view(row[col]) : std::string_view();
    };
    const std::string name(trim(cell(name_col)));
    std::string stage = "pd";
    try {
      Diagram d = parse_pd(cell(pd_col));
      stage = "crossing number";
      const double n = parse_feature(cell(n_col));
      if (n != std::floor(n) || n < 0) throw DatasetError("crossing number must be a non-negative integer");
      std::vector<double> features;
      for (std::size_t k = 0; k < feature_cols.size(); ++k) {
        stage = "feature " + (k < std::size(kFeatureSlots) ? std::string(kFeatureSlots[k]) : std::to_string(k));
        features.push_back(feature_cols[k] < 0 ? 0.0 : parse_feature(cell(feature_cols[k])));
      }
      std::map<std::string, double> targets;
      for (const auto& [target, col] : target_cols) {
        // a missing target only excludes the record from that task
        try {
          targets[target] = parse_feature(cell(col));
        } catch (const DatasetError&) {
        }
      }
      result.records.push_back({name, std::move(d), static_cast<int>(n), std::move(features), std::move(targets)});
    } catch (const KnotError& e) {
      result.skipped.push_back({line, name, stage + ": " + e.what()});
    }
  }
  if (result.records.empty()) throw DatasetError("csv: no valid rows");
  return result;
}

IngestResult ingest_csv(const std::filesystem::path& path, const ColumnMapping& mapping) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot open '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return ingest_csv_text(text.str(), mapping);
}

std::vector<AugmentedDiagram> augment(const Diagram& d, int versions, const CSampler& sampler, std::uint64_t seed,
                                      double p_r1, bool include_original) {
  if (versions < 0) throw DatasetError("versions must be non-negative");
  if (sampler.lo < 1 || sampler.hi < sampler.lo) throw DatasetError("c range must satisfy 1 <= c_min <= c_max");
  std::vector<AugmentedDiagram> out;
  if (include_original) out.push_back({d, 0, seed, 0});
  for (int k = 1; k <= versions; ++k) {
    const std::uint64_t version_seed = derive_seed(seed, static_cast<std::uint64_t>(k));
    Rng rng(version_seed);
    ShuffleConfig cfg;
    cfg.c = static_cast<int>(rng.between(sampler.lo, sampler.hi));
    cfg.p_r1 = p_r1;
    cfg.p_r2 = 1.0 - p_r1;
    for (;;) {
      cfg.seed = rng.next();
      Diagram shuffled = shuffle(d, cfg);
      if (shuffled.crossing_count() >= sampler.min_crossings) {
        out.push_back({std::move(shuffled), k, version_seed, cfg.c});
        break;
      }
      cfg.c += sampler.escalation;
      if (sampler.escalation <= 0 || cfg.c > sampler.max_c) {
        throw DatasetError("could not reach " + std::to_string(sampler.min_crossings) + " crossings with c <= " +
                           std::to_string(sampler.max_c));
      }
    }
  }
  return out;
}

SplitMode parse_split_mode(std::string_view text) {
  const std::string l = lower(trim(text));
  if (l == "random" || l == "random_holdout") return SplitMode::RandomHoldout;
  if (l == "solved" || l == "by_solved_crossings") return SplitMode::BySolvedCrossings;
  if (l == "large" || l == "large_knots") return SplitMode::LargeKnots;
  throw DatasetError("unknown split mode '" + std::string(text) + "' (random, solved, large)");
}

std::string_view to_string(SplitMode mode) {
  switch (mode) {
    case SplitMode::RandomHoldout: return "RANDOM_HOLDOUT";
    case SplitMode::BySolvedCrossings: return "BY_SOLVED_CROSSINGS";
    case SplitMode::LargeKnots: return "LARGE_KNOTS";
  }
  return "?";
}

Split split_records(const std::vector<KnotRecord>& records, const SplitSpec& spec) {
  Split s;
  if (spec.mode == SplitMode::BySolvedCrossings) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (records[i].crossing_number <= spec.max_train_crossings) s.train.push_back(i);
      else if (records[i].crossing_number == spec.test_crossings) s.test.push_back(i);
    }
  } else {
    if (!(spec.holdout > 0.0 && spec.holdout < 1.0)) throw DatasetError("holdout fraction must lie in (0,1)");
    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(derive_seed(spec.seed, fnv1a64("split")));
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    const auto test_count = static_cast<std::size_t>(std::llround(spec.holdout * static_cast<double>(order.size())));
    s.test.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(std::min(test_count, order.size())));
    s.train.assign(order.begin() + static_cast<std::ptrdiff_t>(s.test.size()), order.end());
    std::sort(s.train.begin(), s.train.end());
    std::sort(s.test.begin(), s.test.end());
  }
  if (s.train.empty()) throw DatasetError(std::string(to_string(spec.mode)) + " split leaves the train side empty");
  if (s.test.empty()) throw DatasetError(std::string(to_string(spec.mode)) + " split leaves the test side empty");
  return s;
}

namespace {

std::uint64_t parse_u64(std::string_view key, const std::string& s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DatasetError(std::string(key) + ": not an unsigned 64-bit integer: '" + s + "'");
  }
  return v;
}

int slot_index(std::string_view slot) {
  for (int k = 0; k < kFeatureCount; ++k) {
    if (kFeatureSlots[k] == slot) return k;
  }
  return -1;
}

}  // namespace

DatasetConfig DatasetConfig::from_key_values(const KeyValues& kv) {
  static const std::set<std::string, std::less<>> plain = {
      "seed",  "target",  "versions", "c_min",   "c_max", "p_r1", "corpus", "large_min_crossings",
      "split", "holdout", "threads",  "d_s",     "column.name", "column.pd", "column.crossing_number"};
  DatasetConfig cfg;
  cfg.source = kv;
  for (const auto& [key, value] : kv) {
    if (plain.count(key)) continue;
    if (key.starts_with("feature.")) {
      const int k = slot_index(std::string_view(key).substr(8));
      if (k < 0) throw DatasetError("config: unknown feature slot '" + key.substr(8) + "'");
      cfg.mapping.features[k] = value;
    } else if (key.starts_with("target.")) {
      cfg.mapping.targets[key.substr(7)] = value;
    } else {
      throw DatasetError("config: unknown key '" + key + "'");
    }
  }
  try {
    if (const auto it = kv.find("seed"); it != kv.end()) cfg.seed = parse_u64("seed", it->second);
    cfg.target = kv_string(kv, "target", cfg.target);
    cfg.versions = static_cast<int>(kv_int(kv, "versions", cfg.versions));
    cfg.sampler.lo = static_cast<int>(kv_int(kv, "c_min", cfg.sampler.lo));
    cfg.sampler.hi = static_cast<int>(kv_int(kv, "c_max", cfg.sampler.hi));
    cfg.p_r1 = kv_double(kv, "p_r1", cfg.p_r1);
    const std::string corpus = kv_string(kv, "corpus", "standard");
    if (corpus != "standard" && corpus != "large") throw DatasetError("config: corpus must be standard or large");
    cfg.large_corpus = corpus == "large";
    cfg.large_min_crossings = static_cast<int>(kv_int(kv, "large_min_crossings", cfg.large_min_crossings));
    if (const auto it = kv.find("split"); it != kv.end()) cfg.split.mode = parse_split_mode(it->second);
    cfg.split.holdout = kv_double(kv, "holdout", cfg.split.holdout);
    cfg.threads = static_cast<int>(kv_int(kv, "threads", cfg.threads));
    cfg.distance_scale = kv_double(kv, "d_s", cfg.distance_scale);
    cfg.mapping.name = kv_string(kv, "column.name", cfg.mapping.name);
    cfg.mapping.pd = kv_string(kv, "column.pd", cfg.mapping.pd);
    cfg.mapping.crossing_number = kv_string(kv, "column.crossing_number", cfg.mapping.crossing_number);
  } catch (const DatasetError&) {
    throw;
  } catch (const KnotError& e) {
    throw DatasetError(std::string("config: ") + e.what());
  }
  if (cfg.versions < 0) throw DatasetError("config: versions must be non-negative");
  if (!(cfg.p_r1 >= 0.0 && cfg.p_r1 <= 1.0)) throw DatasetError("config: p_r1 must lie in [0,1]");
  if (!(cfg.distance_scale > 0.0)) throw DatasetError("config: d_s must be positive");
  if (!cfg.mapping.targets.count(cfg.target)) {
    throw DatasetError("config: target '" + cfg.target + "' has no target.<name> column mapping");
  }
  return cfg;
}

namespace {

struct Standardization {
  std::vector<double> mean;
  std::vector<double> stddev;
};

// Population statistics over the train records; a constant feature keeps
// scale 1 so it maps to 0.
Standardization fit_standardization(const std::vector<KnotRecord>& records, const std::vector<std::size_t>& train) {
  const std::size_t width = records[train.front()].features.size();
  Standardization s{std::vector<double>(width, 0.0), std::vector<double>(width, 1.0)};
  for (std::size_t k = 0; k < width; ++k) {
    double sum = 0.0;
    for (std::size_t i : train) sum += records[i].features[k];
    const double mean = sum / static_cast<double>(train.size());
    double sq = 0.0;
    for (std::size_t i : train) sq += (records[i].features[k] - mean) * (records[i].features[k] - mean);
    const double sd = std::sqrt(sq / static_cast<double>(train.size()));
    s.mean[k] = mean;
    s.stddev[k] = sd > 0.0 ? sd : 1.0;
  }
  return s;
}

struct RecordJob {
  std::size_t record = 0;
  bool test = false;
};

struct RecordOutput {
  std::string lines;
  std::vector<int> crossings;
  std::exception_ptr error;
};

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DatasetError("cannot write '" + path.string() + "'");
  out << content;
  if (!out.flush()) throw DatasetError("write failed for '" + path.string() + "'");
}

}  // namespace

DatasetResult run_dataset(const std::filesystem::path& csv, const DatasetConfig& cfg,
                          const std::filesystem::path& out_dir) {
  IngestResult ingested = ingest_csv(csv, cfg.mapping);
  DatasetResult result;
  result.skipped = std::move(ingested.skipped);

  std::vector<KnotRecord> records;
  for (KnotRecord& r : ingested.records) {
    if (r.targets.count(cfg.target)) records.push_back(std::move(r));
    else ++result.excluded_for_target;
  }
  if (records.empty()) throw DatasetError("no record carries target '" + cfg.target + "'");

  SplitSpec spec = cfg.split;
  spec.seed = cfg.seed;
  const Split split = split_records(records, spec);
  const Standardization standard = fit_standardization(records, split.train);

  std::vector<RecordJob> jobs;
  for (std::size_t i : split.train) jobs.push_back({i, false});
  for (std::size_t i : split.test) jobs.push_back({i, true});
  std::sort(jobs.begin(), jobs.end(), [](const RecordJob& a, const RecordJob& b) { return a.record < b.record; });

  std::vector<RecordOutput> outputs(jobs.size());
  const auto work = [&](std::size_t j) {
    const KnotRecord& r = records[jobs[j].record];
    // LARGE_KNOTS tests on the large corpus and trains on the standard one.
    const bool large = cfg.large_corpus || (cfg.split.mode == SplitMode::LargeKnots && jobs[j].test);
    CSampler sampler = cfg.sampler;
    if (large) sampler.min_crossings = cfg.large_min_crossings;
    const std::uint64_t record_seed = derive_seed(cfg.seed, fnv1a64(r.name));
    SampleMeta meta;
    meta.base = r.name;
    meta.target = r.targets.at(cfg.target);
    meta.target_name = cfg.target;
    for (std::size_t k = 0; k < r.features.size(); ++k) {
      meta.features.push_back((r.features[k] - standard.mean[k]) / standard.stddev[k]);
    }
    EncodeOptions options;
    options.distance_scale = cfg.distance_scale;
    RecordOutput& out = outputs[j];
    for (const AugmentedDiagram& a : augment(r.diagram, cfg.versions, sampler, record_seed, cfg.p_r1, !large)) {
      const KnotGraph g = encode(a.diagram, options);
      const GraphValidation v = validate_graph(g);
      if (!v.ok()) {
        throw DatasetError(r.name + " version " + std::to_string(a.version) + ": encoded graph fails validation: " +
                           (v.diagnostics.empty() ? std::string("?") : v.diagnostics.front()));
      }
      meta.name = r.name + "/" + std::to_string(a.version);
      meta.seed = a.seed;
      out.lines += prepared_graph_json(g, meta).dump();
      out.lines += '\n';
      out.crossings.push_back(a.diagram.crossing_count());
    }
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t thread_count =
      std::min<std::size_t>(jobs.size(), cfg.threads > 0 ? static_cast<std::size_t>(cfg.threads) : hw);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      try {
        work(j);
      } catch (...) {
        outputs[j].error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < thread_count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string train_text, test_text;
  std::vector<int> all_crossings;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (outputs[j].error) std::rethrow_exception(outputs[j].error);
    (jobs[j].test ? test_text : train_text) += outputs[j].lines;
    (jobs[j].test ? result.test_samples : result.train_samples) += outputs[j].crossings.size();
    all_crossings.insert(all_crossings.end(), outputs[j].crossings.begin(), outputs[j].crossings.end());
  }

  double mean = 0.0, sd = 0.0;
  if (!all_crossings.empty()) {
    for (int n : all_crossings) mean += n;
    mean /= static_cast<double>(all_crossings.size());
    for (int n : all_crossings) sd += (n - mean) * (n - mean);
    sd = std::sqrt(sd / static_cast<double>(all_crossings.size()));
  }

  nlohmann::ordered_json manifest;
  manifest["count"] = all_crossings.size();
  manifest["splits"] = {{"mode", std::string(to_string(cfg.split.mode))},
                        {"train", result.train_samples},
                        {"test", result.test_samples},
                        {"train_knots", split.train.size()},
                        {"test_knots", split.test.size()}};
  manifest["mean_crossings"] = mean;
  manifest["std_crossings"] = sd;
  manifest["seed"] = cfg.seed;
  manifest["config_hash"] = hex64(fnv1a64(render_key_values(cfg.source)));
  nlohmann::ordered_json slots = nlohmann::ordered_json::array();
  for (std::string_view s : kFeatureSlots) slots.push_back(s);
  manifest["feature_standardization"] = {{"slots", slots}, {"mean", standard.mean}, {"std", standard.stddev}};
  result.manifest = manifest.dump(2) + "\n";

  std::filesystem::create_directories(out_dir);
  write_file(out_dir / "train.jsonl", train_text);
  write_file(out_dir / "test.jsonl", test_text);
  write_file(out_dir / "manifest.json", result.manifest);
  return result;
}

}  // namespace knotgraph
