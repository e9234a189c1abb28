#include <cmath>
#include <set>

#include "doctest.h"
#include "knotgraph/error.hpp"
#include "knotgraph/graph_json.hpp"
#include "knotgraph/invariants.hpp"
#include "support.hpp"

using namespace knotgraph;

namespace {

const char* const kThreeKnots =
    "name,pd,solved,alt,det,vol\n"
    "3_1,\"[[1,5,2,4],[3,1,4,6],[5,3,6,2]]\",3,Y,3,0\n"
    "4_1,\"[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]\",4,Y,5,2.0298832128\n"
    "broken,nonsense,3,Y,1,0\n"
    "5_1,\"[[2,8,3,7],[4,10,5,9],[6,2,7,1],[8,4,9,3],[10,6,1,5]]\",5,Y,5,\n";

ColumnMapping three_mapping() {
  ColumnMapping m;
  m.name = "name";
  m.pd = "pd";
  m.crossing_number = "solved";
  m.features.assign(kFeatureCount, "");
  m.features[0] = "alt";
  m.features[7] = "det";
  m.targets = {{"determinant", "det"}, {"volume", "vol"}};
  return m;
}

std::filesystem::path temp_dir(const std::string& name) {
  const auto p = std::filesystem::temp_directory_path() / ("knotgraph_test_" + name);
  std::filesystem::remove_all(p);
  return p;
}

std::vector<KnotRecord> synthetic_records(int count) {
  std::vector<KnotRecord> out;
  for (int i = 0; i < count; ++i) {
    const auto& src = testing::fixture()[static_cast<std::size_t>(i) % testing::fixture().size()];
    KnotRecord r{src.name + "_" + std::to_string(i), src.diagram, 3 + i % 10, src.features, src.targets};
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

TEST_SUITE("dataset") {
  TEST_CASE("ingest three knots") {
    const IngestResult r = ingest_csv_text(kThreeKnots, three_mapping());
    REQUIRE(r.records.size() == 3);
    CHECK(r.records[0].name == "3_1");
    CHECK(r.records[0].targets.at("determinant") == 3);
    CHECK(r.records[0].features.size() == kFeatureCount);
    CHECK(r.records[0].features[0] == 1.0);
    CHECK(r.records[0].features[9] == 0.0);
    CHECK(goeritz_determinant(r.records[1].diagram) == 5);
    // missing volume only drops that target
    CHECK(r.records[2].targets.count("volume") == 0);
    CHECK(r.records[2].targets.at("determinant") == 5);
    REQUIRE(r.skipped.size() == 1);
    CHECK(r.skipped[0].name == "broken");
    CHECK(r.skipped[0].line == 4);
  }

  TEST_CASE("ingest errors") {
    ColumnMapping m = three_mapping();
    m.targets["determinant"] = "determinant";
    CHECK_THROWS_WITH_AS(ingest_csv_text(kThreeKnots, m), doctest::Contains("determinant"), DatasetError);
    CHECK_THROWS_AS(ingest_csv_text("name,pd,solved,alt,det,vol\nx,nonsense,3,Y,1,0\n", three_mapping()), DatasetError);
    CHECK_THROWS_AS(ingest_csv("/nonexistent/file.csv", three_mapping()), DatasetError);
  }

  TEST_CASE("feature parsing") {
    CHECK(parse_feature("Y") == 1.0);
    CHECK(parse_feature("N") == -1.0);
    CHECK(parse_feature("Small") == -1.0);
    CHECK(parse_feature("Large") == 1.0);
    CHECK(parse_feature(" -2 ") == -2.0);
    CHECK(parse_feature("2.0298832128") == 2.0298832128);
    CHECK_THROWS_AS(parse_feature(""), DatasetError);
    CHECK_THROWS_AS(parse_feature("[2,3]"), DatasetError);
  }

  TEST_CASE("fixture ingests completely") {
    const IngestResult r = ingest_csv(testing::fixture_path(), ColumnMapping::knotinfo());
    CHECK(r.records.size() == 108);
    CHECK(r.skipped.empty());
    for (const auto& rec : r.records) CHECK(rec.targets.size() == 6);
  }

  TEST_CASE("augment") {
    const Diagram d = testing::fixture_knot("5_2").diagram;
    CSampler sampler;
    sampler.lo = 5;
    sampler.hi = 15;
    const auto out = augment(d, 3, sampler, 77);
    REQUIRE(out.size() == 4);
    CHECK(out[0].version == 0);
    CHECK(out[0].diagram == d);
    std::set<std::uint64_t> seeds;
    for (std::size_t k = 1; k < out.size(); ++k) {
      CHECK(out[k].version == static_cast<int>(k));
      CHECK(out[k].c >= 5);
      CHECK(out[k].c <= 15);
      CHECK(goeritz_determinant(out[k].diagram) == 7);
      seeds.insert(out[k].seed);
    }
    CHECK(seeds.size() == 3);
    const auto again = augment(d, 3, sampler, 77);
    for (std::size_t k = 0; k < out.size(); ++k) CHECK(again[k].diagram == out[k].diagram);
    CHECK(augment(d, 0, sampler, 1, 0.2, false).empty());

    sampler.min_crossings = 30;
    for (const auto& a : augment(d, 2, sampler, 5, 0.2, false)) CHECK(a.diagram.crossing_count() >= 30);
    sampler.lo = 0;
    CHECK_THROWS_AS(augment(d, 1, sampler, 5), DatasetError);
  }

  TEST_CASE("random holdout") {
    const auto records = synthetic_records(10);
    SplitSpec spec;
    spec.seed = 9;
    const Split s = split_records(records, spec);
    CHECK(s.train.size() == 8);
    CHECK(s.test.size() == 2);
    const Split again = split_records(records, spec);
    CHECK(again.train == s.train);
    CHECK(again.test == s.test);
    std::set<std::size_t> all(s.train.begin(), s.train.end());
    for (std::size_t i : s.test) CHECK(all.insert(i).second);
    CHECK(all.size() == 10);
  }

  TEST_CASE("split by solved crossings") {
    const auto records = synthetic_records(40);
    SplitSpec spec;
    spec.mode = SplitMode::BySolvedCrossings;
    const Split s = split_records(records, spec);
    for (std::size_t i : s.train) CHECK(records[i].crossing_number <= 11);
    for (std::size_t i : s.test) CHECK(records[i].crossing_number == 12);
    CHECK(s.train.size() + s.test.size() == 40);

    std::vector<KnotRecord> small;
    for (const auto& r : records) {
      if (r.crossing_number < 12) small.push_back(r);
    }
    CHECK_THROWS_AS(split_records(small, spec), DatasetError);
    CHECK(parse_split_mode("solved") == SplitMode::BySolvedCrossings);
    CHECK(parse_split_mode("LARGE_KNOTS") == SplitMode::LargeKnots);
    CHECK_THROWS_AS(parse_split_mode("sideways"), DatasetError);
  }

  TEST_CASE("config") {
    const DatasetConfig cfg = DatasetConfig::from_key_values(read_key_values(KNOTGRAPH_TEST_DATA "/small.cfg"));
    CHECK(cfg.seed == 2977);
    CHECK(cfg.versions == 2);
    CHECK(cfg.sampler.lo == 5);
    CHECK(cfg.threads == 3);
    CHECK_FALSE(cfg.large_corpus);
    const DatasetConfig dflt = DatasetConfig::from_key_values({});
    CHECK(dflt.sampler.lo == 20);
    CHECK(dflt.sampler.hi == 60);
    CHECK(dflt.target == "determinant");
    CHECK_THROWS_AS(DatasetConfig::from_key_values({{"colour", "red"}}), DatasetError);
    CHECK_THROWS_AS(DatasetConfig::from_key_values({{"target", "mass"}}), DatasetError);
    CHECK_THROWS_AS(DatasetConfig::from_key_values({{"corpus", "huge"}}), DatasetError);
    CHECK_THROWS_AS(DatasetConfig::from_key_values({{"feature.colour", "x"}}), DatasetError);
    const DatasetConfig mapped = DatasetConfig::from_key_values({{"feature.reserved", "volume"}});
    CHECK(mapped.mapping.features[9] == "volume");
  }

  TEST_CASE("pipeline output") {
    const DatasetConfig cfg = DatasetConfig::from_key_values(read_key_values(KNOTGRAPH_TEST_DATA "/small.cfg"));
    const auto out = temp_dir("pipeline");
    const DatasetResult r = run_dataset(testing::fixture_path(), cfg, out);
    CHECK(r.train_samples + r.test_samples == 108 * 3);

    const auto manifest = nlohmann::json::parse(testing::read_text(out / "manifest.json"));
    CHECK(manifest["count"] == 324);
    CHECK(manifest["splits"]["train"] == r.train_samples);
    CHECK(manifest["seed"] == 2977);
    for (const char* key : {"count", "splits", "mean_crossings", "std_crossings", "seed", "config_hash",
                            "feature_standardization"}) {
      CHECK(manifest.contains(key));
    }

    std::set<std::string> train_bases, test_bases;
    std::map<std::string, double> target_of;
    std::vector<double> first_feature;
    for (const char* split : {"train", "test"}) {
      std::istringstream lines(testing::read_text(out / (std::string(split) + ".jsonl")));
      for (std::string line; std::getline(lines, line);) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.size() == 11);
        const std::string base = j["base"];
        (std::string(split) == "train" ? train_bases : test_bases).insert(base);
        if (target_of.count(base)) CHECK(target_of[base] == j["target"].get<double>());
        target_of[base] = j["target"];
        const int nodes = j["num_nodes"];
        CHECK(nodes == j["crossings"].get<int>() + 2);
        CHECK(j["edges"].size() == 4 * j["crossings"].get<std::size_t>());
        CHECK(j["edge_attr"].size() == j["edges"].size());
        for (const auto& e : j["edges"]) {
          CHECK(e[0].get<int>() < nodes);
          CHECK(e[1].get<int>() < nodes);
        }
        for (const auto& a : j["edge_attr"]) {
          CHECK(std::abs(a[0].get<double>()) == 1.0);
          CHECK(a[1].get<double>() >= 0.0);
          CHECK(a[1].get<double>() < 1.0);
        }
        CHECK(j["features"].size() == kFeatureCount);
        if (std::string(split) == "train") first_feature.push_back(j["features"][4]);
      }
    }
    for (const auto& b : test_bases) CHECK(train_bases.count(b) == 0);
    CHECK(train_bases.size() + test_bases.size() == 108);
    // standardized over train records (three samples each)
    double mean = 0;
    for (double v : first_feature) mean += v;
    CHECK(mean / static_cast<double>(first_feature.size()) == doctest::Approx(0.0).epsilon(1e-9));
  }

  TEST_CASE("pipeline is independent of thread count") {
    KeyValues kv = read_key_values(KNOTGRAPH_TEST_DATA "/small.cfg");
    kv["versions"] = "1";
    kv["threads"] = "1";
    const auto a = temp_dir("threads1"), b = temp_dir("threads4");
    run_dataset(testing::fixture_path(), DatasetConfig::from_key_values(kv), a);
    kv["threads"] = "4";
    run_dataset(testing::fixture_path(), DatasetConfig::from_key_values(kv), b);
    CHECK(testing::read_text(a / "train.jsonl") == testing::read_text(b / "train.jsonl"));
    CHECK(testing::read_text(a / "test.jsonl") == testing::read_text(b / "test.jsonl"));
    // the hash covers the config as given
    CHECK(testing::read_text(a / "manifest.json") != testing::read_text(b / "manifest.json"));
  }
}
