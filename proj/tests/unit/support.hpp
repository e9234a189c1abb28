#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "knotgraph/dataset.hpp"
#include "knotgraph/diagram.hpp"
#include "knotgraph/reidemeister.hpp"
#include "knotgraph/rng.hpp"

namespace testing {

inline const char* const kTrefoil = "X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)";
inline const char* const kFigureEight = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]";
inline const char* const kKink = "X(1,1,2,2)";

inline std::filesystem::path fixture_path() { return std::filesystem::path(KNOTGRAPH_TEST_DATA) / "knotinfo_fixture.csv"; }

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline const std::vector<knotgraph::KnotRecord>& fixture() {
  static const std::vector<knotgraph::KnotRecord> records =
      knotgraph::ingest_csv(fixture_path(), knotgraph::ColumnMapping::knotinfo()).records;
  return records;
}

inline const knotgraph::KnotRecord& fixture_knot(std::string_view name) {
  for (const auto& r : fixture()) {
    if (r.name == name) return r;
  }
  throw std::runtime_error("no fixture knot " + std::string(name));
}

struct ShuffledCase {
  std::string base;
  knotgraph::Diagram original;
  knotgraph::Diagram shuffled;
  int c = 0;
  std::uint64_t seed = 0;
};

/// Shuffles of random fixture knots with c drawn from [c_lo, c_hi].
inline std::vector<ShuffledCase> shuffled_cases(std::size_t count, std::uint64_t seed, int c_lo, int c_hi,
                                                int max_solved = 99) {
  std::vector<const knotgraph::KnotRecord*> pool;
  for (const auto& r : fixture()) {
    if (r.crossing_number <= max_solved) pool.push_back(&r);
  }
  knotgraph::Rng rng(seed);
  std::vector<ShuffledCase> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto& r = *pool[rng.below(pool.size())];
    knotgraph::ShuffleConfig cfg;
    cfg.c = static_cast<int>(rng.between(c_lo, c_hi));
    cfg.seed = rng.next();
    out.push_back({r.name, r.diagram, knotgraph::shuffle(r.diagram, cfg), cfg.c, cfg.seed});
  }
  return out;
}

/// Crossing index of every strand visit, visit v sitting between labels
/// v-1 and v. Built from the raw label lists only.
inline std::vector<int> visit_crossings(const knotgraph::Diagram& d) {
  std::vector<int> at(d.edge_count(), -1);
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossing(c);
    // incoming labels are at positions 0 and over_in
    at[x.labels[0]] = c;
    at[x.labels[x.over_in]] = c;
  }
  std::vector<int> visits(d.edge_count());
  for (int label = 0; label < d.edge_count(); ++label) visits[(label + 1) % d.edge_count()] = at[label];
  return visits;
}

}  // namespace testing
