#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotgraph/encoder.hpp"

namespace knotgraph {

struct SampleMeta {
  std::string name;
  std::string base;
  std::uint64_t seed = 0;
  std::vector<double> features;
  double target = 0.0;
  std::string target_name;
};

/// Training profile: `name`, `base`, `seed`, `crossings`, `num_nodes`,
/// `edges`, `edge_attr`, `node_attr`, `features`, `target`, `target_name`.
/// Graph edge k is emitted as arc 2k (u -> v) followed by arc 2k+1 (v -> u).
nlohmann::ordered_json prepared_graph_json(const KnotGraph& g, const SampleMeta& meta);

/// Prepared profile plus `raw_label` (per arc) and `rotation` (per node,
/// the arcs leaving it in rotation order), enough to reconstruct.
nlohmann::ordered_json labeled_graph_json(const KnotGraph& g, const SampleMeta& meta);

/// Parses the labeled profile. Throws KnotError on schema violations.
KnotGraph graph_from_json(const nlohmann::json& j);

}  // namespace knotgraph
