#include "knotgraph/graph_json.hpp"

#include <algorithm>
#include <string>

#include "knotgraph/error.hpp"

namespace knotgraph {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json prepared_graph_json(const KnotGraph& g, const SampleMeta& meta) {
  ordered_json j;
  j["name"] = meta.name;
  j["base"] = meta.base;
  j["seed"] = meta.seed;
  j["crossings"] = g.source_crossings;
  j["num_nodes"] = g.node_count;
  ordered_json edges = ordered_json::array();
  ordered_json attrs = ordered_json::array();
  for (const GraphEdge& e : g.edges) {
    edges.push_back({e.u, e.v});
    edges.push_back({e.v, e.u});
    const ordered_json attr = {static_cast<double>(e.alternation), e.activated_distance};
    attrs.push_back(attr);
    attrs.push_back(attr);
  }
  j["edges"] = std::move(edges);
  j["edge_attr"] = std::move(attrs);
  std::size_t max_degree = 1;
  for (const auto& around : g.rotation) max_degree = std::max(max_degree, around.size());
  ordered_json nodes = ordered_json::array();
  for (int v = 0; v < g.node_count; ++v) {
    const std::size_t degree = v < static_cast<int>(g.rotation.size()) ? g.rotation[v].size() : 0;
    nodes.push_back({1.0, static_cast<double>(degree) / static_cast<double>(max_degree)});
  }
  j["node_attr"] = std::move(nodes);
  j["features"] = meta.features;
  j["target"] = meta.target;
  j["target_name"] = meta.target_name;
  return j;
}

ordered_json labeled_graph_json(const KnotGraph& g, const SampleMeta& meta) {
  ordered_json j = prepared_graph_json(g, meta);
  ordered_json labels = ordered_json::array();
  for (const GraphEdge& e : g.edges) {
    labels.push_back(e.raw_label);
    labels.push_back(e.raw_label);
  }
  j["raw_label"] = std::move(labels);
  ordered_json rotation = ordered_json::array();
  for (const auto& around : g.rotation) {
    ordered_json arcs = ordered_json::array();
    for (const EdgeEnd& end : around) arcs.push_back(2 * end.edge + end.side);
    rotation.push_back(std::move(arcs));
  }
  j["rotation"] = std::move(rotation);
  return j;
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw KnotError(std::string("graph json: missing field '") + key + "'");
  return j.at(key);
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw KnotError(std::string("graph json: ") + what + " must be an integer");
  return v.get<int>();
}

}  // namespace

KnotGraph graph_from_json(const json& j) {
  KnotGraph g;
  g.node_count = as_int(field(j, "num_nodes"), "num_nodes");
  if (g.node_count < 0) throw KnotError("graph json: num_nodes must be non-negative");
  if (j.contains("crossings")) g.source_crossings = as_int(j.at("crossings"), "crossings");
  const json& edges = field(j, "edges");
  const json& attrs = field(j, "edge_attr");
  const json& labels = field(j, "raw_label");
  const json& rotation = field(j, "rotation");
  if (!edges.is_array() || edges.size() % 2 != 0) throw KnotError("graph json: edges must hold arc pairs");
  if (!attrs.is_array() || attrs.size() != edges.size() || !labels.is_array() || labels.size() != edges.size()) {
    throw KnotError("graph json: edge_attr and raw_label must align with edges");
  }
  for (std::size_t arc = 0; arc < edges.size(); arc += 2) {
    const json& fwd = edges[arc];
    const json& back = edges[arc + 1];
    if (!fwd.is_array() || fwd.size() != 2 || !back.is_array() || back.size() != 2) {
      throw KnotError("graph json: arc " + std::to_string(arc) + " is not a [src,dst] pair");
    }
    GraphEdge e;
    e.u = as_int(fwd[0], "arc endpoint");
    e.v = as_int(fwd[1], "arc endpoint");
    if (as_int(back[0], "arc endpoint") != e.v || as_int(back[1], "arc endpoint") != e.u) {
      throw KnotError("graph json: arc " + std::to_string(arc + 1) + " is not the reverse of arc " + std::to_string(arc));
    }
    if (e.u < 0 || e.u >= g.node_count || e.v < 0 || e.v >= g.node_count) {
      throw KnotError("graph json: arc " + std::to_string(arc) + " leaves the node range");
    }
    const json& attr = attrs[arc];
    if (!attr.is_array() || attr.size() != 2 || !attr[0].is_number() || !attr[1].is_number()) {
      throw KnotError("graph json: edge_attr entries must be [alternation, distance]");
    }
    e.alternation = static_cast<int>(attr[0].get<double>());
    e.activated_distance = attr[1].get<double>();
    e.raw_label = as_int(labels[arc], "raw_label");
    if (as_int(labels[arc + 1], "raw_label") != e.raw_label) {
      throw KnotError("graph json: arcs " + std::to_string(arc) + " and " + std::to_string(arc + 1) +
                      " carry different labels");
    }
    g.edges.push_back(e);
  }
  if (!rotation.is_array() || static_cast<int>(rotation.size()) != g.node_count) {
    throw KnotError("graph json: rotation needs one entry per node");
  }
  for (const json& around : rotation) {
    if (!around.is_array()) throw KnotError("graph json: rotation entries must be arrays");
    std::vector<EdgeEnd> ends;
    for (const json& arc : around) {
      const int a = as_int(arc, "rotation arc");
      if (a < 0 || a >= static_cast<int>(edges.size())) throw KnotError("graph json: rotation arc out of range");
      ends.push_back({a / 2, a % 2});
    }
    g.rotation.push_back(std::move(ends));
  }
  return g;
}

}  // namespace knotgraph
