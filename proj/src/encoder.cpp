#include "knotgraph/encoder.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "knotgraph/error.hpp"

namespace knotgraph {
namespace {

struct Transversal {
  int in = 0;
  int out = 0;
};

// The strand visit at dart t's crossing that t does not belong to.
Transversal transversal(const Diagram& d, Dart t) {
  const Dart a = ccw_next(t), b = cw_next(t);
  const Crossing& x = d.crossing(dart_crossing(a));
  return x.is_incoming(dart_position(a)) ? Transversal{d.label_at(a), d.label_at(b)}
                                         : Transversal{d.label_at(b), d.label_at(a)};
}

// Twice the strand position of a visit: between labels in and out.
int doubled_position(const Transversal& v, int edges) {
  const int gap = ((v.out - v.in) % edges + edges) % edges;
  return (2 * v.in + gap) % (2 * edges);
}

void check_label(const Diagram& d, int label) {
  if (label < 0 || label >= d.edge_count()) throw KnotError("edge label " + std::to_string(label) + " does not exist");
}

}  // namespace

int alternation_attr(const Diagram& d, int label) {
  check_label(d, label);
  return d.pass_at(d.tail(label)) != d.pass_at(d.head(label)) ? 1 : -1;
}

double activate_distance(int raw, double distance_scale) {
  // 1 - 2^-x rounds to 1.0 once x passes 53; keep the value below 1.
  return std::min(1.0 - std::exp2(-raw / distance_scale), std::nextafter(1.0, 0.0));
}

EdgeDistance distance_attr(const Diagram& d, int label, double distance_scale) {
  check_label(d, label);
  const int edges = d.edge_count();
  const int px = doubled_position(transversal(d, d.tail(label)), edges);
  const int py = doubled_position(transversal(d, d.head(label)), edges);
  const int delta = ((px - py) % (2 * edges) + 2 * edges) % (2 * edges);
  const int doubled = std::min(delta, 2 * edges - delta);
  const int raw = (doubled + 1) / 2;
  return {raw, activate_distance(raw, distance_scale)};
}

int literal_distance(const Diagram& d, int label) {
  check_label(d, label);
  const Transversal x = transversal(d, d.tail(label));
  const Transversal y = transversal(d, d.head(label));
  return (std::abs(x.in + x.out - (y.in + y.out)) / 2) % d.crossing_count();
}

KnotGraph encode(const Diagram& d, const EncodeOptions& options) {
  if (!(options.distance_scale > 0.0)) throw KnotError("distance scale must be positive");
  KnotGraph g;
  g.node_count = static_cast<int>(d.faces().size());
  g.source_crossings = d.crossing_count();
  g.source_fingerprint = d.fingerprint();
  g.distance_scale = options.distance_scale;
  g.edges.reserve(d.edge_count());
  std::set<std::pair<int, int>> seen;
  for (int label = 0; label < d.edge_count(); ++label) {
    GraphEdge e;
    e.u = d.left_face(label);
    e.v = d.right_face(label);
    if (e.u == e.v) {
      throw KnotError("edge " + std::to_string(label) + " borders face " + std::to_string(e.u) +
                      " on both sides; the graph would contain a self-loop");
    }
    e.raw_label = label;
    e.alternation = alternation_attr(d, label);
    if (options.paper_literal_distance) {
      e.raw_distance = literal_distance(d, label);
      e.activated_distance = activate_distance(e.raw_distance, options.distance_scale);
    } else {
      const EdgeDistance dist = distance_attr(d, label, options.distance_scale);
      e.raw_distance = dist.raw;
      e.activated_distance = dist.activated;
    }
    if (!seen.insert(std::minmax(e.u, e.v)).second) ++g.parallel_edges;
    g.edges.push_back(e);
  }
  g.rotation.resize(g.node_count);
  for (const Face& f : d.faces()) {
    for (Dart t : f.darts) g.rotation[f.id].push_back({d.label_at(t), d.is_tail(t) ? 0 : 1});
  }
  return g;
}

std::vector<std::vector<EdgeEnd>> graph_faces(const KnotGraph& g) {
  const std::size_t edge_count = g.edges.size();
  if (static_cast<int>(g.rotation.size()) != g.node_count) throw KnotError("rotation system size != node count");
  // index of each end inside its node's rotation
  std::vector<std::array<int, 2>> slot(edge_count, {-1, -1});
  for (int node = 0; node < g.node_count; ++node) {
    const auto& around = g.rotation[node];
    for (std::size_t k = 0; k < around.size(); ++k) {
      const EdgeEnd e = around[k];
      if (e.edge < 0 || static_cast<std::size_t>(e.edge) >= edge_count || (e.side != 0 && e.side != 1)) {
        throw KnotError("rotation at node " + std::to_string(node) + " references a missing edge end");
      }
      if (g.node_of(e) != node || slot[e.edge][e.side] != -1) {
        throw KnotError("rotation at node " + std::to_string(node) + " is inconsistent with edge " +
                        std::to_string(e.edge));
      }
      slot[e.edge][e.side] = static_cast<int>(k);
    }
  }
  for (std::size_t e = 0; e < edge_count; ++e) {
    if (slot[e][0] == -1 || slot[e][1] == -1) {
      throw KnotError("edge " + std::to_string(e) + " is missing from the rotation system");
    }
  }

  const auto next = [&](EdgeEnd e) {
    const EdgeEnd t = e.twin();
    const auto& around = g.rotation[g.node_of(t)];
    return around[(slot[t.edge][t.side] + 1) % around.size()];
  };
  std::vector<std::array<char, 2>> visited(edge_count, {0, 0});
  std::vector<std::vector<EdgeEnd>> faces;
  for (std::size_t e = 0; e < edge_count; ++e) {
    for (int side = 0; side < 2; ++side) {
      if (visited[e][side]) continue;
      std::vector<EdgeEnd> face;
      EdgeEnd cur{static_cast<int>(e), side};
      while (!visited[cur.edge][cur.side]) {
        visited[cur.edge][cur.side] = 1;
        face.push_back(cur);
        cur = next(cur);
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

}  // namespace knotgraph
