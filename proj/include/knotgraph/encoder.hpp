#pragma once

#include <cstdint>
#include <vector>

#include "knotgraph/diagram.hpp"

namespace knotgraph {

inline constexpr double kDefaultDistanceScale = 15.0;

/// One graph edge per knot edge, joining the faces on its two sides.
/// `u` is the face on the left of the knot edge, `v` the one on its right.
struct GraphEdge {
  int u = 0;
  int v = 0;
  int raw_label = 0;
  int alternation = 1;  // +1 alternating, -1 not
  int raw_distance = 0;
  double activated_distance = 0.0;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// End of graph edge `edge` at node u (side 0) or v (side 1).
struct EdgeEnd {
  int edge = 0;
  int side = 0;

  EdgeEnd twin() const { return {edge, 1 - side}; }
  friend auto operator<=>(const EdgeEnd&, const EdgeEnd&) = default;
};

/// Planar multigraph with a rotation system. Faces of the rotation system
/// are the orbits of `end -> next_in_rotation(twin(end))`; for an encoded
/// knot there is one per crossing, each with four ends.
struct KnotGraph {
  int node_count = 0;
  std::vector<GraphEdge> edges;
  std::vector<std::vector<EdgeEnd>> rotation;  // per node, cyclic
  int source_crossings = 0;
  std::uint64_t source_fingerprint = 0;
  int parallel_edges = 0;
  double distance_scale = kDefaultDistanceScale;

  int node_of(EdgeEnd e) const { return e.side == 0 ? edges[e.edge].u : edges[e.edge].v; }
  friend bool operator==(const KnotGraph&, const KnotGraph&) = default;
};

struct EncodeOptions {
  double distance_scale = kDefaultDistanceScale;
  /// Use |a+b-(c+d)|/2 mod N instead of the circular walking distance.
  bool paper_literal_distance = false;
};

/// The knot-to-graph functor. Throws KnotError if a knot edge has the same
/// face on both sides.
KnotGraph encode(const Diagram& d, const EncodeOptions& options = {});

/// +1 if the strand changes pass type between the tail and head crossings
/// of edge `label`, -1 otherwise.
int alternation_attr(const Diagram& d, int label);

struct EdgeDistance {
  int raw = 0;
  double activated = 0.0;
};

/// Circular distance along the strand between the transversal strand
/// visits at the two crossings joined by edge `label`, in [0, N].
EdgeDistance distance_attr(const Diagram& d, int label, double distance_scale = kDefaultDistanceScale);
/// |a+b-(c+d)|/2 mod N on the same transversal labels, without wraparound handling.
int literal_distance(const Diagram& d, int label);
/// 1 - 2^(-raw / scale).
double activate_distance(int raw, double distance_scale);

/// Faces of the rotation system, discovered in edge order.
std::vector<std::vector<EdgeEnd>> graph_faces(const KnotGraph& g);

}  // namespace knotgraph
