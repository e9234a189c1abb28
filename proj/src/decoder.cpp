#include "knotgraph/decoder.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "knotgraph/error.hpp"

namespace knotgraph {
namespace {

bool adjacent_labels(int a, int b, int modulus) {
  return (a + 1) % modulus == b || (b + 1) % modulus == a;
}

}  // namespace

GraphValidation validate_graph(const KnotGraph& g) {
  GraphValidation v;
  const int edges = static_cast<int>(g.edges.size());
  if (edges == 0 || edges % 2 != 0) {
    v.diagnostics.push_back("edge count " + std::to_string(edges) + " is not a positive even number");
    return v;
  }
  std::vector<std::vector<EdgeEnd>> faces;
  try {
    faces = graph_faces(g);
  } catch (const KnotError& e) {
    v.diagnostics.push_back(e.what());
    return v;
  }
  v.quad_faces_ok = true;
  v.label_condition_ok = true;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& face = faces[f];
    if (face.size() != 4) {
      v.quad_faces_ok = false;
      v.label_condition_ok = false;
      v.diagnostics.push_back("face " + std::to_string(f) + " has " + std::to_string(face.size()) + " edges");
      continue;
    }
    for (int k = 0; k < 2; ++k) {
      const int a = g.edges[face[k].edge].raw_label;
      const int b = g.edges[face[k + 2].edge].raw_label;
      if (a < 0 || a >= edges || b < 0 || b >= edges || !adjacent_labels(a, b, edges)) {
        v.label_condition_ok = false;
        v.diagnostics.push_back("face " + std::to_string(f) + ": opposite labels " + std::to_string(a) + " and " +
                                std::to_string(b) + " are not consecutive mod " + std::to_string(edges));
      }
    }
  }
  return v;
}

ReconstructionReport reconstruct(const KnotGraph& g) {
  ReconstructionReport report;
  GraphValidation v = validate_graph(g);
  report.quad_faces_ok = v.quad_faces_ok;
  report.label_condition_ok = v.label_condition_ok;
  report.diagnostics = std::move(v.diagnostics);
  if (!report.quad_faces_ok || !report.label_condition_ok) return report;

  const int edges = static_cast<int>(g.edges.size());
  const int n = edges / 2;
  auto faces = graph_faces(g);
  if (static_cast<int>(faces.size()) != n) {
    throw ReconstructionError("graph has " + std::to_string(faces.size()) + " faces but " + std::to_string(edges) +
                              " edges need " + std::to_string(n));
  }

  // Number crossings by their sorted labels so the result does not depend
  // on how the graph stores its edges.
  const auto key = [&](const std::vector<EdgeEnd>& f) {
    std::array<int, 4> k{};
    for (int i = 0; i < 4; ++i) k[i] = g.edges[f[i].edge].raw_label;
    std::sort(k.begin(), k.end());
    return k;
  };
  std::stable_sort(faces.begin(), faces.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });

  std::vector<int> edge_of_label(edges, -1);
  for (int e = 0; e < edges; ++e) {
    const int label = g.edges[e].raw_label;
    if (edge_of_label[label] != -1) throw ReconstructionError("raw label " + std::to_string(label) + " used twice");
    edge_of_label[label] = e;
    if (g.edges[e].alternation != 1 && g.edges[e].alternation != -1) {
      throw ReconstructionError("edge " + std::to_string(e) + ": alternation must be +1 or -1");
    }
  }

  // Face traversal visits a crossing's darts clockwise; reverse it.
  std::vector<std::array<EdgeEnd, 4>> ends(n);
  std::vector<std::array<int, 4>> labels(n);
  std::vector<std::array<bool, 4>> incoming(n);
  std::vector<Dart> head_of(edges, -1);
  for (int c = 0; c < n; ++c) {
    const auto& f = faces[c];
    ends[c] = {f[0], f[3], f[2], f[1]};
    for (int k = 0; k < 4; ++k) labels[c][k] = g.edges[ends[c][k].edge].raw_label;
    for (int p = 0; p < 2; ++p) {
      const int q = p + 2;
      const bool forward = (labels[c][p] + 1) % edges == labels[c][q];
      const bool backward = (labels[c][q] + 1) % edges == labels[c][p];
      // With two edges both directions match; the end recorded at the
      // head of its edge is the incoming one.
      const bool p_in = forward && backward ? ends[c][p].side == 1 : forward;
      incoming[c][p] = p_in;
      incoming[c][q] = !p_in;
      const int in_pos = p_in ? p : q;
      const int in_label = labels[c][in_pos];
      if (head_of[in_label] != -1) {
        throw ReconstructionError("edge label " + std::to_string(in_label) + " enters two crossings");
      }
      head_of[in_label] = make_dart(c, in_pos);
    }
  }

  // Propagate pass types along the strand from the pinned visit.
  const auto& first = labels[0];
  const int start = std::min(incoming[0][0] ? first[0] : first[2], incoming[0][1] ? first[1] : first[3]);
  std::vector<Pass> pass(edges);  // pass type at the head of each label
  pass[start] = Pass::Under;
  const auto propagate = [&](int label) {
    const Pass before = pass[(label + edges - 1) % edges];
    const bool alternates = g.edges[edge_of_label[label]].alternation == 1;
    return alternates ? (before == Pass::Under ? Pass::Over : Pass::Under) : before;
  };
  for (int k = 1; k < edges; ++k) {
    const int label = (start + k) % edges;
    pass[label] = propagate(label);
  }
  if (propagate(start) != pass[start]) {
    throw ReconstructionError("alternation attributes are inconsistent around the strand");
  }

  std::vector<Crossing> crossings(n);
  for (int c = 0; c < n; ++c) {
    std::array<int, 2> in_positions{};
    int found = 0;
    for (int k = 0; k < 4; ++k) {
      if (incoming[c][k]) in_positions[found++] = k;
    }
    const Pass p0 = pass[labels[c][in_positions[0]]];
    const Pass p1 = pass[labels[c][in_positions[1]]];
    if (p0 == p1) {
      throw ReconstructionError("crossing " + std::to_string(c) + ": both strands " +
                                (p0 == Pass::Over ? "over" : "under") + " after propagation");
    }
    const int under = p0 == Pass::Under ? in_positions[0] : in_positions[1];
    const int over = p0 == Pass::Under ? in_positions[1] : in_positions[0];
    for (int k = 0; k < 4; ++k) crossings[c].labels[k] = labels[c][(under + k) % 4];
    crossings[c].over_in = (over - under + 4) % 4;
  }

  try {
    Diagram d(std::move(crossings));
    Diagram m = mirror(d);
    report.diagram = gauss_code(m) < gauss_code(d) ? std::move(m) : std::move(d);
  } catch (const ParseError& e) {
    throw ReconstructionError(std::string("reconstructed crossings are not a knot diagram: ") + e.what());
  }
  return report;
}

}  // namespace knotgraph
