#include "knotgraph/diagram.hpp"

#include <string>

#include "knotgraph/error.hpp"

namespace knotgraph {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

Diagram::Diagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  const int n = crossing_count();
  if (n == 0) throw ParseError("empty diagram");
  const int edges = 2 * n;
  tail_.assign(edges, -1);
  head_.assign(edges, -1);

  for (int c = 0; c < n; ++c) {
    const Crossing& x = crossings_[c];
    if (x.over_in != 1 && x.over_in != 3) {
      throw ParseError("crossing " + std::to_string(c + 1) + ": over strand must enter at position 1 or 3");
    }
    for (int p = 0; p < 4; ++p) {
      const int label = x.labels[p];
      if (label < 0 || label >= edges) {
        throw ParseError("crossing " + std::to_string(c + 1) + ": label " + std::to_string(label) +
                         " outside 0.." + std::to_string(edges - 1));
      }
      auto& slot = x.is_incoming(p) ? head_[label] : tail_[label];
      if (slot != -1) {
        throw ParseError("label " + std::to_string(label) + " used twice as " +
                         (x.is_incoming(p) ? "incoming" : "outgoing"));
      }
      slot = make_dart(c, p);
    }
    for (int in : {0, x.over_in}) {
      const int out = (in + 2) % 4;
      if (x.labels[out] != (x.labels[in] + 1) % edges) {
        throw ParseError("crossing " + std::to_string(c + 1) + ": labels not consecutive along the strand (" +
                         std::to_string(x.labels[in]) + " -> " + std::to_string(x.labels[out]) + ")");
      }
    }
  }
  // Every label has exactly one head and one tail by counting: 4N darts
  // were placed into 2N head slots and 2N tail slots without collision.
  compute_faces();
  fingerprint_ = fnv1a64(render_pd(*this));
}

Dart Diagram::twin(Dart d) const {
  const int label = label_at(d);
  return tail_[label] == d ? head_[label] : tail_[label];
}

void Diagram::compute_faces() {
  face_of_dart_.assign(4 * crossing_count(), -1);
  faces_.clear();
  for (int label = 0; label < edge_count(); ++label) {
    for (Dart start : {tail_[label], head_[label]}) {
      if (face_of_dart_[start] != -1) continue;
      Face face;
      face.id = static_cast<int>(faces_.size());
      Dart d = start;
      do {
        face_of_dart_[d] = face.id;
        face.darts.push_back(d);
        d = cw_next(twin(d));
      } while (d != start);
      faces_.push_back(std::move(face));
    }
  }
}

std::string render_pd(const Diagram& d) {
  std::string out;
  for (const Crossing& x : d.crossings()) {
    if (!out.empty()) out += ',';
    out += "X(";
    for (int p = 0; p < 4; ++p) {
      if (p) out += ',';
      out += std::to_string(x.labels[p] + 1);
    }
    out += ')';
  }
  return out;
}

Diagram enumerate_edges(const Diagram& d, int start) {
  const int edges = d.edge_count();
  if (start < 0 || start >= edges) {
    throw KnotError("enumerate_edges: start label " + std::to_string(start) + " does not exist");
  }
  std::vector<Crossing> crossings(d.crossings().begin(), d.crossings().end());
  for (Crossing& x : crossings) {
    for (int& label : x.labels) label = (label - start + edges) % edges;
  }
  return Diagram(std::move(crossings));
}

Diagram mirror(const Diagram& d) {
  std::vector<Crossing> crossings;
  crossings.reserve(d.crossing_count());
  for (const Crossing& x : d.crossings()) {
    // The old over-in dart becomes the new position 0.
    Crossing m;
    for (int k = 0; k < 4; ++k) m.labels[k] = x.labels[(x.over_in + k) % 4];
    m.over_in = 4 - x.over_in;
    crossings.push_back(m);
  }
  return Diagram(std::move(crossings));
}

}  // namespace knotgraph
