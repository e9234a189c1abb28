#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotgraph/diagram.hpp"
#include "knotgraph/encoder.hpp"

namespace knotgraph {

struct GraphValidation {
  bool quad_faces_ok = false;
  /// In every face, opposite edges carry labels l(a) = l(b) +- 1 mod 2N.
  bool label_condition_ok = false;
  std::vector<std::string> diagnostics;

  bool ok() const { return quad_faces_ok && label_condition_ok; }
};

GraphValidation validate_graph(const KnotGraph& g);

struct ReconstructionReport {
  /// Present only when both validation flags hold.
  std::optional<Diagram> diagram;
  bool quad_faces_ok = false;
  bool label_condition_ok = false;
  /// The encoding cannot see chirality: the diagram is defined up to mirror
  /// image, and the variant with the smaller Gauss code is returned.
  static constexpr bool up_to_mirror = true;
  std::vector<std::string> diagnostics;
};

/// Inverse of encode(): one crossing per graph face, strand order from the
/// raw labels, pass types propagated from the alternation attributes.
/// Crossings are numbered by their sorted labels; crossing 0's lower
/// incoming label starts as under.
///
/// A graph failing validate_graph() yields a report without a diagram.
/// Throws ReconstructionError when a validated graph is still not in the
/// encoder's image (wrong face count, inconsistent strand, or alternation
/// attributes that contradict each other around the strand).
ReconstructionReport reconstruct(const KnotGraph& g);

}  // namespace knotgraph
