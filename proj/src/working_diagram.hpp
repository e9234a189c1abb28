#pragma once

#include <array>
#include <vector>

#include "knotgraph/diagram.hpp"

namespace knotgraph::detail {

/// Mutable PD code used while rewriting. Edge ids are arbitrary integers;
/// `order` lists them along the strand. `finish()` relabels the ids by
/// their position in `order` and validates the result.
class WorkingDiagram {
 public:
  explicit WorkingDiagram(const Diagram& d);

  /// Splits edge `id` into `pieces` consecutive edges. The first piece keeps
  /// `id` (and the tail); the last piece takes over the head. Returns all
  /// piece ids in strand order.
  std::vector<int> split(int id, int pieces);

  /// Deletes the listed crossings and joins the strand straight through
  /// each deleted visit. Only valid for R1/R2 removals.
  void remove_crossings(const std::vector<int>& doomed);

  int add_crossing(const Crossing& x);
  Crossing& crossing(int index) { return crossings_[index]; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }

  Diagram finish() const;

 private:
  /// Position of the crossing dart where edge `id` enters.
  Dart head_dart(int id) const;

  std::vector<Crossing> crossings_;
  std::vector<int> order_;
  int next_id_ = 0;
};

/// Builds a crossing from darts listed counterclockwise starting east
/// (E, N, W, S). `incoming[k]` marks darts where the strand enters; the
/// N-S strand is over when `north_south_over` is set.
Crossing compass_crossing(const std::array<int, 4>& ids, const std::array<bool, 4>& incoming, bool north_south_over);

}  // namespace knotgraph::detail
