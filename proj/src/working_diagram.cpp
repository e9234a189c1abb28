#include "working_diagram.hpp"

#include <algorithm>
#include <numeric>

#include "knotgraph/error.hpp"

namespace knotgraph::detail {

WorkingDiagram::WorkingDiagram(const Diagram& d)
    : crossings_(d.crossings().begin(), d.crossings().end()), order_(d.edge_count()), next_id_(d.edge_count()) {
  std::iota(order_.begin(), order_.end(), 0);
}

Dart WorkingDiagram::head_dart(int id) const {
  for (int c = 0; c < crossing_count(); ++c) {
    const Crossing& x = crossings_[c];
    if (x.labels[0] == id) return make_dart(c, 0);
    if (x.labels[x.over_in] == id) return make_dart(c, x.over_in);
  }
  throw MoveError("internal: edge id " + std::to_string(id) + " has no head");
}

std::vector<int> WorkingDiagram::split(int id, int pieces) {
  const Dart h = head_dart(id);
  std::vector<int> ids{id};
  for (int k = 1; k < pieces; ++k) ids.push_back(next_id_++);
  crossings_[dart_crossing(h)].labels[dart_position(h)] = ids.back();
  auto at = std::find(order_.begin(), order_.end(), id);
  order_.insert(at + 1, ids.begin() + 1, ids.end());
  return ids;
}

int WorkingDiagram::add_crossing(const Crossing& x) {
  crossings_.push_back(x);
  return crossing_count() - 1;
}

void WorkingDiagram::remove_crossings(const std::vector<int>& doomed) {
  std::vector<char> gone(crossings_.size(), 0);
  for (int c : doomed) gone[c] = 1;
  std::vector<int> head_crossing(next_id_, -1);
  for (int c = 0; c < crossing_count(); ++c) {
    const Crossing& x = crossings_[c];
    head_crossing[x.labels[0]] = c;
    head_crossing[x.labels[x.over_in]] = c;
  }

  const std::size_t len = order_.size();
  // Start at an edge whose tail survives, i.e. the previous edge's head does.
  std::size_t first = len;
  for (std::size_t k = 0; k < len; ++k) {
    if (!gone[head_crossing[order_[(k + len - 1) % len]]]) {
      first = k;
      break;
    }
  }
  if (first == len) throw MoveError("removal would leave a crossingless diagram");

  std::vector<int> run_of(len);
  std::vector<int> runs;
  std::size_t k = first;
  for (std::size_t walked = 0; walked < len;) {
    const int run = order_[k];
    int last = run;
    for (;;) {
      run_of[k] = static_cast<int>(runs.size());
      ++walked;
      last = order_[k];
      k = (k + 1) % len;
      if (!gone[head_crossing[last]]) break;
    }
    Crossing& target = crossings_[head_crossing[last]];
    for (int p : {0, target.over_in}) {
      if (target.labels[p] == last) target.labels[p] = run;
    }
    runs.push_back(run);
  }
  std::rotate(runs.begin(), runs.begin() + run_of[0], runs.end());
  order_ = std::move(runs);

  std::vector<Crossing> kept;
  for (int c = 0; c < crossing_count(); ++c) {
    if (!gone[c]) kept.push_back(crossings_[c]);
  }
  crossings_ = std::move(kept);
}

Diagram WorkingDiagram::finish() const {
  std::vector<int> label_of(next_id_, -1);
  for (std::size_t k = 0; k < order_.size(); ++k) label_of[order_[k]] = static_cast<int>(k);
  std::vector<Crossing> out = crossings_;
  for (Crossing& x : out) {
    for (int& id : x.labels) id = label_of[id];
  }
  return Diagram(std::move(out));
}

Crossing compass_crossing(const std::array<int, 4>& ids, const std::array<bool, 4>& incoming, bool north_south_over) {
  const int under_a = north_south_over ? 0 : 1;
  const int under_in = incoming[under_a] ? under_a : under_a + 2;
  const int over_a = 1 - under_a;
  const int over_in = incoming[over_a] ? over_a : over_a + 2;
  Crossing x;
  for (int k = 0; k < 4; ++k) x.labels[k] = ids[(under_in + k) % 4];
  x.over_in = (over_in - under_in + 4) % 4;
  return x;
}

}  // namespace knotgraph::detail
