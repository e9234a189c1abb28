#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotgraph {

enum class Pass : std::uint8_t { Under, Over };

/// A dart is one of the four edge-ends at a crossing, encoded as
/// 4 * crossing + position. Positions are counterclockwise.
using Dart = int;

constexpr int dart_crossing(Dart d) { return d / 4; }
constexpr int dart_position(Dart d) { return d % 4; }
constexpr Dart make_dart(int crossing, int position) { return 4 * crossing + position; }
/// Next dart counterclockwise / clockwise around the same crossing.
constexpr Dart ccw_next(Dart d) { return make_dart(d / 4, (d % 4 + 1) % 4); }
constexpr Dart cw_next(Dart d) { return make_dart(d / 4, (d % 4 + 3) % 4); }
constexpr Dart opposite(Dart d) { return make_dart(d / 4, (d % 4 + 2) % 4); }

/// One crossing in planar-diagram form: four edge labels counterclockwise,
/// starting at the incoming under-strand. The over strand enters at
/// position `over_in` (1 or 3) and leaves at the opposite position.
struct Crossing {
  std::array<int, 4> labels{};
  int over_in = 1;

  /// +1 when the over strand enters at position 3, -1 when at position 1.
  int sign() const { return over_in == 3 ? 1 : -1; }
  bool is_incoming(int position) const { return position == 0 || position == over_in; }
  Pass pass_at(int position) const { return position % 2 == 0 ? Pass::Under : Pass::Over; }

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Face {
  int id = 0;
  /// Darts in traversal order; each dart's edge leaves the face boundary's
  /// crossing with the face on its left.
  std::vector<Dart> darts;

  int size() const { return static_cast<int>(darts.size()); }
};

/// An oriented knot diagram with N >= 1 crossings and edges labeled 0..2N-1
/// in strand order. Immutable once constructed; every constructor path
/// validates the single-strand and labeling invariants.
class Diagram {
 public:
  /// Validates and adopts a crossing list whose labels are already 0-based.
  /// Throws ParseError when the crossings do not describe a knot diagram.
  explicit Diagram(std::vector<Crossing> crossings);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  std::span<const Crossing> crossings() const { return crossings_; }
  const Crossing& crossing(int index) const { return crossings_[index]; }

  /// Dart where edge `label` leaves its tail crossing.
  Dart tail(int label) const { return tail_[label]; }
  /// Dart where edge `label` enters its head crossing.
  Dart head(int label) const { return head_[label]; }
  int label_at(Dart d) const { return crossings_[dart_crossing(d)].labels[dart_position(d)]; }
  /// The other end of the edge at dart `d`.
  Dart twin(Dart d) const;
  bool is_tail(Dart d) const { return tail_[label_at(d)] == d; }
  Pass pass_at(Dart d) const { return crossings_[dart_crossing(d)].pass_at(dart_position(d)); }

  std::span<const Face> faces() const { return faces_; }
  int face_of(Dart d) const { return face_of_dart_[d]; }
  /// Face on the left / right of edge `label` when walking along its orientation.
  int left_face(int label) const { return face_of_dart_[tail_[label]]; }
  int right_face(int label) const { return face_of_dart_[head_[label]]; }

  /// FNV-1a hash of the rendered PD code.
  std::uint64_t fingerprint() const { return fingerprint_; }

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.crossings_ == b.crossings_; }

 private:
  void compute_faces();

  std::vector<Crossing> crossings_;
  std::vector<Dart> tail_;
  std::vector<Dart> head_;
  std::vector<Face> faces_;
  std::vector<int> face_of_dart_;
  std::uint64_t fingerprint_ = 0;
};

/// Parses `X(a,b,c,d),...` (or KnotInfo's `[[a,b,c,d],...]`). Labels may be
/// 0- or 1-based; 0-based is assumed whenever a 0 label is present.
Diagram parse_pd(std::string_view text);
/// 1-based `X(a,b,c,d)` tuples joined by commas, no whitespace.
std::string render_pd(const Diagram& d);

/// Relabels so that `start` becomes label 0. Crossing order is unchanged.
Diagram enumerate_edges(const Diagram& d, int start);
/// Swaps over and under at every crossing, which flips every sign.
Diagram mirror(const Diagram& d);

struct GaussToken {
  int crossing = 0;  // 0-based crossing index
  Pass pass = Pass::Under;
  int sign = 1;

  friend auto operator<=>(const GaussToken&, const GaussToken&) = default;
};

/// Signed Gauss sequence: one token per strand visit, in strand order,
/// starting with the crossing at the head of edge 0.
std::vector<GaussToken> gauss_code(const Diagram& d);
/// `O1+ U2- ...` with 1-based crossing numbers.
std::string render_gauss(std::span<const GaussToken> code);

struct GaussSymmetry {
  bool allow_mirror = false;    // swap O/U and flip every sign
  bool allow_reversal = false;  // traverse the strand backwards
};

/// Canonical representative of a Gauss code under cyclic rotation and
/// crossing renaming, plus the optional symmetries.
std::vector<GaussToken> canonical_gauss(std::span<const GaussToken> code, GaussSymmetry symmetry = {});
bool same_gauss_class(const Diagram& a, const Diagram& b, GaussSymmetry symmetry = {});

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace knotgraph
