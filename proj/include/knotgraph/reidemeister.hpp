#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "knotgraph/diagram.hpp"

namespace knotgraph {

enum class MoveKind : std::uint8_t { R1Add, R1Remove, R2Add, R2Remove, R3 };

enum class Side : std::uint8_t { Left, Right };

std::string_view to_string(MoveKind kind);

/// Where a Reidemeister move applies. Only meaningful for the diagram whose
/// fingerprint it carries.
///
///  - R1Add:    `edge`, `side` (face the new loop sits in), `sign` of the new crossing.
///  - R1Remove: `face` is a monogon.
///  - R2Add:    `face`, and two of its boundary darts on distinct edges; the edge
///              at `dart_a` is pushed across the edge at `dart_b`, passing over it
///              when `a_over` is set.
///  - R2Remove: `face` is a bigon with one strand over at both corners.
///  - R3:       `face` is a triangle with one side over at both of its ends.
struct MoveSite {
  MoveKind kind = MoveKind::R1Add;
  std::uint64_t fingerprint = 0;
  int face = -1;
  int edge = -1;
  Side side = Side::Left;
  int sign = 1;
  Dart dart_a = -1;
  Dart dart_b = -1;
  bool a_over = true;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// All sites of one kind, in a fixed deterministic order.
std::vector<MoveSite> find_sites(const Diagram& d, MoveKind kind);
/// Equal to find_sites(d, kind).size() without materializing the sites.
std::size_t site_count(const Diagram& d, MoveKind kind);
/// Equal to find_sites(d, kind)[index].
MoveSite site_at(const Diagram& d, MoveKind kind, std::size_t index);

/// Rewrites `d` at `site` and renormalizes labels along the strand.
/// Throws MoveError for a stale or inapplicable site, including removals
/// that would leave no crossings.
Diagram apply(const Diagram& d, const MoveSite& site);

struct Simplified {
  Diagram diagram;
  /// Set when the only remaining removal would delete the last crossings.
  bool is_trivial = false;
};

/// Greedily applies R1/R2 removals, always taking the site on the lowest
/// face id, until none is left.
Simplified simplify(const Diagram& d);

struct ShuffleConfig {
  int c = 1;
  double p_r1 = 0.20;
  double p_r2 = 0.80;
  std::uint64_t seed = 0;

  /// Throws KnotError unless c >= 1, both probabilities lie in [0,1] and
  /// they sum to 1.
  void validate() const;
  /// `key=value` lines: c, p_r1, p_r2, seed.
  std::string to_text() const;
  static ShuffleConfig from_text(std::string_view text);
};

/// Random growth by additive R1/R2 moves interleaved with R3 slides,
/// followed by simplify(). Deterministic in (d, cfg).
///
/// Schedule: 2c additive moves; then c rounds of 5 additive moves and
/// floor(c/20) R3 moves; then simplify. Each additive move is R1 with
/// probability p_r1 and R2 otherwise, at a uniformly chosen site.
Diagram shuffle(const Diagram& d, const ShuffleConfig& cfg);

}  // namespace knotgraph
