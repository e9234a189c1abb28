#pragma once

#include <gmpxx.h>

#include <vector>

#include "knotgraph/diagram.hpp"

namespace knotgraph {

enum class Shade : std::uint8_t { White, Black };

/// Two-coloring of the faces of a diagram. The face on the left of edge 0
/// is white; faces on opposite sides of any edge differ.
struct CheckerboardColoring {
  std::vector<Shade> colors;  // indexed by face id
};

CheckerboardColoring checkerboard(const Diagram& d);

/// |det| of the reduced Goeritz matrix over the faces of `shade`, computed
/// with fraction-free (Bareiss) elimination. Both shades give the knot
/// determinant; the white-face matrix is the default.
mpz_class goeritz_determinant(const Diagram& d, Shade shade = Shade::White);

/// Largest diagram accepted by kauffman_determinant.
inline constexpr int kBracketMaxCrossings = 16;

/// |<K>| at A = exp(i*pi/4), i.e. |V(-1)|, by brute force over all 2^N
/// smoothings. Throws KnotError for N > kBracketMaxCrossings.
mpz_class kauffman_determinant(const Diagram& d);

/// |det| of a square integer matrix by Bareiss elimination.
mpz_class bareiss_abs_determinant(std::vector<std::vector<mpz_class>> m);

}  // namespace knotgraph
