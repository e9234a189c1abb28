#include "knotgraph/invariants.hpp"

#include <array>
#include <numeric>
#include <queue>
#include <string>

#include "knotgraph/error.hpp"

namespace knotgraph {

CheckerboardColoring checkerboard(const Diagram& d) {
  const std::size_t faces = d.faces().size();
  std::vector<std::vector<int>> neighbours(faces);
  for (int label = 0; label < d.edge_count(); ++label) {
    neighbours[d.left_face(label)].push_back(d.right_face(label));
    neighbours[d.right_face(label)].push_back(d.left_face(label));
  }
  std::vector<int> color(faces, -1);
  std::queue<int> pending;
  color[d.left_face(0)] = 0;
  pending.push(d.left_face(0));
  while (!pending.empty()) {
    const int f = pending.front();
    pending.pop();
    for (int g : neighbours[f]) {
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        pending.push(g);
      } else if (color[g] == color[f]) {
        throw KnotError("diagram faces admit no checkerboard coloring");
      }
    }
  }
  CheckerboardColoring out;
  out.colors.reserve(faces);
  for (int c : color) out.colors.push_back(c == 0 ? Shade::White : Shade::Black);
  return out;
}

mpz_class bareiss_abs_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class previous = 1;
  mpz_class t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m[i][j] * m[k][k];
        t -= m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = m[k][k];
  }
  return abs(m[n - 1][n - 1]);
}

mpz_class goeritz_determinant(const Diagram& d, Shade shade) {
  const CheckerboardColoring coloring = checkerboard(d);
  std::vector<int> index(coloring.colors.size(), -1);
  int size = 0;
  for (std::size_t f = 0; f < index.size(); ++f) {
    if (coloring.colors[f] == shade) index[f] = size++;
  }
  std::vector<std::vector<mpz_class>> g(size, std::vector<mpz_class>(size, 0));
  for (int c = 0; c < d.crossing_count(); ++c) {
    // Corner k lies between darts k and k+1 (counterclockwise); it is the
    // face of dart k. Turning the over strand (positions 1 and 3)
    // counterclockwise sweeps corners 1 and 3.
    const bool sweeps_shade = coloring.colors[d.face_of(make_dart(c, 1))] == shade;
    const int eta = sweeps_shade ? 1 : -1;
    const int first = sweeps_shade ? 1 : 0;
    const int i = index[d.face_of(make_dart(c, first))];
    const int j = index[d.face_of(make_dart(c, first + 2))];
    if (i == j) continue;
    g[i][j] -= eta;
    g[j][i] -= eta;
    g[i][i] += eta;
    g[j][j] += eta;
  }
  if (size <= 1) return 1;
  g.pop_back();
  for (auto& row : g) row.pop_back();
  return bareiss_abs_determinant(std::move(g));
}

mpz_class kauffman_determinant(const Diagram& d) {
  const int n = d.crossing_count();
  if (n > kBracketMaxCrossings) {
    throw KnotError("bracket state sum limited to " + std::to_string(kBracketMaxCrossings) + " crossings, got " +
                    std::to_string(n));
  }
  const int edges = d.edge_count();
  // counts[k]: one-loop states with (#A - #B) = k mod 8. Every other state
  // carries a factor of the loop value -A^2 - A^-2, which vanishes here.
  std::array<long, 8> counts{};
  std::vector<int> parent(edges);
  const auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t state = 0; state < (1u << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int loops = edges;
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const auto& l = d.crossing(c).labels;
      // A-smoothing joins the corners swept by the over strand (1 and 3),
      // so the arcs pair darts (0,1) and (2,3); B pairs (1,2) and (3,0).
      const bool a_smoothing = (state >> c) & 1u;
      a_count += a_smoothing;
      const std::array<int, 4> pairs = a_smoothing ? std::array<int, 4>{l[0], l[1], l[2], l[3]}
                                                   : std::array<int, 4>{l[1], l[2], l[3], l[0]};
      for (int k = 0; k < 4; k += 2) {
        const int x = root(pairs[k]), y = root(pairs[k + 1]);
        if (x != y) {
          parent[x] = y;
          --loops;
        }
      }
    }
    if (loops == 1) ++counts[((2 * a_count - n) % 8 + 8) % 8];
  }
  std::array<long, 4> x{};
  for (int k = 0; k < 4; ++k) x[k] = counts[k] - counts[k + 4];
  // sum_k x_k zeta^k with zeta = exp(i*pi/4); only one parity class occurs.
  const mpz_class re = static_cast<long>(n % 2 == 0 ? x[0] : x[1]);
  const mpz_class im = static_cast<long>(n % 2 == 0 ? x[2] : x[3]);
  const mpz_class norm = re * re + im * im;
  mpz_class det;
  mpz_sqrt(det.get_mpz_t(), norm.get_mpz_t());
  if (det * det != norm) throw KnotError("internal: bracket modulus is not an integer");
  return det;
}

}  // namespace knotgraph
