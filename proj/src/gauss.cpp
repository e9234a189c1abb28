#include <algorithm>
#include <string>
#include <vector>

#include "knotgraph/diagram.hpp"

namespace knotgraph {

std::vector<GaussToken> gauss_code(const Diagram& d) {
  std::vector<GaussToken> code;
  code.reserve(d.edge_count());
  for (int label = 0; label < d.edge_count(); ++label) {
    const Dart h = d.head(label);
    const int c = dart_crossing(h);
    code.push_back({c, d.pass_at(h), d.crossing(c).sign()});
  }
  return code;
}

std::string render_gauss(std::span<const GaussToken> code) {
  std::string out;
  for (const GaussToken& t : code) {
    if (!out.empty()) out += ' ';
    out += t.pass == Pass::Over ? 'O' : 'U';
    out += std::to_string(t.crossing + 1);
    out += t.sign > 0 ? '+' : '-';
  }
  return out;
}

namespace {

// Rotation starting at `start` with crossings renamed by first appearance.
std::vector<GaussToken> renamed_rotation(const std::vector<GaussToken>& code, std::size_t start) {
  const std::size_t len = code.size();
  std::vector<int> rename(len, -1);
  int next = 0;
  std::vector<GaussToken> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    GaussToken t = code[(start + k) % len];
    if (rename[t.crossing] == -1) rename[t.crossing] = next++;
    t.crossing = rename[t.crossing];
    out[k] = t;
  }
  return out;
}

}  // namespace

std::vector<GaussToken> canonical_gauss(std::span<const GaussToken> code, GaussSymmetry symmetry) {
  std::vector<std::vector<GaussToken>> variants{{code.begin(), code.end()}};
  if (symmetry.allow_reversal) {
    variants.emplace_back(code.rbegin(), code.rend());
  }
  if (symmetry.allow_mirror) {
    const std::size_t count = variants.size();
    for (std::size_t v = 0; v < count; ++v) {
      auto m = variants[v];
      for (GaussToken& t : m) {
        t.pass = t.pass == Pass::Over ? Pass::Under : Pass::Over;
        t.sign = -t.sign;
      }
      variants.push_back(std::move(m));
    }
  }
  std::vector<GaussToken> best;
  for (const auto& v : variants) {
    for (std::size_t start = 0; start < v.size(); ++start) {
      auto candidate = renamed_rotation(v, start);
      if (best.empty() || candidate < best) best = std::move(candidate);
    }
  }
  return best;
}

bool same_gauss_class(const Diagram& a, const Diagram& b, GaussSymmetry symmetry) {
  if (a.crossing_count() != b.crossing_count()) return false;
  return canonical_gauss(gauss_code(a), symmetry) == canonical_gauss(gauss_code(b), symmetry);
}

}  // namespace knotgraph
