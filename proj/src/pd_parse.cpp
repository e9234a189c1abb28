#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <string>
#include <vector>

#include "knotgraph/diagram.hpp"
#include "knotgraph/error.hpp"

namespace knotgraph {
namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long integer() {
    skip_space();
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (begin == pos_) fail("expected a non-negative integer label");
    if (pos_ - begin > 9) fail("label too large");
    return std::stol(std::string(text_.substr(begin, pos_ - begin)));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("malformed PD code at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::array<long, 4> tuple_body(Cursor& cur, char close) {
  std::array<long, 4> t{};
  for (int k = 0; k < 4; ++k) {
    if (k) cur.expect(',');
    t[k] = cur.integer();
  }
  cur.expect(close);
  return t;
}

std::vector<std::array<long, 4>> tokenize(std::string_view text) {
  Cursor cur(text);
  std::vector<std::array<long, 4>> tuples;
  if (cur.done()) return tuples;
  if (cur.accept('[')) {
    // KnotInfo style: [[a,b,c,d],[...]]
    if (cur.accept(']')) return tuples;
    do {
      cur.expect('[');
      tuples.push_back(tuple_body(cur, ']'));
    } while (cur.accept(','));
    cur.expect(']');
  } else {
    do {
      if (!cur.accept('X')) cur.fail("expected 'X('");
      const char close = cur.accept('[') ? ']' : (cur.expect('('), ')');
      tuples.push_back(tuple_body(cur, close));
    } while (cur.accept(','));
  }
  if (!cur.done()) cur.fail("trailing characters");
  return tuples;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
  const auto tuples = tokenize(text);
  if (tuples.empty()) throw ParseError("empty diagram");
  const int n = static_cast<int>(tuples.size());
  const int edges = 2 * n;

  bool zero_based = false;
  for (const auto& t : tuples) zero_based |= std::find(t.begin(), t.end(), 0L) != t.end();
  const long offset = zero_based ? 0 : 1;

  std::vector<std::array<int, 4>> labels(n);
  std::vector<std::vector<Dart>> occurrences(edges);
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      const long label = tuples[c][p] - offset;
      if (label < 0 || label >= edges) {
        throw ParseError("label set is not {" + std::to_string(offset) + ".." + std::to_string(edges - 1 + offset) +
                         "}: found " + std::to_string(tuples[c][p]));
      }
      labels[c][p] = static_cast<int>(label);
      occurrences[label].push_back(make_dart(c, p));
    }
  }
  for (int label = 0; label < edges; ++label) {
    if (occurrences[label].size() != 2) {
      throw ParseError("label set is not {" + std::to_string(offset) + ".." + std::to_string(edges - 1 + offset) +
                       "}: label " + std::to_string(label + offset) + " occurs " +
                       std::to_string(occurrences[label].size()) + " times");
    }
  }

  // Strand components: a crossing joins the labels at opposite positions.
  std::vector<int> parent(edges);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& l : labels) {
    parent[find_root(parent, l[0])] = find_root(parent, l[2]);
    parent[find_root(parent, l[1])] = find_root(parent, l[3]);
  }
  int components = 0;
  for (int label = 0; label < edges; ++label) components += find_root(parent, label) == label;
  if (components > 1) {
    throw ParseError("links unsupported: diagram has " + std::to_string(components) + " components");
  }

  // Orient the single strand from the first incoming under-dart and check
  // that every crossing agrees with the PD convention.
  std::vector<int> incoming(4 * n, -1);
  Dart in = make_dart(0, 0);
  for (int step = 0; step < edges; ++step) {
    const Dart out = opposite(in);
    if (incoming[in] == 0 || incoming[out] == 1) break;
    incoming[in] = 1;
    incoming[out] = 0;
    const auto& occ = occurrences[labels[dart_crossing(out)][dart_position(out)]];
    in = occ[0] == out ? occ[1] : occ[0];
  }
  Crossing proto;
  std::vector<Crossing> crossings;
  crossings.reserve(n);
  for (int c = 0; c < n; ++c) {
    if (incoming[make_dart(c, 0)] != 1) {
      throw ParseError("crossing " + std::to_string(c + 1) +
                       ": first entry is not the incoming under-strand for a consistent orientation");
    }
    proto.labels = labels[c];
    proto.over_in = incoming[make_dart(c, 1)] == 1 ? 1 : 3;
    crossings.push_back(proto);
  }
  return Diagram(std::move(crossings));
}

}  // namespace knotgraph
