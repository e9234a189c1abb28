#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "knotgraph/decoder.hpp"
#include "knotgraph/encoder.hpp"
#include "knotgraph/error.hpp"
#include "support.hpp"

using namespace knotgraph;

namespace {

// Distance oracle: strand visits are numbered by position along the knot;
// an edge joins two crossings, each visited once more elsewhere. The raw
// distance is the circular gap between those two other visits.
int walking_distance(const Diagram& d, int label) {
  const auto visits = testing::visit_crossings(d);
  const int n = d.edge_count();
  const int tail_visit = label;  // between label-1 and label
  const int head_visit = (label + 1) % n;
  const auto other = [&](int v) {
    for (int w = 0; w < n; ++w) {
      if (w != v && visits[w] == visits[v]) return w;
    }
    return -1;
  };
  const int a = other(tail_visit), b = other(head_visit);
  const int gap = std::abs(a - b);
  return std::min(gap, n - gap);
}

// Alternation oracle from the Gauss sequence: visit v's pass type.
int gauss_alternation(const Diagram& d, int label) {
  const auto code = gauss_code(d);  // token k is the visit at the head of label k
  const int n = d.edge_count();
  return code[label].pass != code[(label + n - 1) % n].pass ? 1 : -1;
}

std::multiset<std::pair<int, int>> attribute_multiset(const KnotGraph& g) {
  std::multiset<std::pair<int, int>> s;
  for (const GraphEdge& e : g.edges) s.insert({e.alternation, e.raw_distance});
  return s;
}

}  // namespace

TEST_SUITE("encoder") {
  TEST_CASE("trefoil graph") {
    const Diagram d = parse_pd(testing::kTrefoil);
    const KnotGraph g = encode(d);
    CHECK(g.node_count == 5);
    CHECK(g.edges.size() == 6);
    CHECK(g.source_crossings == 3);
    for (const GraphEdge& e : g.edges) {
      CHECK(e.alternation == 1);
      CHECK(e.raw_distance == 1);
      CHECK(walking_distance(d, e.raw_label) == 1);
      CHECK(e.activated_distance == doctest::Approx(1.0 - std::exp2(-1.0 / 15.0)));
    }
    // bigon faces sit between the two triangles
    std::vector<int> degree(5, 0);
    for (const auto& around : g.rotation) CHECK(!around.empty());
    for (int v = 0; v < 5; ++v) degree[v] = static_cast<int>(g.rotation[v].size());
    std::sort(degree.begin(), degree.end());
    CHECK(degree == std::vector<int>{2, 2, 2, 3, 3});
    CHECK(g.parallel_edges == 0);
  }

  TEST_CASE("figure-eight and kink graphs") {
    const KnotGraph g = encode(parse_pd(testing::kFigureEight));
    CHECK(g.node_count == 6);
    CHECK(g.edges.size() == 8);
    const auto faces = graph_faces(g);
    CHECK(faces.size() == 4);
    for (const auto& f : faces) CHECK(f.size() == 4);

    // each kink edge runs from one visit of the crossing to the other
    const Diagram kink = parse_pd(testing::kKink);
    for (int label = 0; label < 2; ++label) CHECK(alternation_attr(kink, label) == 1);
  }

  TEST_CASE("R2 finger edges do not alternate") {
    const Diagram trefoil = parse_pd(testing::kTrefoil);
    for (const MoveSite& s : find_sites(trefoil, MoveKind::R2Add)) {
      const Diagram d = apply(trefoil, s);
      const auto bigons = find_sites(d, MoveKind::R2Remove);
      REQUIRE(bigons.size() >= 1);
      for (const MoveSite& b : bigons) {
        for (Dart t : d.faces()[b.face].darts) CHECK(alternation_attr(d, d.label_at(t)) == -1);
      }
    }
  }

  TEST_CASE("attributes match independent oracles") {
    for (const auto& sc : testing::shuffled_cases(30, 11, 5, 30)) {
      const Diagram& d = sc.shuffled;
      for (int label = 0; label < d.edge_count(); ++label) {
        CHECK(distance_attr(d, label).raw == walking_distance(d, label));
        CHECK(alternation_attr(d, label) == gauss_alternation(d, label));
        const int raw = distance_attr(d, label).raw;
        CHECK(raw >= 0);
        CHECK(raw <= d.crossing_count());
      }
    }
    for (const auto& r : testing::fixture()) {
      const bool alternating = r.features[0] > 0;
      int plus = 0;
      for (int label = 0; label < r.diagram.edge_count(); ++label) plus += alternation_attr(r.diagram, label) == 1;
      // KnotInfo's diagrams of alternating knots are alternating
      if (alternating) CHECK(plus == r.diagram.edge_count());
    }
  }

  TEST_CASE("activation") {
    CHECK(activate_distance(15, 15.0) == 0.5);
    CHECK(activate_distance(30, 15.0) == 0.75);
    CHECK(activate_distance(0, 15.0) == 0.0);
    CHECK(activate_distance(10, 10.0) == 0.5);
    CHECK(activate_distance(1000, 15.0) < 1.0);
    CHECK_THROWS_AS(encode(parse_pd(testing::kTrefoil), EncodeOptions{0.0, false}), KnotError);
  }

  TEST_CASE("structure over shuffled diagrams") {
    for (const auto& sc : testing::shuffled_cases(40, 12, 10, 40)) {
      const Diagram& d = sc.shuffled;
      const KnotGraph g = encode(d);
      const int n = d.crossing_count();
      CHECK(g.node_count == n + 2);
      CHECK(static_cast<int>(g.edges.size()) == 2 * n);
      const auto faces = graph_faces(g);
      CHECK(static_cast<int>(faces.size()) == n);
      for (const auto& f : faces) CHECK(f.size() == 4);
      CHECK(validate_graph(g).ok());
      for (const GraphEdge& e : g.edges) {
        CHECK(e.u != e.v);
        CHECK(e.activated_distance >= 0.0);
        CHECK(e.activated_distance < 1.0);
      }
    }
  }

  TEST_CASE("enumeration independence") {
    for (const auto& sc : testing::shuffled_cases(6, 13, 5, 20)) {
      const auto reference = attribute_multiset(encode(sc.shuffled));
      for (int start = 0; start < sc.shuffled.edge_count(); ++start) {
        CHECK(attribute_multiset(encode(enumerate_edges(sc.shuffled, start))) == reference);
      }
    }
  }

  TEST_CASE("literal distance formula") {
    const Diagram d = parse_pd(testing::kTrefoil);
    EncodeOptions options;
    options.paper_literal_distance = true;
    const KnotGraph g = encode(d, options);
    for (const GraphEdge& e : g.edges) {
      CHECK(e.raw_distance == literal_distance(d, e.raw_label));
      CHECK(e.raw_distance >= 0);
      CHECK(e.raw_distance < 3);
    }
    CHECK_THROWS_AS(distance_attr(d, 6), KnotError);
    CHECK_THROWS_AS(alternation_attr(d, -1), KnotError);
  }

  TEST_CASE("rotation system errors") {
    KnotGraph g = encode(parse_pd(testing::kFigureEight));
    KnotGraph missing = g;
    missing.rotation[0].pop_back();
    CHECK_THROWS_AS(graph_faces(missing), KnotError);
    KnotGraph wrong = g;
    std::swap(wrong.rotation[0], wrong.rotation[1]);
    CHECK_THROWS_AS(graph_faces(wrong), KnotError);
  }
}
