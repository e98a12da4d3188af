#include <algorithm>

#include "doctest.h"
#include "knotlab/codes.hpp"
#include "knotlab/corpus.hpp"
#include "knotlab/invariants.hpp"

using namespace knotlab;

namespace {
GaussCode code(std::initializer_list<std::pair<int, bool>> ps, std::vector<int> signs) {
  GaussCode g;
  for (auto [c, o] : ps) g.passages.push_back({c, o});
  g.signs = std::move(signs);
  return g;
}
}  // namespace

TEST_CASE("gauss code validation") {
  CHECK_THROWS_AS(Diagram::from_gauss(code({{0, true}}, {1})), ParseError);
  CHECK_THROWS_AS(Diagram::from_gauss(code({{0, true}, {0, true}}, {1})), ParseError);
  CHECK_THROWS_AS(Diagram::from_gauss(code({{0, true}, {1, false}}, {1})), ParseError);
  CHECK_THROWS_AS(Diagram::from_gauss(code({{0, true}, {0, false}}, {2})), ParseError);
  CHECK_NOTHROW(Diagram::from_gauss(code({{0, true}, {0, false}}, {1})));
}

TEST_CASE("unknot diagram") {
  const Diagram u;
  CHECK(u.is_unknot_diagram());
  CHECK(u.edge_count() == 1);
  CHECK(u.faces().size() == 2);
  CHECK(u.is_planar());
  CHECK(canonical_key(u) == "0:");
}

TEST_CASE("every corpus diagram has n + 2 faces") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    const int n = e.diagram.crossing_count();
    CHECK(static_cast<int>(e.diagram.faces().size()) == (n == 0 ? 2 : n + 2));
    CHECK(e.diagram.is_planar());
    int sides = 0;
    for (const Face& f : e.diagram.faces()) sides += static_cast<int>(f.size());
    CHECK(sides == 2 * e.diagram.edge_count());
  }
}

TEST_CASE("interlaced two-crossing code is not planar") {
  // O1 O2 U1 U2: each chord interlaces exactly one other chord.
  const Diagram d = Diagram::from_gauss(code({{0, true}, {1, true}, {0, false}, {1, false}}, {1, 1}));
  CHECK_FALSE(d.is_planar());
}

TEST_CASE("face lookup matches face membership") {
  const Diagram& d = corpus_entry("5_2").diagram;
  const auto faces = d.faces();
  for (int e = 0; e < d.edge_count(); ++e) {
    const int r = d.face_of(e, Side::Right, faces);
    const int l = d.face_of(e, Side::Left, faces);
    CHECK(r != l);
    CHECK(std::count(faces[r].begin(), faces[r].end(), FaceEdge{e, true}) == 1);
    CHECK(std::count(faces[l].begin(), faces[l].end(), FaceEdge{e, false}) == 1);
  }
}

TEST_CASE("writhe and crossing accessors") {
  const Diagram& t = corpus_entry("3_1").diagram;
  CHECK(std::abs(t.writhe()) == 3);
  const Diagram& f = corpus_entry("4_1").diagram;
  CHECK(f.writhe() == 0);
  for (int c = 0; c < t.crossing_count(); ++c) {
    CHECK(t.gauss_code().passages[t.over_passage(c)] == Passage{c, true});
    CHECK(t.gauss_code().passages[t.under_passage(c)] == Passage{c, false});
  }
}

TEST_CASE("canonical key ignores the basepoint") {
  for (const auto& e : builtin_corpus()) {
    for (int s = 0; s < 2 * e.diagram.crossing_count(); ++s)
      CHECK(canonical_key(rotate_basepoint(e.diagram, s)) == canonical_key(e.diagram));
  }
  CHECK(canonical_key(corpus_entry("3_1").diagram) != canonical_key(mirror(corpus_entry("3_1").diagram)));
}

TEST_CASE("mirror and switch are involutions") {
  const Diagram& d = corpus_entry("6_2").diagram;
  CHECK(mirror(mirror(d)) == d);
  for (int c = 0; c < d.crossing_count(); ++c) {
    CHECK(switch_crossing(switch_crossing(d, c), c) == d);
    CHECK(switch_crossing(d, c).sign(c) == -d.sign(c));
  }
  CHECK_THROWS_AS(switch_crossing(d, d.crossing_count()), InvalidSite);
}

TEST_CASE("connected sum") {
  const Diagram& a = corpus_entry("3_1").diagram;
  const Diagram& b = corpus_entry("4_1").diagram;
  const Diagram s = connected_sum(a, b);
  CHECK(s.crossing_count() == 7);
  CHECK(s.is_planar());
  CHECK(connected_sum(a, Diagram{}) == a);
}

TEST_CASE("gauss diagram arrows") {
  const Diagram& d = corpus_entry("5_1").diagram;
  const GaussDiagram g = d.gauss_diagram();
  CHECK(g.length == 10);
  CHECK(g.arrows.size() == 5);
  for (const Arrow& a : g.arrows) {
    CHECK(d.gauss_code().passages[a.tail].over);
    CHECK_FALSE(d.gauss_code().passages[a.head].over);
  }
}

TEST_CASE("deleting the crossings of a kink") {
  const Diagram kink = Diagram::from_gauss(code({{0, true}, {0, false}}, {1}));
  const int all[] = {0};
  CHECK(delete_crossings(kink, all).is_unknot_diagram());
}
