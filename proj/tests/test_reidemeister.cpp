#include <random>

#include "doctest.h"
#include "knotlab/corpus.hpp"
#include "knotlab/invariants.hpp"
#include "knotlab/reidemeister.hpp"

using namespace knotlab;

namespace {
ReidemeisterMove r1_add(int edge, Side side, bool over) {
  ReidemeisterMove m;
  m.kind = MoveKind::R1;
  m.direction = Direction::Add;
  m.sites = {Site{edge, 0, side}};
  m.over = over;
  return m;
}
}  // namespace

TEST_CASE("R1 addition and removal") {
  for (Side side : {Side::Right, Side::Left}) {
    for (bool over : {true, false}) {
      const Diagram k = reidemeister(Diagram{}, r1_add(0, side, over));
      CHECK(k.crossing_count() == 1);
      CHECK(k.is_planar());
      const auto removals = reducing_moves(k);
      REQUIRE(removals.size() == 1);
      CHECK(removals[0].kind == MoveKind::R1);
      CHECK(reidemeister(k, removals[0]).is_unknot_diagram());
    }
  }
}

TEST_CASE("R2 addition on one face") {
  const Diagram& t = corpus_entry("3_1").diagram;
  const auto faces = t.faces();
  const Face& f = faces[t.face_of(0, Side::Right, faces)];
  REQUIRE(f.size() >= 2);
  ReidemeisterMove m;
  m.kind = MoveKind::R2;
  m.direction = Direction::Add;
  const auto side_of = [](const FaceEdge& fe) { return fe.along ? Side::Right : Side::Left; };
  m.sites = {Site{f[0].edge, 0, side_of(f[0])}, Site{f[1].edge, 0, side_of(f[1])}};
  const Diagram d = reidemeister(t, m);
  CHECK(d.crossing_count() == 5);
  CHECK(d.is_planar());
  CHECK(jones(d) == jones(t));
  CHECK(reduce(d).diagram.crossing_count() == 3);
}

TEST_CASE("invalid moves are rejected") {
  const Diagram& t = corpus_entry("3_1").diagram;
  ReidemeisterMove m;
  m.kind = MoveKind::R1;
  m.direction = Direction::Remove;
  m.crossings = {0};
  CHECK_THROWS_AS(reidemeister(t, m), InvalidSite);
  m.kind = MoveKind::R2;
  m.crossings = {0, 1};
  CHECK_THROWS_AS(reidemeister(t, m), InvalidSite);
  CHECK_THROWS_AS(reidemeister(t, r1_add(99, Side::Right, true)), InvalidSite);
}

TEST_CASE("reduced corpus diagrams admit no reducing move") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    CHECK(reducing_moves(e.diagram).empty());
  }
}

TEST_CASE("triangle classification on the trefoil") {
  // Each triangular face of the standard trefoil diagram is alternating.
  const auto ts = triangles(corpus_entry("3_1").diagram);
  CHECK(ts.size() == 2);
  for (const auto& t : ts) CHECK_FALSE(t.r3);
  CHECK(r3_moves(corpus_entry("3_1").diagram).empty());
}

TEST_CASE("random moves preserve invariants and simplify recovers") {
  std::mt19937_64 rng(5);
  for (const char* name : {"0_1", "3_1", "4_1", "5_2"}) {
    CAPTURE(name);
    const Diagram& base = corpus_entry(name).diagram;
    const auto ref = jones(base);
    Diagram d = base;
    for (int i = 0; i < 30; ++i) {
      auto mv = random_move(d, rng, base.crossing_count() + 5);
      REQUIRE(mv);
      d = reidemeister(d, *mv);
      CHECK(d.is_planar());
      CHECK(d.crossing_count() <= base.crossing_count() + 5);
      CHECK(jones(d) == ref);
      CHECK(conway(d) == conway(base));
    }
    const SimplifyResult s = simplify_with_trace(d);
    CHECK(s.diagram.crossing_count() <= d.crossing_count());
    CHECK(replay(d, s.trace) == s.diagram);
    CHECK(jones(s.diagram) == ref);
  }
}

TEST_CASE("r3 moves are involutive up to the key") {
  std::mt19937_64 rng(9);
  Diagram d = corpus_entry("5_2").diagram;
  for (int i = 0; i < 400 && r3_moves(d).empty(); ++i) d = reidemeister(d, *random_move(d, rng, 9));
  REQUIRE_FALSE(r3_moves(d).empty());
  for (const auto& m : r3_moves(d)) {
    const Diagram e = reidemeister(d, m);
    CHECK(e.crossing_count() == d.crossing_count());
    CHECK(jones(e) == jones(d));
    bool back = false;
    for (const auto& m2 : r3_moves(e)) back = back || canonical_key(reidemeister(e, m2)) == canonical_key(d);
    CHECK(back);
  }
}
