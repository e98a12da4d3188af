#include "doctest.h"
#include "knotlab/codes.hpp"
#include "knotlab/corpus.hpp"
#include "knotlab/invariants.hpp"

using namespace knotlab;

TEST_CASE("trefoil from PD and DT") {
  const Diagram pd = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]");
  const Diagram dt = parse_dt("4 6 2");
  CHECK(pd.crossing_count() == 3);
  CHECK(dt.crossing_count() == 3);
  CHECK(pd.is_planar());
  CHECK(canonical_key(pd) == canonical_key(dt));
  // The standard table PD code is the right-handed trefoil: V = t + t^3 - t^4.
  CHECK(jones(pd) == LaurentPolynomial::from_pairs({{2, 1}, {6, 1}, {8, -1}}));
}

TEST_CASE("mirrored PD code gives the left-handed trefoil") {
  const Diagram d = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  CHECK(jones(d) == LaurentPolynomial::from_pairs({{-8, -1}, {-6, 1}, {-2, 1}}));
}

TEST_CASE("parse_code dispatches on syntax") {
  CHECK(parse_code("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]").crossing_count() == 3);
  CHECK(parse_code("4 6 8 2").crossing_count() == 4);
  CHECK(parse_code("").is_unknot_diagram());
}

TEST_CASE("PD round trip over the corpus") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    if (e.diagram.is_unknot_diagram()) continue;
    const Diagram back = parse_pd(emit_pd(e.diagram));
    CHECK(canonical_key(back) == canonical_key(e.diagram));
  }
}

TEST_CASE("DT round trip over the corpus") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    const Diagram back = parse_dt(emit_dt(e.diagram));
    CHECK(back.crossing_count() == e.diagram.crossing_count());
    CHECK(jones(back) == jones(e.diagram));
  }
}

TEST_CASE("malformed PD codes") {
  CHECK_THROWS_AS(parse_pd("X[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[1,2,1,1]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[0,1,1,2]"), ParseError);
  CHECK_THROWS_AS(parse_pd("X[2,1,3,4] X[4,3,1,2]"), ParseError);  // two components
  CHECK_THROWS_AS(parse_pd("X[1,x,2,3]"), ParseError);
}

TEST_CASE("malformed DT codes") {
  CHECK_THROWS_AS(parse_dt("3 6 2"), ParseError);
  CHECK_THROWS_AS(parse_dt("4 4 2"), ParseError);
  CHECK_THROWS_AS(parse_dt("4 8 2"), ParseError);
  // Chords 1-4 and 5-8 do not interlace but share one interlacing chord.
  CHECK_THROWS_AS(parse_dt("4 6 8 10 2"), ParseError);
  std::string big;
  for (int i = 0; i <= kMaxDtCrossings; ++i) big += std::to_string(2 * i + 2) + " ";
  CHECK_THROWS_AS(parse_dt(big), LimitExceeded);
}
