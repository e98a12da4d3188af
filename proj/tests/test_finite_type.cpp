#include "doctest.h"
#include "knotlab/finite_type.hpp"
#include "knotlab/invariants.hpp"

using namespace knotlab;

TEST_CASE("invariant names and orders") {
  for (Invariant i : {Invariant::V2, Invariant::V3}) CHECK(invariant_from_string(to_string(i)) == i);
  CHECK(invariant_order(Invariant::V2) == 2);
  CHECK(invariant_order(Invariant::V3) == 3);
  CHECK_THROWS(invariant_from_string("v9"));
  CHECK(evaluate(Invariant::V3, corpus_entry("3_1").diagram) == v3(corpus_entry("3_1").diagram));
}

TEST_CASE("seed derivation is stable and spreads") {
  CHECK(derive_seed(7, 3) == derive_seed(7, 3));
  CHECK(derive_seed(7, 3) != derive_seed(7, 4));
  CHECK(derive_seed(7, 3) != derive_seed(8, 3));
}

TEST_CASE("alternating sum signs") {
  const Diagram& t = corpus_entry("3_1").diagram;
  const Diagram& f = corpus_entry("4_1").diagram;
  CHECK(alternating_sum(std::vector<Diagram>{t}, Invariant::V2) == 1);
  CHECK(alternating_sum(std::vector<Diagram>{Diagram{}, t}, Invariant::V2) == -1);
  // Index bits select chords: members 0, 1, 2, 3 have |P| = 0, 1, 1, 2.
  CHECK(alternating_sum(std::vector<Diagram>{t, f, f, t}, Invariant::V2) == 1 + 1 + 1 + 1);
}

TEST_CASE("type bounds vanish") {
  const auto& corpus = builtin_corpus();
  const TypeReport a = verify_type(Invariant::V2, {2, 2, 2}, 30, 1, corpus);
  CHECK(a.expect_zero);
  CHECK(a.constructed() == 30);
  CHECK(a.nonzero() == 0);
  CHECK(a.passed());
  const TypeReport b = verify_type(Invariant::V2, {4}, 20, 2, corpus);
  CHECK(b.expect_zero);
  CHECK(b.nonzero() == 0);
  const TypeReport c = verify_type(Invariant::V3, {3, 3}, 20, 3, corpus);
  CHECK(c.expect_zero);
  CHECK(c.nonzero() == 0);
}

TEST_CASE("below the bound the sums are not forced to vanish") {
  const auto& corpus = builtin_corpus();
  const TypeReport a = verify_type(Invariant::V2, {2, 2}, 60, 4, corpus);
  CHECK_FALSE(a.expect_zero);
  CHECK(a.nonzero() > 0);
  CHECK(a.passed());
  const TypeReport b = verify_type(Invariant::V3, {2, 2, 2}, 60, 5, corpus);
  CHECK_FALSE(b.expect_zero);
  CHECK(b.nonzero() > 0);
  const TypeReport c = verify_type(Invariant::V2, {3}, 30, 6, corpus);
  CHECK_FALSE(c.expect_zero);
  CHECK(c.nonzero() > 0);
}

TEST_CASE("reports are reproducible from the seed") {
  const auto& corpus = builtin_corpus();
  const TypeReport a = verify_type(Invariant::V3, {2, 2, 2}, 15, 9, corpus);
  const TypeReport b = verify_type(Invariant::V3, {2, 2, 2}, 15, 9, corpus);
  REQUIRE(a.trials.size() == b.trials.size());
  for (std::size_t i = 0; i < a.trials.size(); ++i) {
    CHECK(a.trials[i].sum == b.trials[i].sum);
    CHECK(a.trials[i].chords == b.trials[i].chords);
    CHECK(a.trials[i].base == b.trials[i].base);
  }
}

TEST_CASE("clasp-pass steps keep v2, delta steps move it") {
  const NecessityReport a = necessity_walk(corpus_entry("5_2"), 3, 15, 1);
  CHECK(a.steps.size() == 15);
  CHECK(a.constant);
  for (const auto& s : a.steps) CHECK(s.v2_after == s.v2_before);
  const NecessityReport b = necessity_walk(corpus_entry("3_1"), 2, 5, 1);
  REQUIRE(b.witness);
  const auto& w = b.steps[*b.witness];
  CHECK(std::llabs(w.v2_after - w.v2_before) == 1);
  CHECK_THROWS(necessity_walk(corpus_entry("3_1"), 4, 1, 1));
}

TEST_CASE("group structure checks") {
  const GroupReport r = group_checks(corpus_up_to(6), 20, 3);
  CHECK(r.passed());
  CHECK(r.identity_holds);
  CHECK(r.associativity_failures == 0);
  CHECK(r.pairs.size() == 20);
}

TEST_CASE("sharpness witness") {
  const auto w = sharpness_witness(builtin_corpus(), 16);
  REQUIRE(w);
  CHECK(w->family.orders() == std::vector<int>{2, 2});
  CHECK(w->sum != 0);
  CHECK(alternating_sum(w->family, Invariant::V2) == w->sum);
}
