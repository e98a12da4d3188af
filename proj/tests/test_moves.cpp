#include <random>

#include "doctest.h"
#include "knotlab/corpus.hpp"
#include "knotlab/invariants.hpp"
#include "knotlab/moves.hpp"

using namespace knotlab;

namespace {
const Diagram& knot(const char* name) { return corpus_entry(name).diagram; }

std::vector<Chord> of_form(const std::vector<Chord>& cs, ChordForm f) {
  std::vector<Chord> out;
  for (const auto& c : cs)
    if (c.form == f) out.push_back(c);
  return out;
}
}  // namespace

TEST_CASE("empty fragment changes nothing") {
  Surgery s;
  s.placements.push_back({Fragment{2, {}}, {Site{0, 0, Side::Right}, Site{0, 5, Side::Right}}});
  const SurgeryResult r = perform_surgery(Diagram{}, s);
  CHECK(r.diagram.is_unknot_diagram());
}

TEST_CASE("fragment followed by its inverse cancels") {
  for (int k : {2, 3, 4}) {
    const Fragment f = builtin_fragment(k).with_inverse();
    CHECK(simplify(closure_of(f).diagram).is_unknot_diagram());
  }
}

TEST_CASE("built-in templates") {
  const auto& ts = builtin_templates();
  CHECK(ts.size() == 3);
  for (const auto& [k, t] : ts) {
    CAPTURE(k);
    CHECK(t.k == k);
    CHECK(t.fragment.fingers == k);
    CHECK(validate_template(t));
    CHECK(t.certificates.size() == static_cast<std::size_t>(k));
    CHECK(t.tangle_before().pairing == t.tangle_after().pairing);
    CHECK(t.tangle_before().closure.is_unknot_diagram());
    for (int s = 0; s < k; ++s) CHECK(simplify(delete_strand(t.fragment, s)).is_unknot_diagram());
  }
  CHECK_THROWS(builtin_template(5));
}

TEST_CASE("tampered certificates fail") {
  const MoveTemplate& t = builtin_template(3);
  BrunnianCertificate c = t.certificates.at(0);
  REQUIRE(check_certificate(t, c));
  REQUIRE_FALSE(c.reduction.steps.empty());
  c.reduction.steps.pop_back();
  CHECK_FALSE(check_certificate(t, c));
  BrunnianCertificate wrong = t.certificates.at(0);
  wrong.strand = 1;
  CHECK_FALSE(check_certificate(t, wrong));
}

TEST_CASE("template closures and v2") {
  // A delta move changes v2 by one; a clasp-pass move preserves it.
  CHECK(std::llabs(v2(builtin_template(3).tangle_after().closure)) == 1);
  CHECK(v2(builtin_template(4).tangle_after().closure) == 0);
  for (int k : {3, 4}) {
    const Diagram a = closure_of(builtin_fragment(k)).diagram;
    const Diagram m = closure_of(builtin_fragment(k).mirrored()).diagram;
    CHECK(v2(m) == v2(a));
    CHECK(v3(m) == -v3(a));
  }
}

TEST_CASE("site enumeration") {
  const Diagram& t = knot("3_1");
  const auto k2 = enumerate_sites(t, 2);
  CHECK(of_form(k2, ChordForm::Switch).size() == 3);
  const auto k3 = enumerate_sites(t, 3);
  CHECK(of_form(k3, ChordForm::Triangle).size() == 2);
  CHECK(of_form(k3, ChordForm::Switch).empty());
  CHECK(enumerate_sites(t, 2) == k2);
  const auto few = enumerate_sites(t, 3, 10);
  CHECK(few.size() == 10);
  CHECK(std::equal(few.begin(), few.end(), k3.begin()));
  for (const auto& c : of_form(k3, ChordForm::Fingers)) {
    CHECK(c.sites.size() == 3);
    CHECK(c.order == 3);
  }
  CHECK_FALSE(enumerate_sites(Diagram{}, 4, 50).empty());
  CHECK(offsets_per_edge(Diagram{}) == kOffsetsOnCircle);
  CHECK(offsets_per_edge(t) == kOffsetsPerEdge);
}

TEST_CASE("crossing change unknots the trefoil") {
  for (const auto& c : of_form(enumerate_sites(knot("3_1"), 2), ChordForm::Switch))
    CHECK(jones(apply_chord(knot("3_1"), c)) == LaurentPolynomial::constant(1));
}

TEST_CASE("every chord of order k applies and keeps planarity") {
  for (const char* name : {"0_1", "3_1", "4_1"}) {
    for (int k : {2, 3, 4}) {
      const auto cs = enumerate_sites(knot(name), k, 150);
      for (const auto& c : cs) {
        const Diagram d = apply_chord(knot(name), c);
        CHECK(d.is_planar());
        if (k == 4) CHECK(v2(d) == v2(knot(name)));
      }
    }
  }
}

TEST_CASE("delta chords change v2 by one") {
  const Diagram& f = knot("4_1");
  for (const auto& c : enumerate_sites(f, 3, 100)) CHECK(std::llabs(v2(apply_chord(f, c)) - v2(f)) == 1);
}

TEST_CASE("revert undoes a chord") {
  const Diagram& d = knot("5_2");
  for (int k : {2, 3, 4}) {
    const auto cs = enumerate_sites(d, k, 40);
    for (const auto& c : cs) CHECK(canonical_key(revert_chord(apply_chord_with_origin(d, c), c)) == canonical_key(d));
  }
}

TEST_CASE("band sums") {
  const Diagram& d = knot("4_1");
  std::mt19937_64 rng(3);
  CHECK(band_sum(d, {}) == d);
  int pairs = 0;
  for (int i = 0; i < 200 && pairs < 20; ++i) {
    const auto a = sample_chord(d, 3, rng);
    const auto b = sample_chord(d, 2, rng);
    if (!a || !b || !site_disjoint(d, *a, *b)) continue;
    std::string both;
    try {
      both = canonical_key(band_sum(d, {*a, *b}));
    } catch (const InvalidSite&) {
      continue;  // interleaved placements in one face
    }
    ++pairs;
    CHECK(band_sum(d, {*a}) == apply_chord(d, *a));
    CHECK(canonical_key(band_sum(d, {*b, *a})) == both);
    const SurgeryResult ra = apply_chord_with_origin(d, *a);
    CHECK(canonical_key(apply_chord(ra.diagram, translate_chord(*b, ra))) == both);
  }
  CHECK(pairs == 20);
}

TEST_CASE("overlapping chords are rejected") {
  const Diagram& d = knot("3_1");
  const auto cs = enumerate_sites(d, 2);
  CHECK_FALSE(site_disjoint(d, cs[0], cs[0]));
  CHECK_THROWS_AS(band_sum(d, {cs[0], cs[0]}), InvalidSite);
}

TEST_CASE("singular families") {
  std::mt19937_64 rng(21);
  for (const auto& orders : std::vector<std::vector<int>>{{}, {2}, {3, 2}, {2, 2, 2}, {4, 2}}) {
    auto fam = random_family(knot("3_1"), orders, rng);
    REQUIRE(fam);
    CHECK(fam->orders() == orders);
    const auto members = family_with_origin(*fam);
    CHECK(members.size() == (std::size_t{1} << orders.size()));
    CHECK(members.front().diagram == fam->base);
    CHECK(canonical_key(members.back().diagram) == canonical_key(band_sum(fam->base, fam->chords)));
    CHECK(check_family_conditions(*fam, members));
    if (orders.size() >= 2) {
      auto swapped = members;
      std::swap(swapped[1], swapped[2]);
      CHECK_FALSE(check_family_conditions(*fam, swapped));
    }
  }
}

TEST_CASE("families on the unknot") {
  std::mt19937_64 rng(22);
  auto fam = random_family(Diagram{}, {2, 2, 2}, rng);
  REQUIRE(fam);
  CHECK(check_family_conditions(*fam, family_with_origin(*fam)));
}

TEST_CASE("scripts replay reductions") {
  std::mt19937_64 rng(4);
  Diagram d = knot("3_1");
  for (int i = 0; i < 12; ++i) d = reidemeister(d, *random_move(d, rng, 8));
  const SimplifyResult s = simplify_with_trace(d);
  CHECK(run_script(d, reduction_script(s.trace)) == s.diagram);
}

TEST_CASE("lower-order realization") {
  const MoveTemplate& delta = builtin_template(3);
  const auto same = realize_by_lower(delta, 3);
  REQUIRE(same);
  CHECK(check_lower_certificate(*same));
  const auto by_switches = realize_by_lower(delta, 2);
  REQUIRE(by_switches);
  CHECK(by_switches->order == 2);
  CHECK(check_lower_certificate(*by_switches));
  for (const auto& step : by_switches->script.steps)
    if (step.chord) CHECK(step.chord->order == 2);
  LowerCertificate bad = *by_switches;
  bad.target_key = canonical_key(knot("3_1"));
  CHECK_FALSE(check_lower_certificate(bad));
  bad = *by_switches;
  bad.order = 1;
  CHECK_FALSE(check_lower_certificate(bad));
}
