#include <cstdlib>
#include <map>
#include <numeric>

#include "doctest.h"
#include "knotlab/codes.hpp"
#include "knotlab/corpus.hpp"
#include "knotlab/invariants.hpp"

using namespace knotlab;
using P = LaurentPolynomial;

namespace {

// Determinant from the Fox coloring matrix, built from over-arcs of the Gauss code.
std::int64_t coloring_determinant(const Diagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return 1;
  const auto& ps = d.gauss_code().passages;
  const int m = 2 * n;
  std::vector<int> arc(m);  // arc of edge t, which ends at passage t
  int a = 0;
  for (int t = 0; t < m; ++t) {
    arc[t] = a;
    if (!ps[t].over) a = (a + 1) % n;
  }
  std::vector<std::vector<__int128>> mat(n, std::vector<__int128>(n, 0));
  for (int t = 0; t < m; ++t) {
    const int c = ps[t].crossing;
    if (ps[t].over) {
      mat[c][arc[t]] += 2;
    } else {
      mat[c][arc[t]] -= 1;
      mat[c][arc[(t + 1) % m]] -= 1;
    }
  }
  // Bareiss elimination on the minor without row 0 and column 0.
  const int k = n - 1;
  if (k == 0) return 1;
  std::vector<std::vector<__int128>> b(k, std::vector<__int128>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b[i][j] = mat[i + 1][j + 1];
  __int128 prev = 1;
  int sign = 1;
  for (int p = 0; p < k; ++p) {
    if (b[p][p] == 0) {
      int r = p + 1;
      while (r < k && b[r][p] == 0) ++r;
      if (r == k) return 0;
      std::swap(b[p], b[r]);
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i)
      for (int j = p + 1; j < k; ++j) b[i][j] = (b[i][j] * b[p][p] - b[i][p] * b[p][j]) / prev;
    prev = b[p][p];
  }
  const __int128 det = sign * b[k - 1][k - 1];
  return static_cast<std::int64_t>(det < 0 ? -det : det);
}

// |Conway(z)| at z = 2i, i.e. z^2 = -4.
std::int64_t conway_determinant(const P& c) {
  std::int64_t s = 0, pw = 1;
  for (int e = 0; e <= c.max_exponent(); e += 2, pw *= -4) s += c.coefficient(e) * pw;
  return std::llabs(s);
}

// |V(-1)|, with V stored in powers of t^(1/2).
std::int64_t jones_determinant(const P& v) {
  std::int64_t s = 0;
  for (const auto& [e, c] : v.terms()) {
    REQUIRE(e % 2 == 0);
    s += ((e / 2) % 2 == 0 ? 1 : -1) * c;
  }
  return std::llabs(s);
}

// Conway polynomials from the standard knot tables, coefficients of z^0, z^2, ...
const std::map<std::string, std::vector<int>> kConwayTable = {
    {"0_1", {1}},          {"3_1", {1, 1}},        {"4_1", {1, -1}},          {"5_1", {1, 3, 1}},
    {"5_2", {1, 2}},       {"6_1", {1, -2}},       {"6_2", {1, -1, -1}},      {"6_3", {1, 1, 1}},
    {"7_1", {1, 6, 5, 1}}, {"7_2", {1, 3}},        {"7_3", {1, 5, 2}},        {"7_4", {1, 4}},
    {"7_5", {1, 4, 2}},    {"7_6", {1, 1, -1}},    {"7_7", {1, -1, 1}},       {"8_1", {1, -3}},
    {"8_2", {1, 0, -3, -1}}, {"8_3", {1, -4}},     {"8_4", {1, -3, -2}},      {"8_5", {1, -1, -3, -1}},
    {"8_19", {1, 5, 5, 1}}, {"8_20", {1, 2, 1}},   {"8_21", {1, 0, -1}},      {"9_1", {1, 10, 15, 7, 1}},
};

P from_even(const std::vector<int>& cs) {
  P p;
  for (std::size_t i = 0; i < cs.size(); ++i) p.add_term(static_cast<int>(2 * i), cs[i]);
  return p;
}

Diagram kink(int sign) {
  GaussCode g;
  g.passages = {{0, true}, {0, false}};
  g.signs = {sign};
  return Diagram::from_gauss(g);
}

}  // namespace

TEST_CASE("bracket of the unknot and kinks") {
  CHECK(kauffman_bracket(Diagram{}) == P::constant(1));
  for (int s : {1, -1}) {
    const P b = kauffman_bracket(kink(s));
    REQUIRE(b.terms().size() == 1);
    CHECK(std::abs(b.min_exponent()) == 3);
    CHECK(b.coefficient(b.min_exponent()) == -1);
    CHECK(jones(kink(s)) == P::constant(1));
  }
  CHECK(kauffman_bracket(kink(1)) * kauffman_bracket(kink(-1)) == P::constant(1));
}

TEST_CASE("figure-eight Jones polynomial") {
  CHECK(jones(corpus_entry("4_1").diagram) == P::from_pairs({{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}}));
}

TEST_CASE("Conway polynomials match the knot tables") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    REQUIRE(kConwayTable.count(e.name));
    CHECK(conway(e.diagram) == from_even(kConwayTable.at(e.name)));
  }
}

TEST_CASE("determinants agree across three computations") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    const std::int64_t det = coloring_determinant(e.diagram);
    CHECK(det % 2 == 1);
    CHECK(conway_determinant(conway(e.diagram)) == det);
    CHECK(jones_determinant(jones(e.diagram)) == det);
  }
}

TEST_CASE("low-order values on small knots") {
  const Diagram& t = corpus_entry("3_1").diagram;
  const Diagram& f = corpus_entry("4_1").diagram;
  CHECK(v2(t) == 1);
  CHECK(v3(t) == 1);
  CHECK(v2(mirror(t)) == 1);
  CHECK(v3(mirror(t)) == -1);
  CHECK(v2(f) == -1);
  CHECK(v3(f) == 0);
  const Diagram granny = connected_sum(t, t);
  const Diagram square = connected_sum(t, mirror(t));
  CHECK(v2(granny) == 2);
  CHECK(v3(granny) == 2);
  CHECK(v2(square) == 2);
  CHECK(v3(square) == 0);
  CHECK(v2(Diagram{}) == 0);
  CHECK(v3(Diagram{}) == 0);
}

TEST_CASE("Gauss-diagram values agree with Jones derivatives and Conway") {
  for (const auto& e : builtin_corpus()) {
    CAPTURE(e.name);
    const VassilievReport r = vassiliev_report(e.diagram);
    CHECK(r.all_agree());
    const JonesDerivedValues j = jones_vassiliev(jones(e.diagram));
    CHECK(j.v2 == r.v2);
    CHECK(j.v3 == r.v3);
  }
}

TEST_CASE("oversized bracket is refused") {
  CHECK_THROWS_AS(kauffman_bracket(corpus_entry("3_1").diagram, 2), LimitExceeded);
  CHECK_THROWS_AS(vassiliev_report(corpus_entry("5_1").diagram, 4), LimitExceeded);
}

TEST_CASE("Conway cache") {
  ConwayEngine engine;
  const Diagram& d = corpus_entry("7_4").diagram;
  const P first = engine(d);
  const auto misses = engine.misses();
  CHECK(engine(d) == first);
  CHECK(engine.misses() == misses);
  CHECK(engine.hits() >= 1);
  CHECK(engine.cache_size() > 0);
  engine.clear();
  CHECK(engine.cache_size() == 0);
  CHECK(engine(d) == first);
}

TEST_CASE("Conway call budget") {
  ConwayEngine tiny(1);
  CHECK_THROWS_AS(tiny(corpus_entry("9_1").diagram), LimitExceeded);
}
