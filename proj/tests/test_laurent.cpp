#include "doctest.h"
#include "knotlab/laurent.hpp"

using knotlab::LaurentPolynomial;
using P = LaurentPolynomial;

TEST_CASE("zero and constants") {
  CHECK(P().is_zero());
  CHECK(P::constant(0).is_zero());
  CHECK(P::monomial(3, 0).is_zero());
  CHECK(P::constant(5).coefficient(0) == 5);
  CHECK(P().to_string() == "0");
}

TEST_CASE("addition cancels terms") {
  P a = P::monomial(2, 3) + P::monomial(-1, 1);
  P b = P::monomial(2, -3);
  P s = a + b;
  CHECK(s.terms().size() == 1);
  CHECK(s.coefficient(-1) == 1);
  CHECK(s.coefficient(2) == 0);
  CHECK((a - a).is_zero());
  CHECK(-a + a == P());
}

TEST_CASE("multiplication") {
  // (1 + x)(1 - x) = 1 - x^2
  P a = P::constant(1) + P::monomial(1);
  P b = P::constant(1) - P::monomial(1);
  P prod = a * b;
  CHECK(prod == P::from_pairs({{0, 1}, {2, -1}}));
  // (x^-1 + x)^2 = x^-2 + 2 + x^2
  P c = P::monomial(-1) + P::monomial(1);
  CHECK(c * c == P::from_pairs({{-2, 1}, {0, 2}, {2, 1}}));
  CHECK(c.pow(2) == c * c);
  CHECK(c.pow(0) == P::constant(1));
  CHECK(c.pow(3) == c * c * c);
}

TEST_CASE("exponent rescaling") {
  P a = P::from_pairs({{-2, 1}, {4, -3}});
  CHECK(a.scale_exponents(2) == P::from_pairs({{-4, 1}, {8, -3}}));
  CHECK(a.scale_exponents(2).divide_exponents(2) == a);
  CHECK(a.min_exponent() == -2);
  CHECK(a.max_exponent() == 4);
  CHECK_THROWS(a.divide_exponents(0));
}

TEST_CASE("pairs round trip and printing") {
  P a = P::from_pairs({{0, 1}, {2, -1}, {3, 2}});
  CHECK(P::from_pairs(a.pairs()) == a);
  CHECK(a.to_string("z") == "1 - z^2 + 2*z^3");
  CHECK(P::monomial(-1, -1).to_string("t") == "-t^-1");
}
