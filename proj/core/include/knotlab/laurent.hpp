#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotlab {

/// Exact Laurent polynomial in one abstract variable with integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality. The variable is interpreted by the caller: A for the Kauffman
/// bracket, t^(1/2) for the Jones polynomial, z for the Conway polynomial.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;

  static LaurentPolynomial constant(Coefficient c);
  static LaurentPolynomial monomial(int exponent, Coefficient c = 1);

  const std::map<int, Coefficient>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  void add_term(int exponent, Coefficient c);

  /// Replaces x by x^factor (factor may be negative).
  LaurentPolynomial scale_exponents(int factor) const;
  /// Replaces x^e by x^(e/divisor); every exponent must be divisible.
  LaurentPolynomial divide_exponents(int divisor) const;
  LaurentPolynomial pow(unsigned n) const;

  /// Sorted (exponent, coefficient) pairs.
  std::vector<std::pair<int, Coefficient>> pairs() const;
  static LaurentPolynomial from_pairs(const std::vector<std::pair<int, Coefficient>>& pairs);

  std::string to_string(std::string_view variable = "x") const;

 private:
  std::map<int, Coefficient> terms_;
};

}  // namespace knotlab
