#include "knotlab/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace knotlab {

LaurentPolynomial LaurentPolynomial::constant(Coefficient c) { return monomial(0, c); }

LaurentPolynomial LaurentPolynomial::monomial(int exponent, Coefficient c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

LaurentPolynomial::Coefficient LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) {
  *this = *this * other;
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial LaurentPolynomial::scale_exponents(int factor) const {
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(e * factor, c);
  return r;
}

LaurentPolynomial LaurentPolynomial::divide_exponents(int divisor) const {
  if (divisor == 0) throw std::invalid_argument("divide_exponents by zero");
  LaurentPolynomial r;
  for (const auto& [e, c] : terms_) {
    if (e % divisor != 0) throw std::domain_error("exponent not divisible");
    r.add_term(e / divisor, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial result = constant(1);
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

std::vector<std::pair<int, LaurentPolynomial::Coefficient>> LaurentPolynomial::pairs() const {
  return {terms_.begin(), terms_.end()};
}

LaurentPolynomial LaurentPolynomial::from_pairs(const std::vector<std::pair<int, Coefficient>>& pairs) {
  LaurentPolynomial r;
  for (const auto& [e, c] : pairs) r.add_term(e, c);
  return r;
}

std::string LaurentPolynomial::to_string(std::string_view variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coefficient mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << variable;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace knotlab
