#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "knotlab/diagram.hpp"
#include "knotlab/laurent.hpp"

namespace knotlab {

inline constexpr int kDefaultBracketLimit = 20;

/// Kauffman bracket in A by the full state sum, normalised so the
/// crossingless circle is 1. Throws LimitExceeded above `max_crossings`.
LaurentPolynomial kauffman_bracket(const Diagram& d, int max_crossings = kDefaultBracketLimit);

/// Jones polynomial in the variable t^(1/2): exponent e stands for t^(e/2).
LaurentPolynomial jones(const Diagram& d, int max_crossings = kDefaultBracketLimit);

/// Order-2 and order-3 values read off the Jones polynomial at t = 1:
/// v2 = -V''(1)/6 and v3 = -(V'''(1) + 3V''(1))/36.
struct JonesDerivedValues {
  std::int64_t v2 = 0;
  std::int64_t v3 = 0;
};
JonesDerivedValues jones_vassiliev(const LaurentPolynomial& jones_half);

/// Conway polynomial by the skein relation
///   C(L+) - C(L-) = z C(L0),
/// switching the first crossing met from below in basepoint traversal order
/// until the diagram is descending. Results are memoised by diagram key in a
/// shared cache with insert-if-absent semantics.
class ConwayEngine {
 public:
  explicit ConwayEngine(std::int64_t call_budget = 20'000'000) : call_budget_(call_budget) {}

  LaurentPolynomial operator()(const Diagram& d);

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }
  std::size_t cache_size() const;
  void clear();

  struct Link;

 private:
  LaurentPolynomial evaluate(Link link, std::int64_t& calls);

  std::int64_t call_budget_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, LaurentPolynomial> cache_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

/// Process-wide engine shared by conway().
ConwayEngine& default_conway_engine();

/// Conway polynomial in z. Throws LimitExceeded if the recursion budget runs out.
LaurentPolynomial conway(const Diagram& d);

/// Gauss-diagram formula for the order-2 invariant (equals the z^2
/// coefficient of the Conway polynomial).
std::int64_t v2(const Diagram& d);

/// Gauss-diagram formula for the order-3 invariant, normalised so the
/// positive (right-handed) trefoil has value 1.
std::int64_t v3(const Diagram& d);

struct VassilievReport {
  std::int64_t v2 = 0;
  std::int64_t v3 = 0;
  bool v2_matches_conway = false;
  bool v2_matches_jones = false;
  bool v3_matches_jones = false;
  bool all_agree() const { return v2_matches_conway && v2_matches_jones && v3_matches_jones; }
};

/// Throws LimitExceeded when the diagram is too large for the polynomial routes.
VassilievReport vassiliev_report(const Diagram& d, int max_crossings = kDefaultBracketLimit);

}  // namespace knotlab
