#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotlab/diagram.hpp"

namespace knotlab {

/// Based arrow diagram with at most three arrows, packed into an integer.
///
/// Endpoints are read from the basepoint; each endpoint contributes three
/// bits: the arrow label (numbered by first appearance) and whether the
/// endpoint is the tail. Two subdiagrams have the same signature exactly when
/// they are the same based arrow diagram.
struct ArrowSignature {
  int arrows = 0;
  std::uint32_t code = 0;
  friend auto operator<=>(const ArrowSignature&, const ArrowSignature&) = default;
};

/// Signature of a set of (tail, head) arrows given by distinct positions.
ArrowSignature signature_of(const std::vector<std::pair<int, int>>& arrows);

/// Text form, e.g. "T1 H2 H1 T2": endpoints in order, T/H for tail/head.
std::string describe(const ArrowSignature& sig);
ArrowSignature parse_signature(std::string_view text);

/// Signed count of every `arrows`-arrow subdiagram of g, keyed by signature.
/// The weight of a subdiagram is the product of its arrow signs.
std::map<ArrowSignature, std::int64_t> arrow_counts(const GaussDiagram& g, int arrows);

/// Signed count of one pattern.
std::int64_t arrow_count(const GaussDiagram& g, const ArrowSignature& pattern);

}  // namespace knotlab
