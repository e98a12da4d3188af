#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "knotlab/moves.hpp"

namespace knotlab {

inline constexpr std::int64_t kDefaultSearchBudget = 20000;
inline constexpr std::int64_t kDefaultDeltaBudget = 20000;

/// Outcome of a bounded search. When `found` is false the search ran out of
/// budget: that says nothing about whether a path exists.
struct SearchResult {
  bool found = false;
  Diagram start;
  Script script;
  std::string target_key;
  std::int64_t states = 0;
};

/// Breadth-first search over chords of the given orders (2: crossing
/// switches, 3: cyclic-triangle deltas, 4: clasp-pass finger chords), each
/// followed by simplification. Starts at simplify(d1), stops on reaching the
/// canonical key of simplify(d2). Intermediate diagrams are capped at four
/// crossings above the larger endpoint.
SearchResult bfs_path(const Diagram& d1, const Diagram& d2, const std::set<int>& orders,
                      std::int64_t budget = kDefaultSearchBudget);

/// Best-first search for a sequence of delta moves and Reidemeister moves
/// taking simplify(d) to the crossingless circle. States are ordered by |v2|,
/// then crossing count, then depth.
SearchResult delta_unknot(const Diagram& d, std::int64_t budget = kDefaultDeltaBudget);

/// Replays the script from `start` and compares the canonical key. When
/// `orders` is nonempty every chord step must have one of those orders.
bool check_path(const SearchResult& r, const std::set<int>& orders = {});

}  // namespace knotlab
