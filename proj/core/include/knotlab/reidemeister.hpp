#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "knotlab/diagram.hpp"

namespace knotlab {

enum class MoveKind : std::uint8_t { R1 = 1, R2 = 2, R3 = 3 };
enum class Direction : std::uint8_t { Add, Remove };

/// A Reidemeister move together with its location.
///
/// Removals name crossings: R1 one kink crossing, R2 the two bigon
/// crossings. R3 names the three boundary edges of the triangle. Additions
/// name sites: R1 one site (the kink is a one-finger twist, `over` picks
/// which arc of the twist is on top), R2 two sites on one face (`over`: the
/// arc pushed from the first site goes over).
struct ReidemeisterMove {
  MoveKind kind = MoveKind::R1;
  Direction direction = Direction::Remove;
  std::vector<int> crossings;
  std::vector<int> edges;
  std::vector<Site> sites;
  bool over = true;
  friend bool operator==(const ReidemeisterMove&, const ReidemeisterMove&) = default;
};

/// Applies one move; throws InvalidSite if the site does not admit it.
Diagram reidemeister(const Diagram& d, const ReidemeisterMove& move);

/// Triangle faces with three distinct crossings, as edge triples.
struct Triangle {
  std::array<int, 3> edges{};
  /// True when some boundary strand is over at both its corners (an R3
  /// site); false when the over/under pattern is cyclic (a delta site).
  bool r3 = false;
};
std::vector<Triangle> triangles(const Diagram& d);

/// All applicable removal moves (R1 then R2), in a fixed order.
std::vector<ReidemeisterMove> reducing_moves(const Diagram& d);
std::vector<ReidemeisterMove> r3_moves(const Diagram& d);

/// One random Reidemeister move (additions, removals and R3 mixed) keeping the
/// crossing count at most `max_crossings`. Returns nullopt if nothing applies.
std::optional<ReidemeisterMove> random_move(const Diagram& d, std::mt19937_64& rng, int max_crossings);

struct SimplifyOptions {
  int r3_budget = 1000;  // expansions of the R3 exploration
};

struct SimplifyResult {
  Diagram diagram;
  std::vector<ReidemeisterMove> trace;  // replays input -> diagram
};

/// Greedy R1/R2 reduction; when stuck, a breadth-first R3 exploration (deduped
/// by canonical key, bounded by r3_budget expansions) looks for a diagram that
/// admits a further reduction. Never increases the crossing count.
SimplifyResult simplify_with_trace(const Diagram& d, const SimplifyOptions& options = {});
Diagram simplify(const Diagram& d, const SimplifyOptions& options = {});

/// Greedy R1/R2 reduction only.
SimplifyResult reduce(const Diagram& d);

Diagram replay(const Diagram& d, const std::vector<ReidemeisterMove>& trace);

}  // namespace knotlab
