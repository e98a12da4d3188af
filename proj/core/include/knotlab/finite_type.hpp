#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotlab/corpus.hpp"
#include "knotlab/moves.hpp"

namespace knotlab {

enum class Invariant : std::uint8_t { V2, V3 };

const char* to_string(Invariant i);
Invariant invariant_from_string(const std::string& s);
std::int64_t evaluate(Invariant i, const Diagram& d);
/// Order of the invariant (2 for v2, 3 for v3).
int invariant_order(Invariant i);

/// Seed of trial `index` under a master seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Sum over P of (-1)^|P| phi(K_P).
std::int64_t alternating_sum(const std::vector<Diagram>& members, Invariant phi);
std::int64_t alternating_sum(const SingularFamily& f, Invariant phi);

struct TypeTrial {
  int trial = 0;
  std::uint64_t seed = 0;
  std::string base;
  std::vector<Chord> chords;
  std::int64_t sum = 0;
  bool constructed = false;
  bool conditions_hold = false;
  std::string error;
};

struct TypeReport {
  Invariant phi = Invariant::V2;
  std::vector<int> orders;
  std::uint64_t seed = 0;
  std::vector<TypeTrial> trials;
  /// True when the type bound sum(k_i - 1) exceeds the invariant's order, so
  /// every sum must vanish.
  bool expect_zero = false;

  int constructed() const;
  int nonzero() const;
  /// Every constructed family satisfied the structural conditions and, when
  /// expect_zero holds, summed to zero. Construction failures are reported
  /// but do not fail the report.
  bool passed() const;
};

/// Random families of the given type over the corpus bases, round robin,
/// each from its own derived seed.
TypeReport verify_type(Invariant phi, const std::vector<int>& orders, int trials, std::uint64_t seed,
                       const std::vector<CorpusEntry>& bases);

struct NecessityStep {
  Chord chord;
  int crossings = 0;
  std::int64_t v2_before = 0;
  std::int64_t v2_after = 0;
};

struct NecessityReport {
  int l = 3;
  std::string base;
  std::uint64_t seed = 0;
  std::vector<NecessityStep> steps;
  int failures = 0;  // chord samples rejected as collisions
  /// Every invariant of order <= l-1 stayed constant (for l = 3: v2).
  bool constant = true;
  /// For l = 2: the first step whose v2 changed by +-1, if any.
  std::optional<int> witness;
};

/// Applies n_moves random order-(l+1) chords in sequence, reducing by R1/R2
/// after each, tracking v2.
NecessityReport necessity_walk(const CorpusEntry& base, int l, int n_moves, std::uint64_t seed);

struct PairCheck {
  std::string a, b;
  bool additive = false;
  bool commutative = false;
};

struct InverseHit {
  std::string knot, partner;
};

struct GroupReport {
  std::vector<PairCheck> pairs;
  int associativity_checked = 0;
  int associativity_failures = 0;
  bool identity_holds = true;
  std::vector<InverseHit> inverses;
  bool passed() const;
};

/// Connected-sum structure seen through (v2, v3): additivity, commutativity,
/// associativity, the unknot as identity, and a scan of corpus knots and
/// their mirrors for partners J with (v2, v3)(K # J) = (0, 0).
GroupReport group_checks(const std::vector<CorpusEntry>& corpus, int pairs, std::uint64_t seed);

/// A type-B(2,2) family whose v2 alternating sum is nonzero, found by seeded
/// search over the corpus.
struct SharpnessWitness {
  std::string base;
  std::uint64_t seed = 0;
  SingularFamily family;
  std::int64_t sum = 0;
};
std::optional<SharpnessWitness> sharpness_witness(const std::vector<CorpusEntry>& bases, std::uint64_t seed,
                                                  int max_trials = 200);

}  // namespace knotlab
