#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "knotlab/diagram.hpp"
#include "knotlab/reidemeister.hpp"
#include "knotlab/surgery.hpp"

namespace knotlab {

/// How a chord attaches to a host diagram.
///   Switch   - order 2 only: change one existing crossing.
///   Triangle - order 3 only: delta move across a cyclic triangular face.
///   Fingers  - any order: push k fingers into one face from the given sites
///              and braid them by the template's fragment word.
enum class ChordForm : std::uint8_t { Switch, Triangle, Fingers };

const char* to_string(ChordForm f);
ChordForm chord_form_from_string(const std::string& s);

struct Chord {
  int order = 2;
  ChordForm form = ChordForm::Fingers;
  int crossing = -1;                 // Switch
  std::array<int, 3> triangle{};     // Triangle: edge ids
  std::vector<Site> sites;           // Fingers: one site per finger
  bool mirror = false;               // Fingers: use the mirrored fragment

  friend bool operator==(const Chord&, const Chord&) = default;
};

/// A step of a replayable script: either a chord application or a single
/// Reidemeister move.
struct ScriptStep {
  std::optional<Chord> chord;
  std::optional<ReidemeisterMove> move;
};

struct Script {
  std::vector<ScriptStep> steps;
  bool empty() const { return steps.empty(); }
};

/// A tangle drawn inside its standard closure: the fragment's fingers hang
/// off a single crossingless arc. `pairing[e]` is the boundary endpoint joined
/// to endpoint e by a strand of the tangle.
struct Tangle {
  Diagram closure;
  std::vector<int> pairing;
};

/// Evidence that deleting one strand from the move leaves a trivial tangle:
/// the strand-deleted closure and a Reidemeister script reducing it to the
/// crossingless circle.
struct BrunnianCertificate {
  int strand = 0;
  Diagram start;
  Script reduction;
};

struct MoveTemplate {
  int k = 2;
  std::string name;
  Fragment fragment;  // tangle_after; tangle_before is k uncrossed fingers
  std::vector<BrunnianCertificate> certificates;

  Tangle tangle_before() const;
  Tangle tangle_after() const;
};

/// Braid words for the built-in fragments. Strand 2(k-1) is the active
/// strand; letter x_j clasps it with finger j. Order 2 is the clasp x_0,
/// order 3 the commutator [x_0, x_1], order 4 the iterated commutator
/// [[x_0, x_1], x_2].
Fragment builtin_fragment(int k);

/// Templates for k = 2 (crossing change), 3 (delta), 4 (clasp-pass), with
/// certificates computed and checked. Built once per process.
const std::map<int, MoveTemplate>& builtin_templates();
const MoveTemplate& builtin_template(int k);

/// Endpoint pairing of a fragment, following each strand down the word and
/// back up through its cap.
std::vector<int> endpoint_pairing(const Fragment& f);

/// Crossingless circle with the fragment attached.
SurgeryResult closure_of(const Fragment& f);

/// Strand `finger` removed from the closure of `f`.
Diagram delete_strand(const Fragment& f, int finger);

BrunnianCertificate certify_strand(const MoveTemplate& t, int strand);
/// Recomputes the strand-deleted closure and replays the reduction.
bool check_certificate(const MoveTemplate& t, const BrunnianCertificate& c);
/// Boundary pairings agree and every certificate replays.
bool validate_template(const MoveTemplate& t);

// ---------------------------------------------------------------------------
// Sites and chords

/// Subdivision points considered per edge. The crossingless circle has a
/// single edge and gets more, so that several chords fit on it.
inline constexpr int kOffsetsPerEdge = 3;
inline constexpr int kOffsetsOnCircle = 16;
int offsets_per_edge(const Diagram& d);

/// Deterministic enumeration of chord candidates of order k on d: every
/// switchable crossing (k = 2), every cyclic triangle (k = 3), then finger
/// site tuples face by face, capped at `limit` entries in total.
std::vector<Chord> enumerate_sites(const Diagram& d, int k, std::size_t limit = 20000);

/// Uniformly random finger chord of order k on d, or a Switch/Triangle chord
/// with probability `local_form_weight` when one exists.
std::optional<Chord> sample_chord(const Diagram& d, int k, std::mt19937_64& rng, double local_form_weight = 0.3);

/// Builds the simultaneous surgery realising a set of chords. Throws
/// InvalidSite when two chords overlap.
Surgery surgery_for(const Diagram& d, const std::vector<Chord>& chords);

SurgeryResult apply_chord_with_origin(const Diagram& d, const Chord& c);
Diagram apply_chord(const Diagram& d, const Chord& c);

/// The band sum: all chords applied at once. Chords must be site-disjoint.
SurgeryResult band_sum_with_origin(const Diagram& d, const std::vector<Chord>& chords);
Diagram band_sum(const Diagram& d, const std::vector<Chord>& chords);

/// True when the two chords of d use no common crossing, edge slot or
/// triangle edge.
bool site_disjoint(const Diagram& d, const Chord& a, const Chord& b);

/// Re-expresses a chord of the host in the coordinates of a surgery result
/// (for chords that were not part of that surgery).
Chord translate_chord(const Chord& c, const SurgeryResult& r);

/// Undoes a single chord applied by apply_chord_with_origin: switches back,
/// flips the triangle back, or deletes the fragment crossings.
Diagram revert_chord(const SurgeryResult& applied, const Chord& c);

/// Runs a script; chord steps use apply_chord, move steps reidemeister().
Diagram run_script(const Diagram& start, const Script& s);

Script reduction_script(const std::vector<ReidemeisterMove>& trace);

// ---------------------------------------------------------------------------
// Singular families

struct SingularFamily {
  Diagram base;
  std::vector<Chord> chords;
  std::vector<int> orders() const;
};

/// K_P for every subset P (bit i of the index set means chord i applied).
std::vector<Diagram> family(const SingularFamily& f);

/// Same, with the crossing provenance of every member.
std::vector<SurgeryResult> family_with_origin(const SingularFamily& f);

/// Structural check that each K_P agrees with the base outside the chords,
/// and inside chord i agrees with K_full when i is in P and with the base
/// otherwise.
bool check_family_conditions(const SingularFamily& f, const std::vector<SurgeryResult>& members);

/// Random site-disjoint family of the given orders on `base`. Returns
/// nullopt when `attempts` samples all collide.
std::optional<SingularFamily> random_family(const Diagram& base, const std::vector<int>& orders, std::mt19937_64& rng,
                                            int attempts = 200);

// ---------------------------------------------------------------------------
// Realising a template by lower-order moves

/// Script from `start` (the template's tangle_after closure) to `target_key`
/// (the tangle_before closure, i.e. the crossingless circle).
struct LowerCertificate {
  int order = 2;
  Diagram start;
  Script script;
  std::string target_key;
  std::int64_t states = 0;
};

/// Searches for order-l chords inside the template's tangle which, followed by
/// Reidemeister moves, turn tangle_after into tangle_before. For l = k the
/// certificate is the move itself (applied to tangle_before). Returns nullopt
/// when the budget of explored states runs out.
std::optional<LowerCertificate> realize_by_lower(const MoveTemplate& t, int l, std::int64_t budget = 100000);

/// Replays a lower certificate and checks that it uses only order-l chords.
bool check_lower_certificate(const LowerCertificate& c);

}  // namespace knotlab
