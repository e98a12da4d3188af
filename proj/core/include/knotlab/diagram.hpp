#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotlab {

/// Base class for every error raised by the library.
class KnotlabError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent diagram code.
class ParseError : public KnotlabError {
 public:
  using KnotlabError::KnotlabError;
};

/// A move or chord was requested at a site that does not admit it.
class InvalidSite : public KnotlabError {
 public:
  using KnotlabError::KnotlabError;
};

/// A configured size or work limit was exceeded.
class LimitExceeded : public KnotlabError {
 public:
  using KnotlabError::KnotlabError;
};

/// One visit of the knot to a crossing.
struct Passage {
  int crossing = 0;
  bool over = false;
  friend bool operator==(const Passage&, const Passage&) = default;
};

/// Signed oriented Gauss code: passages in traversal order starting from the
/// basepoint, plus the sign of every crossing.
struct GaussCode {
  std::vector<Passage> passages;
  std::vector<int> signs;

  int crossing_count() const { return static_cast<int>(signs.size()); }
  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

/// Crossing record in PD form. edges[0] is the incoming under-strand and the
/// remaining edges follow counterclockwise; the under-strand leaves on
/// edges[2]. The over-strand runs edges[3] -> edges[1] when sign is +1 and
/// edges[1] -> edges[3] when sign is -1.
struct Crossing {
  std::array<int, 4> edges{};
  int sign = 1;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Which side of an oriented edge a face lies on.
enum class Side : std::uint8_t { Right, Left };

/// An attachment point on an edge. Several attachments may share an edge;
/// they are ordered along the edge's orientation by offset.
struct Site {
  int edge = 0;
  int offset = 0;
  Side side = Side::Right;
  friend bool operator==(const Site&, const Site&) = default;
  friend auto operator<=>(const Site&, const Site&) = default;
};

/// One edge on the boundary of a face. Faces are walked with the face on the
/// right, so `along` is true exactly when the face lies to the right of the
/// edge's orientation.
struct FaceEdge {
  int edge = 0;
  bool along = true;
  friend bool operator==(const FaceEdge&, const FaceEdge&) = default;
};

using Face = std::vector<FaceEdge>;

/// Chord of a Gauss diagram: an arrow from the over-passage to the
/// under-passage of one crossing.
struct Arrow {
  int tail = 0;  // over passage
  int head = 0;  // under passage
  int sign = 1;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct GaussDiagram {
  int length = 0;  // 2n endpoint slots on the based circle
  std::vector<Arrow> arrows;
};

/// Planar oriented knot diagram.
///
/// Edges are labelled 0..2n-1 in traversal order from the basepoint, which
/// always sits on edge 0. Passage t is the crossing visit at the head of edge
/// t, so edge t runs from passage t-1 to passage t. The crossingless unknot
/// has a single closed edge 0 and no passages.
///
/// Diagrams are immutable values; every editing operation returns a new one.
class Diagram {
 public:
  Diagram() = default;

  /// Builds a diagram from a signed Gauss code. Crossings are relabelled by
  /// first appearance. Throws ParseError unless every crossing has exactly one
  /// over- and one under-passage and a sign of +/-1. Planarity is not checked
  /// here; see is_planar().
  static Diagram from_gauss(const GaussCode& code);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return crossings_.empty() ? 1 : 2 * crossing_count(); }
  int basepoint() const { return 0; }
  bool is_unknot_diagram() const { return crossings_.empty(); }

  std::span<const Crossing> crossings() const { return crossings_; }
  const GaussCode& gauss_code() const { return code_; }

  int sign(int crossing) const { return code_.signs.at(crossing); }
  int writhe() const;
  int under_passage(int crossing) const { return crossings_.at(crossing).edges[0]; }
  int over_passage(int crossing) const;
  /// The two passages at either end of edge t: {t-1, t} (mod 2n).
  std::array<int, 2> edge_passages(int edge) const;

  std::vector<Face> faces() const;
  /// Index into faces() of the face on the given side of an edge.
  int face_of(int edge, Side side, const std::vector<Face>& faces) const;
  bool is_planar() const;

  GaussDiagram gauss_diagram() const;

  /// KnotTheory-style PD string, 1-based labels: "X[1,5,2,4] X[...]".
  std::string pd_string() const;

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.code_ == b.code_; }

 private:
  GaussCode code_;
  std::vector<Crossing> crossings_;
};

/// Lexicographically minimal signed Gauss-code string over all basepoint
/// rotations, crossings labelled by first appearance. A diagram-level key:
/// equal keys mean equal diagrams up to relabelling and basepoint choice.
std::string canonical_key(const Diagram& d);

GaussDiagram to_gauss(const Diagram& d);

/// Connected sum taken at the basepoint edges.
Diagram connected_sum(const Diagram& a, const Diagram& b);

/// Flips every over/under assignment.
Diagram mirror(const Diagram& d);

/// Switches over and under at one crossing.
Diagram switch_crossing(const Diagram& d, int crossing);

/// Rotates the basepoint forward by `shift` passages.
Diagram rotate_basepoint(const Diagram& d, int shift);

/// Removes the given crossings (both passages of each) from the code.
Diagram delete_crossings(const Diagram& d, std::span<const int> crossings);

}  // namespace knotlab
