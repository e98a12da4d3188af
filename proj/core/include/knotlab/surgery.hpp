#pragma once

#include <array>
#include <span>
#include <vector>

#include "knotlab/diagram.hpp"

namespace knotlab {

/// Swap of braid positions `position` and `position + 1`. When `left_over`
/// is set the strand arriving from the upper-left passes over.
struct BraidLetter {
  int position = 0;
  bool left_over = true;
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// A local tangle made of `fingers` arcs pushed into a face from its boundary.
///
/// Finger f owns braid positions 2f and 2f+1 at the boundary; the braid word
/// is read away from the boundary and every finger is capped at the far end,
/// so position pairs (2f, 2f+1) are joined there. With an empty word the
/// fingers are untangled and the fragment changes nothing. The word must
/// return every finger to its own pair of positions.
struct Fragment {
  int fingers = 0;
  std::vector<BraidLetter> word;

  Fragment mirrored() const;
  /// Word followed by its inverse; reduces to nothing by Reidemeister II moves.
  Fragment with_inverse() const;
  friend bool operator==(const Fragment&, const Fragment&) = default;
};

struct Placement {
  Fragment fragment;
  /// One site per finger, all on a single face. The first site becomes the
  /// leftmost finger; the rest follow in face-boundary order.
  std::vector<Site> sites;
};

/// A batch of local edits applied simultaneously to one host diagram. All
/// indices refer to the host.
struct Surgery {
  std::vector<int> switches;
  /// Triangle faces to flip, given by their three boundary edges.
  std::vector<std::array<int, 3>> flips;
  std::vector<Placement> placements;
};

/// Where a crossing of a surgery result came from.
struct CrossingOrigin {
  int placement = -1;  // -1 for host crossings
  int index = 0;       // host crossing id, or letter index within the fragment
  /// For fragment crossings: finger owning the strand entering at the upper
  /// left, and the finger owning the strand entering at the upper right.
  std::array<int, 2> fingers{-1, -1};
};

inline constexpr int kWrappedOffset = 1 << 16;

struct SurgeryResult {
  Diagram diagram;
  std::vector<CrossingOrigin> origin;  // indexed by result crossing id

  struct EdgeSplit {
    int start = 0;                                  // result edge at the tail of the host edge
    std::vector<std::pair<int, int>> finger_cuts;  // (site offset, passages inserted there)
  };
  std::vector<EdgeSplit> edges;  // indexed by host edge

  /// Result crossing id of a host crossing.
  int translate_crossing(int host_crossing) const;
  /// Where a host site (not itself used by the surgery) lies in the result.
  /// Offsets keep their relative order along the result edge.
  Site translate_site(const Site& s) const;
  /// Result edge carrying the part of a host edge that ends at its head passage.
  int translate_edge(int host_edge) const;
};

/// Applies a surgery. Throws InvalidSite when sites are out of range, repeat,
/// sit on flipped edges, do not share a face, or would produce a non-planar
/// diagram (interleaved placements in one face).
SurgeryResult perform_surgery(const Diagram& host, const Surgery& surgery);

/// Orders sites of one face along the face walk starting at sites[0].
std::vector<Site> order_along_face(const Diagram& d, std::span<const Site> sites, const std::vector<Face>& faces);

}  // namespace knotlab
