#pragma once

#include <string>
#include <string_view>

#include "knotlab/diagram.hpp"

namespace knotlab {

/// Parses a PD code. Accepts `X[a,b,c,d]`, `X(a,b,c,d)` or bare integers in
/// groups of four, optionally wrapped in `PD[...]`. Each tuple lists edge
/// labels counterclockwise starting from the incoming under-strand. The
/// basepoint is placed on the lowest-numbered edge. An empty string is the
/// crossingless unknot.
Diagram parse_pd(std::string_view text);

std::string emit_pd(const Diagram& d);

/// Largest DT code accepted; realizability is decided by exhaustive search
/// over crossing handedness.
inline constexpr int kMaxDtCrossings = 22;

/// Parses a Dowker-Thistlethwaite code (space or comma separated even
/// integers). A negative entry marks a crossing where the odd-labelled
/// passage goes under. Throws ParseError for odd or repeated entries and for
/// codes with no planar realization.
Diagram parse_dt(std::string_view text);

/// DT code read from the basepoint; parse_dt(emit_dt(d)) reproduces the code.
std::string emit_dt(const Diagram& d);

/// Parses either format: text containing 'X' or parentheses/brackets is read
/// as PD, anything else as DT.
Diagram parse_code(std::string_view text);

}  // namespace knotlab
