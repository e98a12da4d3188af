#pragma once

#include <nlohmann/json.hpp>

#include "knotlab/finite_type.hpp"
#include "knotlab/invariants.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/moves.hpp"
#include "knotlab/search.hpp"

namespace knotlab {

using nlohmann::json;

/// Gauss code text "n:O1+U2-...": one token per passage, crossing labels
/// 1-based, sign after the label. The unknot is "0:".
std::string gauss_text(const Diagram& d);
Diagram parse_gauss_text(const std::string& text);

/// 64-bit FNV-1a, used for cache checksums and config hashes.
std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t v);

void to_json(json& j, const LaurentPolynomial& p);
void from_json(const json& j, LaurentPolynomial& p);
void to_json(json& j, const Diagram& d);
void from_json(const json& j, Diagram& d);
void to_json(json& j, const Site& s);
void from_json(const json& j, Site& s);
void to_json(json& j, const Chord& c);
void from_json(const json& j, Chord& c);
void to_json(json& j, const ReidemeisterMove& m);
void from_json(const json& j, ReidemeisterMove& m);
void to_json(json& j, const ScriptStep& s);
void from_json(const json& j, ScriptStep& s);
void to_json(json& j, const Script& s);
void from_json(const json& j, Script& s);
void to_json(json& j, const BrunnianCertificate& c);
void from_json(const json& j, BrunnianCertificate& c);
void to_json(json& j, const LowerCertificate& c);
void from_json(const json& j, LowerCertificate& c);
void to_json(json& j, const SearchResult& r);
void from_json(const json& j, SearchResult& r);
void to_json(json& j, const SingularFamily& f);
void from_json(const json& j, SingularFamily& f);

/// {key, v2, v3, jones, conway, crosschecks}; throws LimitExceeded for
/// diagrams too large for the polynomial routes.
json invariant_record(const Diagram& d);

json type_trial_record(const TypeReport& report, const TypeTrial& t);
json necessity_record(const NecessityReport& r);
json group_record(const GroupReport& r);

}  // namespace knotlab
