#include "knotlab/serialize.hpp"

#include <cctype>
#include <cstdio>

namespace knotlab {

std::string gauss_text(const Diagram& d) {
  const GaussCode& g = d.gauss_code();
  std::string out = std::to_string(g.crossing_count()) + ":";
  for (const Passage& p : g.passages) {
    out += p.over ? 'O' : 'U';
    out += std::to_string(p.crossing + 1);
    out += g.signs[p.crossing] > 0 ? '+' : '-';
  }
  return out;
}

Diagram parse_gauss_text(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("gauss text: missing ':'");
  int n = 0;
  try {
    n = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw ParseError("gauss text: bad crossing count");
  }
  if (n < 0) throw ParseError("gauss text: negative crossing count");
  GaussCode g;
  g.signs.assign(n, 0);
  std::size_t i = colon + 1;
  while (i < text.size()) {
    const char kind = text[i];
    if (kind != 'O' && kind != 'U') throw ParseError("gauss text: expected O or U");
    std::size_t j = ++i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i || j >= text.size() || (text[j] != '+' && text[j] != '-')) throw ParseError("gauss text: malformed token");
    const int c = std::stoi(text.substr(i, j - i)) - 1;
    if (c < 0 || c >= n) throw ParseError("gauss text: crossing label out of range");
    const int sign = text[j] == '+' ? 1 : -1;
    if (g.signs[c] != 0 && g.signs[c] != sign) throw ParseError("gauss text: inconsistent sign");
    g.signs[c] = sign;
    g.passages.push_back({c, kind == 'O'});
    i = j + 1;
  }
  return Diagram::from_gauss(g);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void to_json(json& j, const LaurentPolynomial& p) {
  j = json::array();
  for (const auto& [e, c] : p.pairs()) j.push_back({e, c});
}

void from_json(const json& j, LaurentPolynomial& p) {
  std::vector<std::pair<int, LaurentPolynomial::Coefficient>> pairs;
  for (const auto& t : j) pairs.emplace_back(t.at(0).get<int>(), t.at(1).get<LaurentPolynomial::Coefficient>());
  p = LaurentPolynomial::from_pairs(pairs);
}

void to_json(json& j, const Diagram& d) { j = gauss_text(d); }

void from_json(const json& j, Diagram& d) { d = parse_gauss_text(j.get<std::string>()); }

void to_json(json& j, const Site& s) { j = json::array({s.edge, s.offset, s.side == Side::Right ? "R" : "L"}); }

void from_json(const json& j, Site& s) {
  s.edge = j.at(0).get<int>();
  s.offset = j.at(1).get<int>();
  const std::string side = j.at(2).get<std::string>();
  if (side != "R" && side != "L") throw ParseError("site side must be R or L");
  s.side = side == "R" ? Side::Right : Side::Left;
}

void to_json(json& j, const Chord& c) {
  j = json{{"template_k", c.order}, {"form", to_string(c.form)}};
  switch (c.form) {
    case ChordForm::Switch: j["crossing"] = c.crossing; break;
    case ChordForm::Triangle: j["triangle"] = c.triangle; break;
    case ChordForm::Fingers:
      j["sites"] = c.sites;
      j["mirror"] = c.mirror;
      break;
  }
}

void from_json(const json& j, Chord& c) {
  c = Chord{};
  c.order = j.at("template_k").get<int>();
  c.form = chord_form_from_string(j.at("form").get<std::string>());
  if (c.form == ChordForm::Switch) c.crossing = j.at("crossing").get<int>();
  if (c.form == ChordForm::Triangle) c.triangle = j.at("triangle").get<std::array<int, 3>>();
  if (c.form == ChordForm::Fingers) {
    c.sites = j.at("sites").get<std::vector<Site>>();
    c.mirror = j.value("mirror", false);
  }
}

void to_json(json& j, const ReidemeisterMove& m) {
  j = json{{"kind", static_cast<int>(m.kind)}, {"direction", m.direction == Direction::Add ? "add" : "remove"}};
  if (!m.crossings.empty()) j["crossings"] = m.crossings;
  if (!m.edges.empty()) j["edges"] = m.edges;
  if (!m.sites.empty()) {
    j["sites"] = m.sites;
    j["over"] = m.over;
  }
}

void from_json(const json& j, ReidemeisterMove& m) {
  m = ReidemeisterMove{};
  const int kind = j.at("kind").get<int>();
  if (kind < 1 || kind > 3) throw ParseError("Reidemeister move kind must be 1, 2 or 3");
  m.kind = static_cast<MoveKind>(kind);
  const std::string dir = j.at("direction").get<std::string>();
  if (dir != "add" && dir != "remove") throw ParseError("move direction must be add or remove");
  m.direction = dir == "add" ? Direction::Add : Direction::Remove;
  m.crossings = j.value("crossings", std::vector<int>{});
  m.edges = j.value("edges", std::vector<int>{});
  if (j.contains("sites")) m.sites = j.at("sites").get<std::vector<Site>>();
  m.over = j.value("over", true);
}

void to_json(json& j, const ScriptStep& s) {
  if (s.chord)
    j = json{{"chord", *s.chord}};
  else
    j = json{{"move", *s.move}};
}

void from_json(const json& j, ScriptStep& s) {
  s = ScriptStep{};
  if (j.contains("chord"))
    s.chord = j.at("chord").get<Chord>();
  else if (j.contains("move"))
    s.move = j.at("move").get<ReidemeisterMove>();
  else
    throw ParseError("script step needs a chord or a move");
}

void to_json(json& j, const Script& s) { j = s.steps; }

void from_json(const json& j, Script& s) { s.steps = j.get<std::vector<ScriptStep>>(); }

void to_json(json& j, const BrunnianCertificate& c) {
  j = json{{"strand", c.strand}, {"start", c.start}, {"steps", c.reduction}};
}

void from_json(const json& j, BrunnianCertificate& c) {
  c.strand = j.at("strand").get<int>();
  c.start = j.at("start").get<Diagram>();
  c.reduction = j.at("steps").get<Script>();
}

void to_json(json& j, const LowerCertificate& c) {
  j = json{{"order", c.order}, {"start", c.start}, {"steps", c.script}, {"target_key", c.target_key}, {"states", c.states}};
}

void from_json(const json& j, LowerCertificate& c) {
  c.order = j.at("order").get<int>();
  c.start = j.at("start").get<Diagram>();
  c.script = j.at("steps").get<Script>();
  c.target_key = j.at("target_key").get<std::string>();
  c.states = j.value("states", std::int64_t{0});
}

void to_json(json& j, const SearchResult& r) {
  j = json{{"found", r.found}, {"status", r.found ? "found" : "exhausted"}, {"start", r.start},
           {"steps", r.script},  {"target_key", r.target_key},                  {"states", r.states}};
}

void from_json(const json& j, SearchResult& r) {
  r.found = j.at("found").get<bool>();
  r.start = j.at("start").get<Diagram>();
  r.script = j.at("steps").get<Script>();
  r.target_key = j.at("target_key").get<std::string>();
  r.states = j.value("states", std::int64_t{0});
}

void to_json(json& j, const SingularFamily& f) { j = json{{"base", f.base}, {"chords", f.chords}}; }

void from_json(const json& j, SingularFamily& f) {
  f.base = j.at("base").get<Diagram>();
  f.chords = j.at("chords").get<std::vector<Chord>>();
}

json invariant_record(const Diagram& d) {
  const VassilievReport r = vassiliev_report(d);
  return json{{"key", canonical_key(d)},
              {"crossings", d.crossing_count()},
              {"v2", r.v2},
              {"v3", r.v3},
              {"jones", jones(d)},
              {"conway", conway(d)},
              {"crosschecks",
               {{"v2_conway", r.v2_matches_conway}, {"v2_jones", r.v2_matches_jones}, {"v3_jones", r.v3_matches_jones}}}};
}

json type_trial_record(const TypeReport& report, const TypeTrial& t) {
  json j{{"type", "verify_type"},        {"invariant", to_string(report.phi)}, {"orders", report.orders},
         {"trial", t.trial},             {"seed", t.seed},                     {"base", t.base},
         {"constructed", t.constructed}, {"expect_zero", report.expect_zero}};
  if (t.constructed) {
    j["sum"] = t.sum;
    j["conditions"] = t.conditions_hold;
    j["chords"] = t.chords;
    j["pass"] = t.conditions_hold && (!report.expect_zero || t.sum == 0);
  } else {
    j["error"] = t.error;
    j["pass"] = true;
  }
  return j;
}

json necessity_record(const NecessityReport& r) {
  json deltas = json::array();
  for (const auto& s : r.steps) deltas.push_back(s.v2_after - s.v2_before);
  json j{{"type", "necessity"}, {"l", r.l},           {"base", r.base},
         {"seed", r.seed},               {"moves", r.steps.size()}, {"rejected_samples", r.failures},
         {"v2_deltas", deltas},          {"constant", r.constant}};
  if (r.witness) {
    j["witness_step"] = *r.witness;
    j["witness_chord"] = r.steps[*r.witness].chord;
  }
  j["pass"] = r.l == 3 ? r.constant : true;
  return j;
}

json group_record(const GroupReport& r) {
  int additive = 0, commutative = 0;
  for (const auto& p : r.pairs) {
    additive += p.additive;
    commutative += p.commutative;
  }
  json inverses = json::array();
  for (const auto& h : r.inverses) inverses.push_back({h.knot, h.partner});
  return json{{"type", "group_checks"},
              {"pairs", r.pairs.size()},
              {"additive", additive},
              {"commutative", commutative},
              {"associativity_checked", r.associativity_checked},
              {"associativity_failures", r.associativity_failures},
              {"identity", r.identity_holds},
              {"inverse_hits", inverses},
              {"pass", r.passed()}};
}

}  // namespace knotlab
