#include "knotlab/moves.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace knotlab {

const char* to_string(ChordForm f) {
  switch (f) {
    case ChordForm::Switch: return "switch";
    case ChordForm::Triangle: return "triangle";
    case ChordForm::Fingers: return "fingers";
  }
  return "?";
}

ChordForm chord_form_from_string(const std::string& s) {
  if (s == "switch") return ChordForm::Switch;
  if (s == "triangle") return ChordForm::Triangle;
  if (s == "fingers") return ChordForm::Fingers;
  throw ParseError("unknown chord form '" + s + "'");
}

// ---------------------------------------------------------------------------
// Fragments

namespace {

// Clasp of the active strand (at `active`) with the right strand of finger j,
// reached by passing over everything in between and returning the same way.
void append_clasp(std::vector<BraidLetter>& w, int active, int j, bool inverse) {
  const int target = 2 * j + 2;
  for (int p = active; p > target; --p) w.push_back({p - 1, false});
  w.push_back({2 * j + 1, inverse});
  w.push_back({2 * j + 1, inverse});
  for (int p = target; p < active; ++p) w.push_back({p, true});
}

std::vector<BraidLetter> invert(const std::vector<BraidLetter>& w) {
  std::vector<BraidLetter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->position, !it->left_over});
  return out;
}

std::vector<BraidLetter> concat(std::initializer_list<std::vector<BraidLetter>> parts) {
  std::vector<BraidLetter> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<BraidLetter> commutator(const std::vector<BraidLetter>& a, const std::vector<BraidLetter>& b) {
  return concat({a, b, invert(a), invert(b)});
}

// Cancels adjacent inverse letters (an R2 move inside the fragment).
std::vector<BraidLetter> free_reduce(const std::vector<BraidLetter>& w) {
  std::vector<BraidLetter> out;
  for (const BraidLetter& l : w) {
    if (!out.empty() && out.back().position == l.position && out.back().left_over != l.left_over)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

Fragment builtin_fragment(int k) {
  if (k < 2 || k > 4) throw std::invalid_argument("builtin fragments exist for k = 2, 3, 4");
  const int active = 2 * (k - 1);
  auto x = [&](int j) {
    std::vector<BraidLetter> w;
    append_clasp(w, active, j, false);
    return w;
  };
  std::vector<BraidLetter> word;
  if (k == 2) word = x(0);
  if (k == 3) word = commutator(x(0), x(1));
  if (k == 4) word = commutator(commutator(x(0), x(1)), x(2));
  return {k, free_reduce(word)};
}

std::vector<int> endpoint_pairing(const Fragment& f) {
  std::vector<int> pairing(2 * f.fingers);
  for (int start = 0; start < 2 * f.fingers; ++start) {
    int pos = start;
    for (const BraidLetter& l : f.word) {
      if (pos == l.position)
        pos = l.position + 1;
      else if (pos == l.position + 1)
        pos = l.position;
    }
    pos ^= 1;
    for (auto it = f.word.rbegin(); it != f.word.rend(); ++it) {
      if (pos == it->position)
        pos = it->position + 1;
      else if (pos == it->position + 1)
        pos = it->position;
    }
    pairing[start] = pos;
  }
  return pairing;
}

namespace {

std::vector<Site> closure_sites(int k) {
  std::vector<Site> sites;
  for (int f = 0; f < k; ++f) sites.push_back({0, f, Side::Right});
  return sites;
}

}  // namespace

SurgeryResult closure_of(const Fragment& f) {
  Surgery s;
  s.placements.push_back({f, closure_sites(f.fingers)});
  return perform_surgery(Diagram{}, s);
}

Diagram delete_strand(const Fragment& f, int finger) {
  if (finger < 0 || finger >= f.fingers) throw std::out_of_range("delete_strand: no such finger");
  const SurgeryResult r = closure_of(f);
  std::vector<int> doomed;
  for (std::size_t c = 0; c < r.origin.size(); ++c)
    if (r.origin[c].fingers[0] == finger || r.origin[c].fingers[1] == finger) doomed.push_back(static_cast<int>(c));
  return delete_crossings(r.diagram, doomed);
}

Tangle MoveTemplate::tangle_before() const {
  Fragment trivial{k, {}};
  return {closure_of(trivial).diagram, endpoint_pairing(trivial)};
}

Tangle MoveTemplate::tangle_after() const { return {closure_of(fragment).diagram, endpoint_pairing(fragment)}; }

Script reduction_script(const std::vector<ReidemeisterMove>& trace) {
  Script s;
  for (const ReidemeisterMove& m : trace) s.steps.push_back({std::nullopt, m});
  return s;
}

BrunnianCertificate certify_strand(const MoveTemplate& t, int strand) {
  BrunnianCertificate c{strand, delete_strand(t.fragment, strand), {}};
  const SimplifyResult r = simplify_with_trace(c.start);
  if (r.diagram.crossing_count() != 0)
    throw std::logic_error(t.name + ": deleting strand " + std::to_string(strand) + " does not simplify to the circle");
  c.reduction = reduction_script(r.trace);
  return c;
}

bool check_certificate(const MoveTemplate& t, const BrunnianCertificate& c) {
  try {
    if (!(delete_strand(t.fragment, c.strand) == c.start)) return false;
    return run_script(c.start, c.reduction).crossing_count() == 0;
  } catch (const KnotlabError&) {
    return false;
  }
}

bool validate_template(const MoveTemplate& t) {
  if (t.fragment.fingers != t.k) return false;
  if (t.tangle_before().pairing != t.tangle_after().pairing) return false;
  if (static_cast<int>(t.certificates.size()) != t.k) return false;
  std::vector<bool> covered(t.k, false);
  for (const auto& c : t.certificates) {
    if (c.strand < 0 || c.strand >= t.k || !check_certificate(t, c)) return false;
    covered[c.strand] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

const std::map<int, MoveTemplate>& builtin_templates() {
  static const std::map<int, MoveTemplate> templates = [] {
    std::map<int, MoveTemplate> out;
    const char* names[] = {"", "", "crossing-change", "delta", "clasp-pass"};
    for (int k = 2; k <= 4; ++k) {
      MoveTemplate t{k, names[k], builtin_fragment(k), {}};
      for (int s = 0; s < k; ++s) t.certificates.push_back(certify_strand(t, s));
      if (!validate_template(t)) throw std::logic_error("built-in template " + t.name + " failed validation");
      out.emplace(k, std::move(t));
    }
    return out;
  }();
  return templates;
}

const MoveTemplate& builtin_template(int k) {
  const auto& all = builtin_templates();
  auto it = all.find(k);
  if (it == all.end()) throw std::out_of_range("no built-in template of order " + std::to_string(k));
  return it->second;
}

// ---------------------------------------------------------------------------
// Sites and chords

int offsets_per_edge(const Diagram& d) { return d.crossing_count() == 0 ? kOffsetsOnCircle : kOffsetsPerEdge; }

namespace {

std::vector<Triangle> cyclic_triangles(const Diagram& d) {
  std::vector<Triangle> out;
  for (const Triangle& t : triangles(d))
    if (!t.r3) out.push_back(t);
  return out;
}

std::vector<Site> face_slots(const Face& face, int offsets) {
  std::vector<Site> slots;
  for (const FaceEdge& fe : face)
    for (int o = 0; o < offsets; ++o) slots.push_back({fe.edge, o, fe.along ? Side::Right : Side::Left});
  return slots;
}

bool slots_distinct(const std::vector<Site>& sites) {
  std::set<std::pair<int, int>> seen;
  for (const Site& s : sites)
    if (!seen.insert({s.edge, s.offset}).second) return false;
  return true;
}

std::array<int, 3> triangle_crossings(const Diagram& d, const std::array<int, 3>& edges) {
  const auto& ps = d.gauss_code().passages;
  const int m = static_cast<int>(ps.size());
  std::set<int> cs;
  for (int e : edges) {
    cs.insert(ps[(e - 1 + m) % m].crossing);
    cs.insert(ps[e].crossing);
  }
  if (cs.size() != 3) throw InvalidSite("triangle edges do not bound a triangle");
  std::array<int, 3> out{};
  std::copy(cs.begin(), cs.end(), out.begin());
  return out;
}

}  // namespace

std::vector<Chord> enumerate_sites(const Diagram& d, int k, std::size_t limit) {
  if (k < 2 || k > 4) throw std::invalid_argument("enumerate_sites: k must be 2, 3 or 4");
  std::vector<Chord> out;
  if (k == 2)
    for (int c = 0; c < d.crossing_count() && out.size() < limit; ++c) out.push_back({2, ChordForm::Switch, c, {}, {}, false});
  if (k == 3)
    for (const Triangle& t : cyclic_triangles(d)) {
      if (out.size() >= limit) break;
      out.push_back({3, ChordForm::Triangle, -1, t.edges, {}, false});
    }

  const int offsets = offsets_per_edge(d);
  for (const Face& face : d.faces()) {
    const std::vector<Site> slots = face_slots(face, offsets);
    const int s = static_cast<int>(slots.size());
    if (s < k) continue;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (out.size() >= limit) return out;
      std::vector<Site> pick;
      for (int i : idx) pick.push_back(slots[i]);
      if (slots_distinct(pick)) out.push_back({k, ChordForm::Fingers, -1, {}, std::move(pick), false});
      int i = k - 1;
      while (i >= 0 && idx[i] == s - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::optional<Chord> sample_chord(const Diagram& d, int k, std::mt19937_64& rng, double local_form_weight) {
  if (k < 2 || k > 4) throw std::invalid_argument("sample_chord: k must be 2, 3 or 4");
  std::bernoulli_distribution local(local_form_weight);
  if (k == 2 && d.crossing_count() > 0 && local(rng)) {
    std::uniform_int_distribution<int> pick(0, d.crossing_count() - 1);
    return Chord{2, ChordForm::Switch, pick(rng), {}, {}, false};
  }
  if (k == 3 && d.crossing_count() > 0 && local(rng)) {
    const auto tris = cyclic_triangles(d);
    if (!tris.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, tris.size() - 1);
      return Chord{3, ChordForm::Triangle, -1, tris[pick(rng)].edges, {}, false};
    }
  }

  const auto faces = d.faces();
  const int offsets = offsets_per_edge(d);
  std::vector<std::vector<Site>> usable;
  for (const Face& f : faces) {
    auto slots = face_slots(f, offsets);
    std::set<std::pair<int, int>> distinct;
    for (const Site& s : slots) distinct.insert({s.edge, s.offset});
    if (static_cast<int>(distinct.size()) >= k) usable.push_back(std::move(slots));
  }
  if (usable.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick_face(0, usable.size() - 1);
  const auto& slots = usable[pick_face(rng)];
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Site> pick;
    std::sample(slots.begin(), slots.end(), std::back_inserter(pick), k, rng);
    if (!slots_distinct(pick)) continue;
    std::shuffle(pick.begin(), pick.end(), rng);
    return Chord{k, ChordForm::Fingers, -1, {}, std::move(pick), std::bernoulli_distribution(0.5)(rng)};
  }
  return std::nullopt;
}

bool site_disjoint(const Diagram& d, const Chord& a, const Chord& b) {
  auto crossings_of = [&](const Chord& c) {
    std::set<int> out;
    if (c.form == ChordForm::Switch) out.insert(c.crossing);
    if (c.form == ChordForm::Triangle)
      for (int x : triangle_crossings(d, c.triangle)) out.insert(x);
    return out;
  };
  auto edges_of = [](const Chord& c) {
    std::set<int> out;
    if (c.form == ChordForm::Triangle) out.insert(c.triangle.begin(), c.triangle.end());
    return out;
  };
  auto slots_of = [](const Chord& c) {
    std::set<std::pair<int, int>> out;
    for (const Site& s : c.sites) out.insert({s.edge, s.offset});
    return out;
  };
  const auto ca = crossings_of(a), cb = crossings_of(b);
  for (int x : ca)
    if (cb.count(x)) return false;
  const auto ea = edges_of(a), eb = edges_of(b);
  for (int e : ea)
    if (eb.count(e)) return false;
  for (const auto& s : slots_of(a))
    if (eb.count(s.first)) return false;
  for (const auto& s : slots_of(b))
    if (ea.count(s.first)) return false;
  const auto sa = slots_of(a), sb = slots_of(b);
  for (const auto& s : sa)
    if (sb.count(s)) return false;
  return true;
}

Surgery surgery_for(const Diagram& d, const std::vector<Chord>& chords) {
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      if (!site_disjoint(d, chords[i], chords[j])) throw InvalidSite("chords overlap");

  Surgery s;
  for (const Chord& c : chords) {
    switch (c.form) {
      case ChordForm::Switch:
        if (c.order != 2) throw InvalidSite("switch chords have order 2");
        if (c.crossing < 0 || c.crossing >= d.crossing_count()) throw InvalidSite("switch crossing out of range");
        s.switches.push_back(c.crossing);
        break;
      case ChordForm::Triangle: {
        if (c.order != 3) throw InvalidSite("triangle chords have order 3");
        std::array<int, 3> want = c.triangle;
        std::sort(want.begin(), want.end());
        bool found = false;
        for (const Triangle& t : cyclic_triangles(d)) {
          std::array<int, 3> have = t.edges;
          std::sort(have.begin(), have.end());
          found = found || have == want;
        }
        if (!found) throw InvalidSite("edges do not bound a cyclic triangle");
        s.flips.push_back(c.triangle);
        break;
      }
      case ChordForm::Fingers: {
        if (static_cast<int>(c.sites.size()) != c.order) throw InvalidSite("finger chord needs one site per finger");
        for (const Site& site : c.sites)
          if (site.offset < 0) throw InvalidSite("negative site offset");
        const Fragment& f = builtin_template(c.order).fragment;
        s.placements.push_back({c.mirror ? f.mirrored() : f, c.sites});
        break;
      }
    }
  }
  return s;
}

SurgeryResult apply_chord_with_origin(const Diagram& d, const Chord& c) { return perform_surgery(d, surgery_for(d, {c})); }

Diagram apply_chord(const Diagram& d, const Chord& c) { return apply_chord_with_origin(d, c).diagram; }

SurgeryResult band_sum_with_origin(const Diagram& d, const std::vector<Chord>& chords) {
  return perform_surgery(d, surgery_for(d, chords));
}

Diagram band_sum(const Diagram& d, const std::vector<Chord>& chords) { return band_sum_with_origin(d, chords).diagram; }

Chord translate_chord(const Chord& c, const SurgeryResult& r) {
  Chord out = c;
  switch (c.form) {
    case ChordForm::Switch: out.crossing = r.translate_crossing(c.crossing); break;
    case ChordForm::Triangle:
      for (int& e : out.triangle) e = r.translate_edge(e);
      break;
    case ChordForm::Fingers:
      for (Site& s : out.sites) s = r.translate_site(s);
      break;
  }
  return out;
}

Diagram revert_chord(const SurgeryResult& applied, const Chord& c) {
  switch (c.form) {
    case ChordForm::Switch: return switch_crossing(applied.diagram, applied.translate_crossing(c.crossing));
    case ChordForm::Triangle: {
      Surgery s;
      std::array<int, 3> edges{};
      for (int i = 0; i < 3; ++i) edges[i] = applied.translate_edge(c.triangle[i]);
      s.flips.push_back(edges);
      return perform_surgery(applied.diagram, s).diagram;
    }
    case ChordForm::Fingers: {
      std::vector<int> doomed;
      for (std::size_t x = 0; x < applied.origin.size(); ++x)
        if (applied.origin[x].placement == 0) doomed.push_back(static_cast<int>(x));
      return delete_crossings(applied.diagram, doomed);
    }
  }
  return applied.diagram;
}

Diagram run_script(const Diagram& start, const Script& s) {
  Diagram d = start;
  for (const ScriptStep& step : s.steps) {
    if (step.chord) d = apply_chord(d, *step.chord);
    if (step.move) d = reidemeister(d, *step.move);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Singular families

std::vector<int> SingularFamily::orders() const {
  std::vector<int> out;
  for (const Chord& c : chords) out.push_back(c.order);
  return out;
}

namespace {

std::vector<Chord> subset(const std::vector<Chord>& chords, std::uint32_t mask) {
  std::vector<Chord> out;
  for (std::size_t i = 0; i < chords.size(); ++i)
    if (mask & (1u << i)) out.push_back(chords[i]);
  return out;
}

struct HostPassage {
  int crossing;
  bool over;
  friend bool operator==(const HostPassage&, const HostPassage&) = default;
};

struct FragmentPassage {
  int letter;
  bool over;
  int host_position;
  int sign;
  friend bool operator==(const FragmentPassage&, const FragmentPassage&) = default;
};

struct MemberView {
  std::vector<HostPassage> host;
  std::map<int, int> host_sign;
  std::map<int, std::vector<FragmentPassage>> fragments;  // by chord index
};

MemberView view_of(const SurgeryResult& r, const std::vector<Chord>& chords, std::uint32_t mask) {
  std::vector<int> placement_owner;
  for (std::size_t i = 0; i < chords.size(); ++i)
    if ((mask & (1u << i)) && chords[i].form == ChordForm::Fingers) placement_owner.push_back(static_cast<int>(i));

  MemberView v;
  for (const Passage& p : r.diagram.gauss_code().passages) {
    const CrossingOrigin& o = r.origin[p.crossing];
    const int sign = r.diagram.sign(p.crossing);
    if (o.placement < 0) {
      v.host.push_back({o.index, p.over});
      v.host_sign[o.index] = sign;
    } else {
      v.fragments[placement_owner.at(o.placement)].push_back({o.index, p.over, static_cast<int>(v.host.size()), sign});
    }
  }
  return v;
}

}  // namespace

std::vector<SurgeryResult> family_with_origin(const SingularFamily& f) {
  if (f.chords.size() > 20) throw LimitExceeded("family: too many chords");
  std::vector<SurgeryResult> out;
  const std::uint32_t count = 1u << f.chords.size();
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) out.push_back(band_sum_with_origin(f.base, subset(f.chords, mask)));
  return out;
}

std::vector<Diagram> family(const SingularFamily& f) {
  std::vector<Diagram> out;
  for (auto& r : family_with_origin(f)) out.push_back(std::move(r.diagram));
  return out;
}

bool check_family_conditions(const SingularFamily& f, const std::vector<SurgeryResult>& members) {
  const std::size_t l = f.chords.size();
  const std::uint32_t full_mask = (1u << l) - 1;
  if (members.size() != (std::size_t{1} << l)) return false;
  if (!(members[0].diagram == f.base)) return false;

  const MemberView base = view_of(members[0], f.chords, 0);
  const MemberView full = view_of(members[full_mask], f.chords, full_mask);
  if (base.host.size() != full.host.size()) return false;

  // Which chord owns each host passage position and each host crossing.
  const int m = static_cast<int>(base.host.size());
  std::vector<int> position_owner(m, -1);
  std::map<int, int> crossing_owner;
  for (std::size_t i = 0; i < l; ++i) {
    const Chord& c = f.chords[i];
    if (c.form == ChordForm::Switch) crossing_owner[c.crossing] = static_cast<int>(i);
    if (c.form == ChordForm::Triangle) {
      for (int e : c.triangle) {
        position_owner[(e - 1 + m) % m] = static_cast<int>(i);
        position_owner[e] = static_cast<int>(i);
      }
      for (int x : triangle_crossings(f.base, c.triangle)) crossing_owner[x] = static_cast<int>(i);
    }
  }

  for (std::uint32_t mask = 0; mask <= full_mask; ++mask) {
    const MemberView v = view_of(members[mask], f.chords, mask);
    if (v.host.size() != base.host.size()) return false;
    auto pick = [&](int owner) -> const MemberView& {
      return owner >= 0 && (mask & (1u << owner)) ? full : base;
    };
    for (int t = 0; t < m; ++t) {
      int owner = position_owner[t];
      if (owner < 0) {
        auto it = crossing_owner.find(base.host[t].crossing);
        if (it != crossing_owner.end()) owner = it->second;
      }
      if (!(v.host[t] == pick(owner).host[t])) return false;
    }
    for (const auto& [h, sign] : v.host_sign) {
      auto it = crossing_owner.find(h);
      const int owner = it == crossing_owner.end() ? -1 : it->second;
      if (pick(owner).host_sign.at(h) != sign) return false;
    }
    for (std::size_t i = 0; i < l; ++i) {
      if (f.chords[i].form != ChordForm::Fingers) continue;
      const bool present = v.fragments.count(static_cast<int>(i)) > 0;
      if (present != static_cast<bool>(mask & (1u << i))) return false;
      if (present && v.fragments.at(static_cast<int>(i)) != full.fragments.at(static_cast<int>(i))) return false;
    }
  }
  return true;
}

std::optional<SingularFamily> random_family(const Diagram& base, const std::vector<int>& orders, std::mt19937_64& rng,
                                            int attempts) {
  for (int a = 0; a < attempts; ++a) {
    std::vector<Chord> chords;
    bool ok = true;
    for (int k : orders) {
      bool placed = false;
      for (int tries = 0; tries < 50 && !placed; ++tries) {
        std::optional<Chord> c = sample_chord(base, k, rng);
        if (!c) continue;
        if (std::all_of(chords.begin(), chords.end(), [&](const Chord& o) { return site_disjoint(base, o, *c); })) {
          chords.push_back(*c);
          placed = true;
        }
      }
      if (!placed) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    try {
      band_sum_with_origin(base, chords);
    } catch (const InvalidSite&) {
      continue;
    }
    return SingularFamily{base, std::move(chords)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Realising a template by lower-order moves

namespace {

std::optional<LowerCertificate> by_switches(const Diagram& start, std::int64_t budget) {
  const int n = start.crossing_count();
  std::unordered_set<std::string> seen;
  std::int64_t states = 0;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      if (++states > budget) return std::nullopt;
      Diagram d = start;
      for (int c : idx) d = switch_crossing(d, c);
      if (seen.insert(canonical_key(d)).second) {
        const SimplifyResult r = simplify_with_trace(d);
        if (r.diagram.crossing_count() == 0) {
          LowerCertificate cert{2, start, {}, canonical_key(Diagram{}), states};
          for (int c : idx) cert.script.steps.push_back({Chord{2, ChordForm::Switch, c, {}, {}, false}, std::nullopt});
          for (const auto& mv : r.trace) cert.script.steps.push_back({std::nullopt, mv});
          return cert;
        }
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<LowerCertificate> by_deltas(const Diagram& start, std::int64_t budget) {
  struct Node {
    Diagram d;
    int parent;
    std::vector<ScriptStep> steps;
    int depth;
  };
  std::vector<Node> nodes;
  using Entry = std::tuple<int, int, int>;  // crossings, depth, node
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::unordered_set<std::string> seen;

  auto push = [&](Diagram d, int parent, std::vector<ScriptStep> steps) {
    const SimplifyResult r = reduce(d);
    for (const auto& mv : r.trace) steps.push_back({std::nullopt, mv});
    if (!seen.insert(canonical_key(r.diagram)).second) return -1;
    const int depth = parent < 0 ? 0 : nodes[parent].depth + 1;
    nodes.push_back({r.diagram, parent, std::move(steps), depth});
    const int id = static_cast<int>(nodes.size()) - 1;
    frontier.emplace(nodes[id].d.crossing_count(), depth, id);
    return id;
  };

  push(start, -1, {});
  std::int64_t states = 0;
  while (!frontier.empty()) {
    const int id = std::get<2>(frontier.top());
    frontier.pop();
    if (nodes[id].d.crossing_count() == 0) {
      LowerCertificate cert{3, start, {}, canonical_key(Diagram{}), states};
      std::vector<int> chain;
      for (int x = id; x >= 0; x = nodes[x].parent) chain.push_back(x);
      for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        for (const auto& s : nodes[*it].steps) cert.script.steps.push_back(s);
      return cert;
    }
    if (++states > budget) return std::nullopt;
    const Diagram d = nodes[id].d;
    for (const Triangle& t : cyclic_triangles(d)) {
      const Chord c{3, ChordForm::Triangle, -1, t.edges, {}, false};
      push(apply_chord(d, c), id, {{c, std::nullopt}});
    }
    for (const ReidemeisterMove& mv : r3_moves(d)) push(reidemeister(d, mv), id, {{std::nullopt, mv}});
  }
  return std::nullopt;
}

}  // namespace

std::optional<LowerCertificate> realize_by_lower(const MoveTemplate& t, int l, std::int64_t budget) {
  if (l < 2 || l > t.k) throw std::invalid_argument("realize_by_lower: need 2 <= l <= k");
  if (l == t.k) {
    const Chord c{t.k, ChordForm::Fingers, -1, {}, closure_sites(t.k), false};
    LowerCertificate cert{l, t.tangle_before().closure, {}, canonical_key(t.tangle_after().closure), 1};
    cert.script.steps.push_back({c, std::nullopt});
    return cert;
  }
  const Diagram start = t.tangle_after().closure;
  if (l == 2) return by_switches(start, budget);
  if (l == 3) return by_deltas(start, budget);
  return std::nullopt;
}

bool check_lower_certificate(const LowerCertificate& c) {
  for (const ScriptStep& s : c.script.steps)
    if (s.chord && s.chord->order != c.order) return false;
  try {
    return canonical_key(run_script(c.start, c.script)) == c.target_key;
  } catch (const KnotlabError&) {
    return false;
  }
}
}  // namespace knotlab
