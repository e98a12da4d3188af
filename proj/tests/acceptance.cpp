#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "knotlab/corpus.hpp"
#include "knotlab/finite_type.hpp"
#include "knotlab/invariants.hpp"
#include "knotlab/moves.hpp"
#include "knotlab/reidemeister.hpp"
#include "knotlab/search.hpp"

using namespace knotlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<CorpusEntry> knotted_up_to(int n) {
  std::vector<CorpusEntry> out;
  for (const auto& e : corpus_up_to(n))
    if (!e.diagram.is_unknot_diagram()) out.push_back(e);
  return out;
}

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// v2 from the Gauss-diagram count against the z^2 coefficient of Conway, tolerance 0.
Outcome cross_validation() {
  const auto knots = corpus_up_to(9);
  int mismatches = 0;
  for (const auto& e : knots) mismatches += v2(e.diagram) != conway(e.diagram).coefficient(2);
  const int n = static_cast<int>(knots.size());
  return {n >= 20 && mismatches == 0, fmt("%d knots, %d mismatches", n, mismatches)};
}

Outcome type_report(Invariant phi, const std::vector<int>& orders, int trials, std::uint64_t seed) {
  const TypeReport r = verify_type(phi, orders, trials, seed, builtin_corpus());
  int conditions = 0;
  for (const auto& t : r.trials) conditions += t.constructed && !t.conditions_hold;
  const bool pass = r.expect_zero && r.constructed() == trials && r.nonzero() == 0 && conditions == 0;
  return {pass, fmt("%s: %d/%d families, %d nonzero sums, %d condition failures", to_string(phi), r.constructed(),
                    trials, r.nonzero(), conditions)};
}

Outcome finite_type_condition() {
  const Outcome a = type_report(Invariant::V2, {2, 2, 2}, 200, 11);
  const Outcome b = type_report(Invariant::V3, {2, 2, 2, 2}, 100, 12);
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Outcome projection_type() { return type_report(Invariant::V2, {3, 2}, 100, 13); }

Outcome necessity() {
  const auto bases = knotted_up_to(9);
  int applied = 0, changed = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    const NecessityReport r = necessity_walk(bases[i % bases.size()], 3, 10, derive_seed(14, i));
    applied += static_cast<int>(r.steps.size());
    for (const auto& s : r.steps) changed += s.v2_after != s.v2_before;
  }
  int witnessed = -1;
  for (std::size_t i = 0; i < bases.size() && witnessed < 0; ++i) {
    const NecessityReport r = necessity_walk(bases[i], 2, 10, derive_seed(15, i));
    if (r.witness) {
      const auto& s = r.steps[*r.witness];
      if (std::llabs(s.v2_after - s.v2_before) == 1) witnessed = static_cast<int>(i);
    }
  }
  return {applied >= 100 && changed == 0 && witnessed >= 0,
          fmt("%d clasp-pass steps, %d changed v2; delta witness on %s", applied, changed,
              witnessed >= 0 ? bases[witnessed].name.c_str() : "none")};
}

Outcome sharpness() {
  const auto w = sharpness_witness(builtin_corpus(), 16);
  if (!w) return {false, "no type-(2,2) family with nonzero v2 sum found"};
  const std::int64_t recomputed = alternating_sum(w->family, Invariant::V2);
  const bool pass = w->family.orders() == std::vector<int>{2, 2} && recomputed == w->sum && recomputed != 0;
  return {pass, fmt("base %s, v2 alternating sum %lld", w->base.c_str(), static_cast<long long>(recomputed))};
}

struct Values {
  LaurentPolynomial jones, conway;
  std::int64_t v2 = 0, v3 = 0;
  friend bool operator==(const Values&, const Values&) = default;
};
Values values_of(const Diagram& d) { return {jones(d), conway(d), v2(d), v3(d)}; }

Outcome invariance() {
  const auto bases = corpus_up_to(8);
  std::mt19937_64 rng(17);
  int moved = 0, changed = 0;
  while (moved < 500) {
    for (const auto& b : bases) {
      Diagram d = b.diagram;
      const Values ref = values_of(d);
      for (int i = 0; i < 5 && moved < 500; ++i) {
        auto mv = random_move(d, rng, b.diagram.crossing_count() + 6);
        if (!mv) continue;
        d = reidemeister(d, *mv);
        ++moved;
        changed += !(values_of(d) == ref);
      }
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
  int sum_failures = 0;
  for (int i = 0; i < 50; ++i) {
    const Diagram& a = bases[pick(rng)].diagram;
    const Diagram& b = bases[pick(rng)].diagram;
    const Diagram ab = connected_sum(a, b);
    sum_failures += !(v2(ab) == v2(a) + v2(b) && v3(ab) == v3(a) + v3(b) && jones(ab) == jones(a) * jones(b));
  }
  int mirror_failures = 0;
  for (const auto& e : builtin_corpus()) {
    const Diagram m = mirror(e.diagram);
    mirror_failures += !(v2(m) == v2(e.diagram) && v3(m) == -v3(e.diagram));
  }
  return {changed == 0 && sum_failures == 0 && mirror_failures == 0,
          fmt("%d moves with %d changes; 50 sums with %d failures; %d mirror failures", moved, changed, sum_failures,
              mirror_failures)};
}

Outcome constructive() {
  const SearchResult path = bfs_path(corpus_entry("3_1").diagram, Diagram{}, {2});
  int chords = 0;
  for (const auto& s : path.script.steps) chords += s.chord.has_value();
  const bool path_ok = path.found && chords == 1 && check_path(path, {2}) &&
                       path.target_key == canonical_key(Diagram{});

  const auto bases = knotted_up_to(7);
  int solved = 0, replayed = 0;
  for (const auto& b : bases) {
    const SearchResult r = delta_unknot(b.diagram);
    solved += r.found;
    replayed += r.found && check_path(r, {3}) && r.target_key == canonical_key(Diagram{});
  }
  const int n = static_cast<int>(bases.size());
  const bool delta_ok = replayed == solved && 5 * solved >= 4 * n;
  return {path_ok && delta_ok, fmt("trefoil path %s with %d chord; delta unknotting %d/%d (%d exhausted budget)",
                                   path.found ? "found" : "not found", chords, solved, n, n - solved)};
}

Outcome certificates() {
  int checked = 0, bad = 0;
  for (const auto& [k, t] : builtin_templates()) {
    bad += !validate_template(t);
    for (const auto& c : t.certificates) {
      ++checked;
      bad += !check_certificate(t, c);
    }
  }
  const auto lower = realize_by_lower(builtin_template(3), 2);
  const bool lower_ok = lower && check_lower_certificate(*lower);
  return {bad == 0 && checked > 0 && lower_ok,
          fmt("%d strand certificates, %d failed; delta by crossing changes %s", checked, bad,
              lower_ok ? "replayed" : "failed")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"v2 equals the Conway z^2 coefficient", cross_validation},
      {"type-(2,2,2) v2 and type-(2,2,2,2) v3 sums vanish", finite_type_condition},
      {"type-(3,2) v2 sums vanish", projection_type},
      {"clasp-pass moves preserve v2, delta moves can change it", necessity},
      {"a type-(2,2) family has a nonzero v2 sum", sharpness},
      {"invariance, connected sum and mirror behaviour", invariance},
      {"trefoil path and delta unknotting", constructive},
      {"certificates replay", certificates},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s (%s) [%.2f s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
