#include "knotlab/finite_type.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "knotlab/invariants.hpp"

namespace knotlab {

const char* to_string(Invariant i) { return i == Invariant::V2 ? "v2" : "v3"; }

Invariant invariant_from_string(const std::string& s) {
  if (s == "v2") return Invariant::V2;
  if (s == "v3") return Invariant::V3;
  throw ParseError("unknown invariant '" + s + "' (expected v2 or v3)");
}

std::int64_t evaluate(Invariant i, const Diagram& d) { return i == Invariant::V2 ? v2(d) : v3(d); }

int invariant_order(Invariant i) { return i == Invariant::V2 ? 2 : 3; }

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t alternating_sum(const std::vector<Diagram>& members, Invariant phi) {
  std::int64_t sum = 0;
  for (std::size_t p = 0; p < members.size(); ++p) {
    const std::int64_t value = evaluate(phi, members[p]);
    sum += (std::popcount(p) % 2 == 0) ? value : -value;
  }
  return sum;
}

std::int64_t alternating_sum(const SingularFamily& f, Invariant phi) { return alternating_sum(family(f), phi); }

int TypeReport::constructed() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const TypeTrial& t) { return t.constructed; }));
}

int TypeReport::nonzero() const {
  return static_cast<int>(
      std::count_if(trials.begin(), trials.end(), [](const TypeTrial& t) { return t.constructed && t.sum != 0; }));
}

bool TypeReport::passed() const {
  for (const TypeTrial& t : trials) {
    if (!t.constructed) continue;
    if (!t.conditions_hold) return false;
    if (expect_zero && t.sum != 0) return false;
  }
  return true;
}

TypeReport verify_type(Invariant phi, const std::vector<int>& orders, int trials, std::uint64_t seed,
                       const std::vector<CorpusEntry>& bases) {
  if (bases.empty()) throw std::invalid_argument("verify_type: empty base corpus");
  for (int k : orders)
    if (k < 2 || k > 4) throw std::invalid_argument("verify_type: orders must lie in {2, 3, 4}");
  TypeReport report;
  report.phi = phi;
  report.orders = orders;
  report.seed = seed;
  int weight = 0;
  for (int k : orders) weight += k - 1;
  report.expect_zero = weight >= invariant_order(phi) + 1;

  for (int i = 0; i < trials; ++i) {
    TypeTrial t;
    t.trial = i;
    t.seed = derive_seed(seed, static_cast<std::uint64_t>(i));
    const CorpusEntry& base = bases[static_cast<std::size_t>(i) % bases.size()];
    t.base = base.name;
    std::mt19937_64 rng(t.seed);
    try {
      const auto fam = random_family(base.diagram, orders, rng);
      if (!fam) {
        t.error = "site exhaustion";
      } else {
        t.chords = fam->chords;
        const auto members = family_with_origin(*fam);
        std::vector<Diagram> ds;
        for (const auto& m : members) ds.push_back(m.diagram);
        t.sum = alternating_sum(ds, phi);
        t.conditions_hold = check_family_conditions(*fam, members);
        t.constructed = true;
      }
    } catch (const KnotlabError& e) {
      t.error = e.what();
    }
    report.trials.push_back(std::move(t));
  }
  return report;
}

NecessityReport necessity_walk(const CorpusEntry& base, int l, int n_moves, std::uint64_t seed) {
  if (l != 2 && l != 3) throw std::invalid_argument("necessity: l must be 2 or 3");
  NecessityReport r;
  r.l = l;
  r.base = base.name;
  r.seed = seed;
  std::mt19937_64 rng(seed);
  Diagram d = base.diagram;
  std::int64_t current = v2(d);
  int applied = 0;
  while (applied < n_moves) {
    if (r.failures > 10 * n_moves + 100) break;
    std::optional<Chord> c = sample_chord(d, l + 1, rng);
    if (!c) {
      ++r.failures;
      continue;
    }
    Diagram next;
    try {
      next = reduce(apply_chord(d, *c)).diagram;
    } catch (const InvalidSite&) {
      ++r.failures;
      continue;
    }
    NecessityStep step{*c, next.crossing_count(), current, v2(next)};
    if (l == 3 && step.v2_after != step.v2_before) r.constant = false;
    if (l == 2 && !r.witness && std::llabs(step.v2_after - step.v2_before) == 1)
      r.witness = static_cast<int>(r.steps.size());
    current = step.v2_after;
    d = std::move(next);
    r.steps.push_back(std::move(step));
    ++applied;
  }
  return r;
}

bool GroupReport::passed() const {
  if (!identity_holds || associativity_failures != 0) return false;
  return std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.additive && p.commutative; });
}

namespace {

using Tuple = std::pair<std::int64_t, std::int64_t>;

Tuple tuple_of(const Diagram& d) { return {v2(d), v3(d)}; }

Tuple operator+(Tuple a, Tuple b) { return {a.first + b.first, a.second + b.second}; }

}  // namespace

GroupReport group_checks(const std::vector<CorpusEntry>& corpus, int pairs, std::uint64_t seed) {
  if (corpus.empty()) throw std::invalid_argument("group_checks: empty corpus");
  GroupReport r;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, corpus.size() - 1);

  for (int i = 0; i < pairs; ++i) {
    const CorpusEntry& a = corpus[pick(rng)];
    const CorpusEntry& b = corpus[pick(rng)];
    const Tuple ab = tuple_of(connected_sum(a.diagram, b.diagram));
    const Tuple ba = tuple_of(connected_sum(b.diagram, a.diagram));
    r.pairs.push_back({a.name, b.name, ab == tuple_of(a.diagram) + tuple_of(b.diagram), ab == ba});
  }
  for (int i = 0; i < std::max(1, pairs / 2); ++i) {
    const Diagram& a = corpus[pick(rng)].diagram;
    const Diagram& b = corpus[pick(rng)].diagram;
    const Diagram& c = corpus[pick(rng)].diagram;
    ++r.associativity_checked;
    if (tuple_of(connected_sum(connected_sum(a, b), c)) != tuple_of(connected_sum(a, connected_sum(b, c))))
      ++r.associativity_failures;
  }
  for (const auto& k : corpus)
    if (tuple_of(connected_sum(Diagram{}, k.diagram)) != tuple_of(k.diagram)) r.identity_holds = false;

  std::vector<std::pair<std::string, Diagram>> pool;
  for (const auto& j : corpus) {
    pool.emplace_back(j.name, j.diagram);
    pool.emplace_back(j.name + "*", mirror(j.diagram));
  }
  for (const auto& k : corpus)
    for (const auto& [name, j] : pool)
      if (tuple_of(connected_sum(k.diagram, j)) == Tuple{0, 0}) r.inverses.push_back({k.name, name});
  return r;
}

std::optional<SharpnessWitness> sharpness_witness(const std::vector<CorpusEntry>& bases, std::uint64_t seed,
                                                  int max_trials) {
  for (int i = 0; i < max_trials; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    const CorpusEntry& base = bases[static_cast<std::size_t>(i) % bases.size()];
    std::mt19937_64 rng(s);
    auto fam = random_family(base.diagram, {2, 2}, rng);
    if (!fam) continue;
    const std::int64_t sum = alternating_sum(*fam, Invariant::V2);
    if (sum != 0) return SharpnessWitness{base.name, s, std::move(*fam), sum};
  }
  return std::nullopt;
}

}  // namespace knotlab
