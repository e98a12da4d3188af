#include "workbench.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <set>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "knotlab/codes.hpp"
#include "knotlab/corpus.hpp"
#include "knotlab/version.hpp"

namespace knotlab::workbench {

// ---------------------------------------------------------------------------
// Cache

InvariantCache::InvariantCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(file_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      const json& record = j.at("record");
      if (j.at("checksum").get<std::string>() != hex64(fnv1a(record.dump()))) {
        ++corrupt_;
        continue;
      }
      entries_.try_emplace(j.at("key").get<std::string>(), record);
    } catch (const std::exception&) {
      ++corrupt_;
    }
  }
}

std::optional<json> InvariantCache::get(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return std::optional<json>(std::in_place, it->second);
}

void InvariantCache::put(const std::string& key, const json& record) {
  std::lock_guard lock(mutex_);
  if (!entries_.try_emplace(key, record).second) return;
  if (file_.empty()) return;
  std::ofstream out(file_, std::ios::app);
  out << json{{"key", key}, {"record", record}, {"checksum", hex64(fnv1a(record.dump()))}}.dump() << '\n';
}

std::size_t InvariantCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

// ---------------------------------------------------------------------------
// Output

json header_record(const std::string& command, std::uint64_t seed, const json& config) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return json{{"type", "header"},
              {"tool", "knotlab"},
              {"version", kVersion},
              {"command", command},
              {"seed", seed},
              {"config_hash", hex64(fnv1a(config.dump()))},
              {"timestamp", stamp}};
}

void write_line(std::ostream& out, const json& record) { out << record.dump() << '\n'; }

std::vector<int> parse_orders(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (in >> token) {
    std::istringstream parts(token);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      if (piece.empty()) continue;
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(piece, &used);
      } catch (const std::exception&) {
        throw ParseError("bad order '" + piece + "'");
      }
      if (used != piece.size() || k < 2 || k > 4) throw ParseError("orders must be 2, 3 or 4");
      out.push_back(k);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// invariants

namespace {

bool looks_like_code(const std::string& text) {
  const auto b = text.find_first_not_of(" \t");
  if (b == std::string::npos) return true;
  const char c = text[b];
  return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == 'X' || c == 'P' || c == '[';
}

std::vector<CorpusLine> load_input(const std::string& input) {
  if (input == "builtin") {
    std::vector<CorpusLine> out;
    int line = 0;
    for (const auto& e : builtin_corpus()) out.push_back({++line, e.name, e.code, e.diagram, ""});
    return out;
  }
  if (std::filesystem::is_regular_file(input)) {
    std::ifstream in(input);
    return read_corpus(in);
  }
  if (looks_like_code(input)) {
    std::istringstream in("inline\t" + input);
    return read_corpus(in);
  }
  std::istringstream in(input);
  return read_corpus(in);
}

}  // namespace

int cmd_invariants(const InvariantsOptions& opt, std::ostream& out, std::ostream& err) {
  const std::vector<CorpusLine> lines = load_input(opt.input);
  InvariantCache cache = opt.cache ? InvariantCache(*opt.cache) : InvariantCache();
  if (cache.corrupt_lines() > 0) err << "cache: skipped " << cache.corrupt_lines() << " corrupt line(s)\n";

  std::vector<json> records(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      const CorpusLine& l = lines[i];
      json rec{{"type", "invariants"}, {"line", l.line}, {"name", l.name}};
      if (!l.diagram) {
        rec["type"] = "error";
        rec["error"] = l.error;
        records[i] = rec;
        continue;
      }
      const std::string key = canonical_key(*l.diagram);
      try {
        std::optional<json> body = cache.get(key);
        if (!body) {
          body.emplace(invariant_record(*l.diagram));
          cache.put(key, *body);
        }
        rec.update(*body);
      } catch (const KnotlabError& e) {
        rec["type"] = "error";
        rec["error"] = e.what();
      }
      records[i] = rec;
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(lines.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  write_line(out, header_record("invariants", 0, json{{"input", opt.input}}));
  int successes = 0, failures = 0;
  for (const json& r : records) {
    write_line(out, r);
    (r["type"] == "error" ? failures : successes)++;
  }
  if (failures > 0 && successes == 0) return kUsageError;
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

json default_verify_config() {
  return json{{"suites",
               json::array({
                   {{"kind", "cross_validation"}, {"max_crossings", 9}, {"min_knots", 20}},
                   {{"kind", "verify_type"}, {"invariant", "v2"}, {"orders", {2, 2, 2}}, {"trials", 200}, {"seed", 11}},
                   {{"kind", "verify_type"}, {"invariant", "v3"}, {"orders", {2, 2, 2, 2}}, {"trials", 100}, {"seed", 12}},
                   {{"kind", "verify_type"}, {"invariant", "v2"}, {"orders", {3, 2}}, {"trials", 100}, {"seed", 13}},
                   {{"kind", "necessity"}, {"l", 3}, {"bases", 10}, {"moves_per_base", 10}, {"seed", 14}},
                   {{"kind", "necessity"}, {"l", 2}, {"bases", 5}, {"moves_per_base", 4}, {"seed", 15}},
                   {{"kind", "sharpness"}, {"seed", 16}},
                   {{"kind", "invariance"}, {"perturbations", 500}, {"pairs", 50}, {"seed", 17}},
                   {{"kind", "group_checks"}, {"pairs", 50}, {"seed", 18}},
                   {{"kind", "searches"}, {"max_crossings", 7}, {"budget", kDefaultDeltaBudget}, {"min_success", 0.8}},
                   {{"kind", "certificates"}, {"budget", 100000}},
               })}};
}

namespace {

struct SuiteContext {
  std::ostream& out;
  std::uint64_t seed;
};

template <typename T>
T field(const json& suite, const char* name, T fallback) {
  if (!suite.contains(name)) return fallback;
  try {
    return suite.at(name).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("config field '") + name + "' has the wrong type");
  }
}

std::vector<CorpusEntry> bases_up_to(int max_crossings) { return corpus_up_to(max_crossings); }

bool suite_cross_validation(const json& s, SuiteContext& ctx) {
  const int max_crossings = field(s, "max_crossings", 9);
  const int min_knots = field(s, "min_knots", 20);
  int knots = 0;
  bool ok = true;
  for (const auto& e : bases_up_to(max_crossings)) {
    const std::int64_t gauss = v2(e.diagram);
    const std::int64_t skein = conway(e.diagram).coefficient(2);
    ok = ok && gauss == skein;
    ++knots;
    write_line(ctx.out, {{"type", "cross_validation"}, {"name", e.name}, {"v2_gauss", gauss}, {"conway_z2", skein},
                         {"pass", gauss == skein}});
  }
  return ok && knots >= min_knots;
}

bool suite_verify_type(const json& s, SuiteContext& ctx) {
  const Invariant phi = invariant_from_string(field<std::string>(s, "invariant", "v2"));
  const auto orders = field<std::vector<int>>(s, "orders", {2, 2, 2});
  for (int k : orders)
    if (k < 2 || k > 4) throw ParseError("orders must lie in {2, 3, 4}");
  const int trials = field(s, "trials", 100);
  const auto bases = bases_up_to(field(s, "max_crossings", 7));
  const TypeReport r = verify_type(phi, orders, trials, ctx.seed, bases);
  for (const auto& t : r.trials) write_line(ctx.out, type_trial_record(r, t));
  return r.passed();
}

bool suite_necessity(const json& s, SuiteContext& ctx) {
  const int l = field(s, "l", 3);
  if (l != 2 && l != 3) throw ParseError("necessity: l must be 2 or 3");
  const int count = field(s, "bases", 10);
  const int moves = field(s, "moves_per_base", 10);
  const auto bases = bases_up_to(field(s, "max_crossings", 7));
  bool constant = true, witness = false;
  for (int i = 0; i < count; ++i) {
    const auto& base = bases[static_cast<std::size_t>(i) % bases.size()];
    const NecessityReport r = necessity_walk(base, l, moves, derive_seed(ctx.seed, static_cast<std::uint64_t>(i)));
    write_line(ctx.out, necessity_record(r));
    constant = constant && r.constant;
    witness = witness || r.witness.has_value();
  }
  return l == 3 ? constant : (constant && witness);
}

bool suite_sharpness(const json& s, SuiteContext& ctx) {
  const auto bases = bases_up_to(field(s, "max_crossings", 7));
  const auto w = sharpness_witness(bases, ctx.seed, field(s, "max_trials", 200));
  json rec{{"type", "sharpness"}, {"orders", {2, 2}}, {"invariant", "v2"}, {"found", w.has_value()}};
  if (w) {
    rec["base"] = w->base;
    rec["seed"] = w->seed;
    rec["sum"] = w->sum;
    rec["family"] = w->family;
  }
  rec["pass"] = w.has_value();
  write_line(ctx.out, rec);
  return w.has_value();
}

struct InvariantTuple {
  LaurentPolynomial jones, conway;
  std::int64_t v2 = 0, v3 = 0;
  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

InvariantTuple tuple_of(const Diagram& d) { return {jones(d), conway(d), v2(d), v3(d)}; }

bool suite_invariance(const json& s, SuiteContext& ctx) {
  const int perturbations = field(s, "perturbations", 500);
  const int pairs = field(s, "pairs", 50);
  const auto bases = bases_up_to(field(s, "max_crossings", 8));
  std::mt19937_64 rng(ctx.seed);
  std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);

  int moved = 0, changed = 0;
  for (const auto& b : bases) {
    Diagram d = b.diagram;
    const InvariantTuple ref = tuple_of(d);
    const int per_base = perturbations / static_cast<int>(bases.size()) + 1;
    for (int i = 0; i < per_base && moved < perturbations; ++i) {
      auto mv = random_move(d, rng, b.diagram.crossing_count() + 6);
      if (!mv) continue;
      d = reidemeister(d, *mv);
      ++moved;
      if (!(tuple_of(d) == ref)) ++changed;
    }
  }
  write_line(ctx.out, {{"type", "invariance"}, {"moves", moved}, {"changed", changed}, {"pass", changed == 0}});

  int sum_failures = 0;
  for (int i = 0; i < pairs; ++i) {
    const Diagram& a = bases[pick(rng)].diagram;
    const Diagram& b = bases[pick(rng)].diagram;
    const Diagram ab = connected_sum(a, b);
    const bool additive = v2(ab) == v2(a) + v2(b) && v3(ab) == v3(a) + v3(b);
    const bool multiplicative = ab.crossing_count() > kDefaultBracketLimit || jones(ab) == jones(a) * jones(b);
    sum_failures += !(additive && multiplicative);
  }
  write_line(ctx.out, {{"type", "connected_sum"}, {"pairs", pairs}, {"failures", sum_failures}, {"pass", sum_failures == 0}});

  int mirror_failures = 0;
  for (const auto& e : builtin_corpus()) {
    const Diagram m = mirror(e.diagram);
    mirror_failures += !(v2(m) == v2(e.diagram) && v3(m) == -v3(e.diagram));
  }
  write_line(ctx.out, {{"type", "mirror"}, {"knots", builtin_corpus().size()}, {"failures", mirror_failures},
                       {"pass", mirror_failures == 0}});
  return changed == 0 && sum_failures == 0 && mirror_failures == 0;
}

bool suite_group(const json& s, SuiteContext& ctx) {
  const GroupReport r = group_checks(builtin_corpus(), field(s, "pairs", 50), ctx.seed);
  write_line(ctx.out, group_record(r));
  return r.passed();
}

bool suite_searches(const json& s, SuiteContext& ctx) {
  const std::int64_t budget = field<std::int64_t>(s, "budget", kDefaultDeltaBudget);
  const double min_success = field(s, "min_success", 0.8);

  const SearchResult tref = bfs_path(corpus_entry("3_1").diagram, Diagram{}, {2}, budget);
  std::size_t chords = 0;
  for (const auto& st : tref.script.steps) chords += st.chord.has_value();
  const bool tref_ok = check_path(tref, {2}) && chords == 1;
  write_line(ctx.out, {{"type", "bfs_path"}, {"from", "3_1"}, {"to", "0_1"}, {"moves", {2}}, {"path", tref},
                       {"chords", chords}, {"pass", tref_ok}});

  int attempted = 0, found = 0;
  bool replay_ok = true;
  for (const auto& e : bases_up_to(field(s, "max_crossings", 7))) {
    const SearchResult r = delta_unknot(e.diagram, budget);
    ++attempted;
    found += r.found;
    const bool replay = !r.found || check_path(r, {3});
    replay_ok = replay_ok && replay;
    write_line(ctx.out, {{"type", "delta_unknot"}, {"name", e.name}, {"status", r.found ? "found" : "exhausted"},
                         {"states", r.states}, {"steps", r.script.steps.size()}, {"replays", replay}});
  }
  const double rate = attempted ? static_cast<double>(found) / attempted : 1.0;
  write_line(ctx.out, {{"type", "delta_unknot_summary"}, {"attempted", attempted}, {"found", found}, {"rate", rate}});
  return tref_ok && replay_ok && rate >= min_success;
}

bool suite_certificates(const json& s, SuiteContext& ctx) {
  bool ok = true;
  for (const auto& [k, t] : builtin_templates()) {
    const bool valid = validate_template(t);
    ok = ok && valid;
    write_line(ctx.out, {{"type", "template"}, {"k", k}, {"name", t.name}, {"letters", t.fragment.word.size()},
                         {"certificates", t.certificates.size()}, {"pass", valid}});
  }
  const std::int64_t budget = field<std::int64_t>(s, "budget", 100000);
  const auto lower = realize_by_lower(builtin_template(3), 2, budget);
  const bool lower_ok = lower && check_lower_certificate(*lower);
  json rec{{"type", "realize_by_lower"}, {"template", "delta"}, {"l", 2}, {"status", lower ? "found" : "exhausted"},
           {"pass", lower_ok}};
  if (lower) rec["certificate"] = *lower;
  write_line(ctx.out, rec);

  const auto clasp = realize_by_lower(builtin_template(4), 3, field<std::int64_t>(s, "clasp_budget", 2000));
  write_line(ctx.out, {{"type", "realize_by_lower"}, {"template", "clasp-pass"}, {"l", 3},
                       {"status", clasp ? "found" : "exhausted"}, {"replays", clasp ? check_lower_certificate(*clasp) : false},
                       {"hard", false}});
  return ok && lower_ok;
}

}  // namespace

int cmd_verify(const json& config, std::optional<std::uint64_t> seed, std::ostream& out, std::ostream& err) {
  if (!config.is_object() || !config.contains("suites") || !config["suites"].is_array()) {
    err << "config: expected an object with a 'suites' array\n";
    return kUsageError;
  }
  for (const auto& s : config["suites"])
    if (!s.is_object() || !s.contains("kind") || !s["kind"].is_string()) {
      err << "config: every suite needs a string 'kind'\n";
      return kUsageError;
    }

  write_line(out, header_record("verify", seed.value_or(0), config));
  bool all = true;
  std::size_t index = 0;
  for (const auto& s : config["suites"]) {
    const std::string kind = s["kind"].get<std::string>();
    std::uint64_t suite_seed = 0;
    try {
      suite_seed = seed ? derive_seed(*seed, index) : field<std::uint64_t>(s, "seed", 1);
    } catch (const ParseError& e) {
      err << "config: " << e.what() << '\n';
      return kUsageError;
    }
    ++index;
    SuiteContext ctx{out, suite_seed};
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      if (kind == "cross_validation") pass = suite_cross_validation(s, ctx);
      else if (kind == "verify_type") pass = suite_verify_type(s, ctx);
      else if (kind == "necessity") pass = suite_necessity(s, ctx);
      else if (kind == "sharpness") pass = suite_sharpness(s, ctx);
      else if (kind == "invariance") pass = suite_invariance(s, ctx);
      else if (kind == "group_checks") pass = suite_group(s, ctx);
      else if (kind == "searches") pass = suite_searches(s, ctx);
      else if (kind == "certificates") pass = suite_certificates(s, ctx);
      else {
        err << "config: unknown suite kind '" << kind << "'\n";
        return kUsageError;
      }
    } catch (const ParseError& e) {
      err << "config: " << e.what() << '\n';
      return kUsageError;
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    err << kind << ": " << (pass ? "pass" : "FAIL") << " (" << seconds << " s)\n";
    write_line(out, {{"type", "suite_summary"}, {"kind", kind}, {"seed", suite_seed}, {"pass", pass}});
    all = all && pass;
  }
  write_line(out, {{"type", "verdict"}, {"pass", all}});
  return all ? kOk : kAssertionFailed;
}

// ---------------------------------------------------------------------------
// family, search, path-replay

int cmd_family(const FamilyOptions& opt, std::ostream& out, std::ostream& err) {
  Diagram base;
  try {
    base = parse_code(opt.base);
  } catch (const KnotlabError& e) {
    err << "family: cannot parse base: " << e.what() << '\n';
    return kUsageError;
  }
  const json config{{"base", opt.base}, {"orders", opt.orders}};
  write_line(out, header_record("family", opt.seed, config));
  std::mt19937_64 rng(opt.seed);
  const auto fam = random_family(base, opt.orders, rng);
  if (!fam) {
    write_line(out, {{"type", "error"}, {"error", "site exhaustion"}});
    return kAssertionFailed;
  }
  const auto members = family(*fam);
  for (std::size_t p = 0; p < members.size(); ++p) {
    json subset = json::array();
    for (std::size_t i = 0; i < fam->chords.size(); ++i)
      if (p & (std::size_t{1} << i)) subset.push_back(i);
    write_line(out, {{"type", "member"}, {"subset", subset}, {"crossings", members[p].crossing_count()},
                     {"key", canonical_key(members[p])}, {"v2", v2(members[p])}, {"v3", v3(members[p])}});
  }
  write_line(out, {{"type", "alternating_sums"},
                   {"orders", opt.orders},
                   {"v2", alternating_sum(members, Invariant::V2)},
                   {"v3", alternating_sum(members, Invariant::V3)},
                   {"family", *fam}});
  return kOk;
}

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
  Diagram from, to;
  try {
    from = parse_code(opt.from);
    to = parse_code(opt.to);
  } catch (const KnotlabError& e) {
    err << "search: " << e.what() << '\n';
    return kUsageError;
  }
  for (int k : opt.moves)
    if (k < 2 || k > 4) {
      err << "search: move orders must be 2, 3 or 4\n";
      return kUsageError;
    }
  const json config{{"from", opt.from}, {"to", opt.to}, {"moves", opt.moves}, {"delta_unknot", opt.delta_unknot},
                    {"budget", opt.budget}};
  write_line(out, header_record("search", 0, config));
  SearchResult r;
  std::set<int> orders(opt.moves.begin(), opt.moves.end());
  if (opt.delta_unknot) {
    r = delta_unknot(from, opt.budget);
    orders = {3};
  } else {
    r = bfs_path(from, to, orders, opt.budget);
  }
  json rec{{"type", "path"}};
  rec.update(json(r));
  rec["moves"] = std::vector<int>(orders.begin(), orders.end());
  rec["replays"] = r.found && check_path(r, orders);
  write_line(out, rec);
  return kOk;
}

int cmd_path_replay(const std::filesystem::path& file, std::ostream& out, std::ostream& err) {
  std::ifstream in(file);
  if (!in) {
    err << "path-replay: cannot open " << file << '\n';
    return kUsageError;
  }
  std::vector<json> docs;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  try {
    const json whole = json::parse(text);
    if (whole.is_array())
      for (const auto& j : whole) docs.push_back(j);
    else
      docs.push_back(whole);
  } catch (const json::parse_error&) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        docs.push_back(json::parse(line));
      } catch (const json::parse_error& e) {
        err << "path-replay: " << e.what() << '\n';
        return kUsageError;
      }
    }
  }

  write_line(out, header_record("path-replay", 0, json{{"file", file.string()}}));
  int replayed = 0, failed = 0;
  auto replay_one = [&](const json& j) {
    bool ok = false;
    try {
      const Diagram start = j.at("start").get<Diagram>();
      const Script script = j.at("steps").get<Script>();
      if (j.contains("target_key")) {
        ok = canonical_key(run_script(start, script)) == j.at("target_key").get<std::string>();
      } else if (j.contains("strand")) {
        ok = run_script(start, script).crossing_count() == 0;
      }
    } catch (const std::exception& e) {
      err << "path-replay: " << e.what() << '\n';
      ok = false;
    }
    ++replayed;
    failed += !ok;
    write_line(out, {{"type", "replay"}, {"index", replayed - 1}, {"ok", ok}});
  };
  std::function<void(const json&)> visit = [&](const json& j) {
    if (j.is_object()) {
      if (j.contains("start") && j.contains("steps") && (j.contains("target_key") || j.contains("strand"))) {
        if (!j.contains("found") || j["found"].get<bool>()) replay_one(j);
        return;
      }
      for (const auto& [k, v] : j.items()) visit(v);
    } else if (j.is_array()) {
      for (const auto& v : j) visit(v);
    }
  };
  for (const auto& d : docs) visit(d);
  write_line(out, {{"type", "replay_summary"}, {"replayed", replayed}, {"failed", failed}});
  if (replayed == 0) {
    err << "path-replay: no replayable records found\n";
    return kUsageError;
  }
  return failed == 0 ? kOk : kAssertionFailed;
}
}  // namespace knotlab::workbench
