#include "knotlab/search.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <tuple>
#include <unordered_set>

#include "knotlab/invariants.hpp"

namespace knotlab {

namespace {

constexpr int kCrossingSlack = 4;
constexpr std::size_t kFingerCandidates = 64;

struct Node {
  Diagram d;
  int parent;
  std::vector<ScriptStep> steps;
  int depth;
};

Script collect(const std::vector<Node>& nodes, int id) {
  std::vector<int> chain;
  for (int x = id; x >= 0; x = nodes[x].parent) chain.push_back(x);
  Script s;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    for (const auto& step : nodes[*it].steps) s.steps.push_back(step);
  return s;
}

void append_trace(std::vector<ScriptStep>& steps, const std::vector<ReidemeisterMove>& trace) {
  for (const auto& mv : trace) steps.push_back({std::nullopt, mv});
}

std::vector<Chord> chords_of_order(const Diagram& d, int k) {
  std::vector<Chord> out;
  if (k == 2)
    for (int c = 0; c < d.crossing_count(); ++c) out.push_back({2, ChordForm::Switch, c, {}, {}, false});
  if (k == 3)
    for (const Triangle& t : triangles(d))
      if (!t.r3) out.push_back({3, ChordForm::Triangle, -1, t.edges, {}, false});
  if (k == 4) {
    for (Chord c : enumerate_sites(d, 4, kFingerCandidates)) {
      out.push_back(c);
      c.mirror = true;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

SearchResult bfs_path(const Diagram& d1, const Diagram& d2, const std::set<int>& orders, std::int64_t budget) {
  SearchResult r;
  r.start = simplify(d1);
  const Diagram goal = simplify(d2);
  r.target_key = canonical_key(goal);
  const int cap = std::max(r.start.crossing_count(), goal.crossing_count()) + kCrossingSlack;
  SimplifyOptions opts;
  opts.r3_budget = 200;

  std::vector<Node> nodes{{r.start, -1, {}, 0}};
  std::unordered_set<std::string> seen{canonical_key(r.start)};
  if (*seen.begin() == r.target_key) {
    r.found = true;
    return r;
  }
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int id = queue.front();
    queue.pop_front();
    const Diagram d = nodes[id].d;
    for (int k : orders) {
      for (const Chord& c : chords_of_order(d, k)) {
        if (r.states >= budget) return r;
        ++r.states;
        Diagram next;
        try {
          next = apply_chord(d, c);
        } catch (const InvalidSite&) {
          continue;
        }
        const SimplifyResult s = simplify_with_trace(next, opts);
        if (s.diagram.crossing_count() > cap) continue;
        const std::string key = canonical_key(s.diagram);
        if (!seen.insert(key).second) continue;
        std::vector<ScriptStep> steps{{c, std::nullopt}};
        append_trace(steps, s.trace);
        nodes.push_back({s.diagram, id, std::move(steps), nodes[id].depth + 1});
        if (key == r.target_key) {
          r.found = true;
          r.script = collect(nodes, static_cast<int>(nodes.size()) - 1);
          return r;
        }
        queue.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  return r;
}

SearchResult delta_unknot(const Diagram& d, std::int64_t budget) {
  SearchResult r;
  const SimplifyResult first = simplify_with_trace(d);
  r.start = first.diagram;
  r.target_key = canonical_key(Diagram{});
  const int cap = r.start.crossing_count() + kCrossingSlack;
  SimplifyOptions opts;
  opts.r3_budget = 200;

  std::vector<Node> nodes;
  using Entry = std::tuple<std::int64_t, int, int, int>;  // |v2|, crossings, depth, id
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
  std::unordered_set<std::string> seen;

  auto push = [&](Diagram next, int parent, std::vector<ScriptStep> steps) {
    if (next.crossing_count() > cap) return;
    if (!seen.insert(canonical_key(next)).second) return;
    const int depth = parent < 0 ? 0 : nodes[parent].depth + 1;
    const std::int64_t weight = std::llabs(v2(next));
    nodes.push_back({std::move(next), parent, std::move(steps), depth});
    const int id = static_cast<int>(nodes.size()) - 1;
    frontier.emplace(weight, nodes[id].d.crossing_count(), depth, id);
  };

  push(r.start, -1, {});
  while (!frontier.empty()) {
    const int id = std::get<3>(frontier.top());
    frontier.pop();
    const Diagram d = nodes[id].d;
    if (d.crossing_count() == 0) {
      r.found = true;
      r.script = collect(nodes, id);
      return r;
    }
    if (r.states >= budget) return r;
    ++r.states;

    for (const Triangle& t : triangles(d)) {
      if (t.r3) continue;
      const Chord c{3, ChordForm::Triangle, -1, t.edges, {}, false};
      const SimplifyResult s = simplify_with_trace(apply_chord(d, c), opts);
      std::vector<ScriptStep> steps{{c, std::nullopt}};
      append_trace(steps, s.trace);
      push(s.diagram, id, std::move(steps));
    }
    for (const ReidemeisterMove& mv : r3_moves(d)) push(reidemeister(d, mv), id, {{std::nullopt, mv}});
    for (const ReidemeisterMove& mv : reducing_moves(d)) push(reidemeister(d, mv), id, {{std::nullopt, mv}});
    if (d.crossing_count() + 2 <= cap) {
      for (const Face& f : d.faces()) {
        for (std::size_t i = 0; i < f.size(); ++i)
          for (std::size_t j = i + 1; j < f.size(); ++j) {
            if (f[i].edge == f[j].edge) continue;
            for (bool over : {true, false}) {
              const ReidemeisterMove mv{MoveKind::R2, Direction::Add, {}, {},
                                        {{f[i].edge, 0, f[i].along ? Side::Right : Side::Left},
                                         {f[j].edge, 0, f[j].along ? Side::Right : Side::Left}},
                                        over};
              try {
                push(reidemeister(d, mv), id, {{std::nullopt, mv}});
              } catch (const InvalidSite&) {
              }
            }
          }
      }
    }
  }
  return r;
}

bool check_path(const SearchResult& r, const std::set<int>& orders) {
  if (!r.found) return false;
  for (const ScriptStep& s : r.script.steps)
    if (s.chord && !orders.empty() && !orders.count(s.chord->order)) return false;
  try {
    return canonical_key(run_script(r.start, r.script)) == r.target_key;
  } catch (const KnotlabError&) {
    return false;
  }
}

}  // namespace knotlab
