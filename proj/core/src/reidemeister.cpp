#include "knotlab/reidemeister.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "knotlab/surgery.hpp"

namespace knotlab {

namespace {

bool is_kink(const Diagram& d, int c) {
  const int m = 2 * d.crossing_count();
  const auto& ps = d.gauss_code().passages;
  for (int t = 0; t < m; ++t)
    if (ps[t].crossing == c && ps[(t + 1) % m].crossing == c) return true;
  return false;
}

// Bigon faces whose two crossings can be removed by R2.
std::vector<std::array<int, 2>> removable_bigons(const Diagram& d, const std::vector<Face>& faces) {
  std::vector<std::array<int, 2>> out;
  const auto& ps = d.gauss_code().passages;
  for (const Face& f : faces) {
    if (f.size() != 2) continue;
    const auto [a, b] = d.edge_passages(f[0].edge);
    const int c1 = ps[a].crossing, c2 = ps[b].crossing;
    if (c1 == c2) continue;
    if (ps[a].over != ps[b].over) continue;
    out.push_back({std::min(c1, c2), std::max(c1, c2)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Site face_site(const FaceEdge& fe, int offset) { return {fe.edge, offset, fe.along ? Side::Right : Side::Left}; }

}  // namespace

std::vector<Triangle> triangles(const Diagram& d) {
  std::vector<Triangle> out;
  if (d.crossing_count() < 3) return out;
  const auto& ps = d.gauss_code().passages;
  for (const Face& f : d.faces()) {
    if (f.size() != 3) continue;
    std::set<int> corners, edges;
    bool r3 = false;
    for (const FaceEdge& fe : f) {
      const auto [a, b] = d.edge_passages(fe.edge);
      corners.insert(ps[a].crossing);
      corners.insert(ps[b].crossing);
      edges.insert(fe.edge);
      if (ps[a].over && ps[b].over) r3 = true;
    }
    if (corners.size() != 3 || edges.size() != 3) continue;
    Triangle t;
    std::copy(edges.begin(), edges.end(), t.edges.begin());
    t.r3 = r3;
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const Triangle& a, const Triangle& b) { return a.edges < b.edges; });
  return out;
}

Diagram reidemeister(const Diagram& d, const ReidemeisterMove& mv) {
  switch (mv.kind) {
    case MoveKind::R1:
      if (mv.direction == Direction::Remove) {
        if (mv.crossings.size() != 1 || mv.crossings[0] < 0 || mv.crossings[0] >= d.crossing_count() ||
            !is_kink(d, mv.crossings[0]))
          throw InvalidSite("R1 removal needs a kink crossing");
        return delete_crossings(d, mv.crossings);
      } else {
        if (mv.sites.size() != 1) throw InvalidSite("R1 addition needs one site");
        Surgery s;
        s.placements.push_back({Fragment{1, {{0, mv.over}}}, mv.sites});
        return perform_surgery(d, s).diagram;
      }
    case MoveKind::R2:
      if (mv.direction == Direction::Remove) {
        if (mv.crossings.size() != 2) throw InvalidSite("R2 removal needs two crossings");
        std::array<int, 2> want{std::min(mv.crossings[0], mv.crossings[1]), std::max(mv.crossings[0], mv.crossings[1])};
        const auto bigons = removable_bigons(d, d.faces());
        if (std::find(bigons.begin(), bigons.end(), want) == bigons.end())
          throw InvalidSite("R2 removal needs a bigon with one strand over at both crossings");
        return delete_crossings(d, mv.crossings);
      } else {
        if (mv.sites.size() != 2) throw InvalidSite("R2 addition needs two sites");
        Surgery s;
        s.placements.push_back({Fragment{2, {{1, mv.over}, {1, !mv.over}}}, mv.sites});
        return perform_surgery(d, s).diagram;
      }
    case MoveKind::R3: {
      if (mv.edges.size() != 3) throw InvalidSite("R3 needs three triangle edges");
      std::array<int, 3> want{mv.edges[0], mv.edges[1], mv.edges[2]};
      std::sort(want.begin(), want.end());
      for (const Triangle& t : triangles(d))
        if (t.edges == want) {
          if (!t.r3) throw InvalidSite("R3 on a cyclic triangle (that is a delta move)");
          Surgery s;
          s.flips.push_back(want);
          return perform_surgery(d, s).diagram;
        }
      throw InvalidSite("R3 site is not a triangle face");
    }
  }
  throw InvalidSite("unknown move kind");
}

std::vector<ReidemeisterMove> reducing_moves(const Diagram& d) {
  std::vector<ReidemeisterMove> out;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (is_kink(d, c)) out.push_back({MoveKind::R1, Direction::Remove, {c}, {}, {}, true});
  if (d.crossing_count() >= 2)
    for (const auto& b : removable_bigons(d, d.faces()))
      out.push_back({MoveKind::R2, Direction::Remove, {b[0], b[1]}, {}, {}, true});
  return out;
}

std::vector<ReidemeisterMove> r3_moves(const Diagram& d) {
  std::vector<ReidemeisterMove> out;
  for (const Triangle& t : triangles(d))
    if (t.r3) out.push_back({MoveKind::R3, Direction::Remove, {}, {t.edges[0], t.edges[1], t.edges[2]}, {}, true});
  return out;
}

std::optional<ReidemeisterMove> random_move(const Diagram& d, std::mt19937_64& rng, int max_crossings) {
  const int n = d.crossing_count();
  std::vector<int> kinds;  // 0 R1-, 1 R2-, 2 R3, 3 R1+, 4 R2+
  const auto removals = reducing_moves(d);
  std::vector<ReidemeisterMove> r1r, r2r;
  for (const auto& mv : removals) (mv.kind == MoveKind::R1 ? r1r : r2r).push_back(mv);
  const auto r3 = r3_moves(d);
  if (!r1r.empty()) kinds.push_back(0);
  if (!r2r.empty()) kinds.push_back(1);
  if (!r3.empty()) kinds.push_back(2);
  if (n + 1 <= max_crossings) kinds.push_back(3);
  if (n + 2 <= max_crossings) kinds.push_back(4);
  if (kinds.empty()) return std::nullopt;

  auto pick = [&](auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
  const int kind = pick(kinds);
  std::bernoulli_distribution coin(0.5);
  switch (kind) {
    case 0: return pick(r1r);
    case 1: return pick(r2r);
    case 2: return pick(r3);
    case 3: {
      const int e = std::uniform_int_distribution<int>(0, d.edge_count() - 1)(rng);
      const Side side = coin(rng) ? Side::Right : Side::Left;
      return ReidemeisterMove{MoveKind::R1, Direction::Add, {}, {}, {{e, 0, side}}, coin(rng)};
    }
    default: {
      const auto faces = d.faces();
      const Face& f = faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)];
      std::uniform_int_distribution<std::size_t> at(0, f.size() - 1);
      const std::size_t i = at(rng), j = at(rng);
      Site a = face_site(f[i], 0), b = face_site(f[j], i == j ? 1 : 0);
      return ReidemeisterMove{MoveKind::R2, Direction::Add, {}, {}, {a, b}, coin(rng)};
    }
  }
}

SimplifyResult reduce(const Diagram& d) {
  SimplifyResult r{d, {}};
  for (;;) {
    const auto moves = reducing_moves(r.diagram);
    if (moves.empty()) break;
    r.diagram = reidemeister(r.diagram, moves.front());
    r.trace.push_back(moves.front());
  }
  return r;
}

SimplifyResult simplify_with_trace(const Diagram& d, const SimplifyOptions& options) {
  SimplifyResult r{d, {}};
  for (;;) {
    SimplifyResult step = reduce(r.diagram);
    r.diagram = std::move(step.diagram);
    r.trace.insert(r.trace.end(), step.trace.begin(), step.trace.end());
    if (r.diagram.crossing_count() < 3) break;

    struct Node {
      Diagram diagram;
      std::vector<ReidemeisterMove> path;
    };
    std::deque<Node> frontier;
    std::unordered_set<std::string> seen{canonical_key(r.diagram)};
    frontier.push_back({r.diagram, {}});
    int expansions = 0;
    std::optional<Node> found;
    while (!frontier.empty() && expansions < options.r3_budget && !found) {
      Node node = std::move(frontier.front());
      frontier.pop_front();
      ++expansions;
      for (const auto& mv : r3_moves(node.diagram)) {
        Diagram next = reidemeister(node.diagram, mv);
        if (!seen.insert(canonical_key(next)).second) continue;
        std::vector<ReidemeisterMove> path = node.path;
        path.push_back(mv);
        if (!reducing_moves(next).empty()) {
          found = Node{std::move(next), std::move(path)};
          break;
        }
        frontier.push_back({std::move(next), std::move(path)});
      }
    }
    if (!found) break;
    r.diagram = std::move(found->diagram);
    r.trace.insert(r.trace.end(), found->path.begin(), found->path.end());
  }
  return r;
}

Diagram simplify(const Diagram& d, const SimplifyOptions& options) { return simplify_with_trace(d, options).diagram; }

Diagram replay(const Diagram& d, const std::vector<ReidemeisterMove>& trace) {
  Diagram cur = d;
  for (const auto& mv : trace) cur = reidemeister(cur, mv);
  return cur;
}

}  // namespace knotlab
