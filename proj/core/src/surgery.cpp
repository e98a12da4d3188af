#include "knotlab/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace knotlab {

Fragment Fragment::mirrored() const {
  Fragment f = *this;
  for (BraidLetter& l : f.word) l.left_over = !l.left_over;
  return f;
}

Fragment Fragment::with_inverse() const {
  Fragment f = *this;
  for (auto it = word.rbegin(); it != word.rend(); ++it) f.word.push_back({it->position, !it->left_over});
  return f;
}

std::vector<Site> order_along_face(const Diagram& d, std::span<const Site> sites, const std::vector<Face>& faces) {
  if (sites.empty()) return {};
  const int face = d.face_of(sites[0].edge, sites[0].side, faces);
  const Face& walk = faces[face];
  const int len = static_cast<int>(walk.size());

  auto walk_index = [&](const Site& s) {
    for (int i = 0; i < len; ++i)
      if (walk[i].edge == s.edge && walk[i].along == (s.side == Side::Right)) return i;
    throw InvalidSite("sites of one placement must share a face");
  };
  auto rank = [](const Site& s) { return s.side == Side::Right ? s.offset : -s.offset; };

  const int start = walk_index(sites[0]);
  const int start_rank = rank(sites[0]);
  std::vector<std::tuple<int, int, Site>> keyed;
  for (const Site& s : sites) {
    int rel = (walk_index(s) - start + len) % len;
    if (rel == 0 && rank(s) < start_rank) rel = len;
    keyed.emplace_back(rel, rank(s), s);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
  std::vector<Site> out;
  for (const auto& k : keyed) out.push_back(std::get<2>(k));
  return out;
}

namespace {

struct Vec2 {
  int x, y;
};

struct StrandVisit {
  int count = 0;
  Vec2 dir{0, 0};
};

struct FragmentCrossing {
  bool left_over = true;
  std::array<StrandVisit, 2> strand;  // 0: upper-left to lower-right, 1: upper-right to lower-left
  std::array<int, 2> finger{-1, -1};
};

struct FingerRef {
  int offset;
  int placement;
  int finger;
  bool along;
};

}  // namespace

SurgeryResult perform_surgery(const Diagram& host, const Surgery& surgery) {
  const int n = host.crossing_count();
  const int m = 2 * n;
  const int edges = host.edge_count();

  GaussCode code = host.gauss_code();

  std::set<int> switched;
  for (int c : surgery.switches) {
    if (c < 0 || c >= n) throw InvalidSite("switch site out of range");
    if (!switched.insert(c).second) throw InvalidSite("crossing switched twice");
    for (Passage& p : code.passages)
      if (p.crossing == c) p.over = !p.over;
    code.signs[c] = -code.signs[c];
  }

  std::set<int> flipped_edges;
  for (const auto& tri : surgery.flips) {
    if (m == 0) throw InvalidSite("no triangle to flip in a crossingless diagram");
    for (int e : tri) {
      if (e < 0 || e >= m) throw InvalidSite("flip edge out of range");
      if (!flipped_edges.insert(e).second) throw InvalidSite("edge flipped twice");
      std::swap(code.passages[(e - 1 + m) % m], code.passages[e]);
    }
  }

  const std::vector<Face> faces = host.faces();
  std::map<int, std::vector<FingerRef>> on_edge;
  std::set<std::pair<int, int>> taken;
  for (std::size_t p = 0; p < surgery.placements.size(); ++p) {
    const Placement& pl = surgery.placements[p];
    if (static_cast<int>(pl.sites.size()) != pl.fragment.fingers)
      throw InvalidSite("placement needs one site per finger");
    for (const BraidLetter& l : pl.fragment.word)
      if (l.position < 0 || l.position + 1 >= 2 * pl.fragment.fingers) throw InvalidSite("braid letter out of range");
    for (const Site& s : pl.sites) {
      if (s.edge < 0 || s.edge >= edges) throw InvalidSite("site edge " + std::to_string(s.edge) + " out of range");
      if (flipped_edges.count(s.edge)) throw InvalidSite("site on a flipped triangle edge");
      if (!taken.insert({s.edge, s.offset}).second) throw InvalidSite("site collision");
    }
    const std::vector<Site> ordered = order_along_face(host, pl.sites, faces);
    for (int f = 0; f < static_cast<int>(ordered.size()); ++f)
      on_edge[ordered[f].edge].push_back({ordered[f].offset, static_cast<int>(p), f, ordered[f].side == Side::Right});
  }
  for (auto& [e, list] : on_edge)
    std::sort(list.begin(), list.end(), [](const FingerRef& a, const FingerRef& b) { return a.offset < b.offset; });

  std::vector<int> base(surgery.placements.size(), 0);
  std::vector<FragmentCrossing> frag;
  for (std::size_t p = 0; p < surgery.placements.size(); ++p) {
    base[p] = n + static_cast<int>(frag.size());
    for (const BraidLetter& l : surgery.placements[p].fragment.word) frag.push_back({l.left_over, {}, {}});
  }

  std::vector<Passage> out;
  out.reserve(code.passages.size() + 2 * frag.size());

  auto trace_finger = [&](const FingerRef& ref) {
    const Fragment& fr = surgery.placements[ref.placement].fragment;
    const int levels = static_cast<int>(fr.word.size());
    int pos = ref.along ? 2 * ref.finger : 2 * ref.finger + 1;
    auto visit = [&](int level, int type, Vec2 dir) {
      FragmentCrossing& fc = frag[base[ref.placement] - n + level];
      fc.strand[type].count++;
      fc.strand[type].dir = dir;
      fc.finger[type] = ref.finger;
      const bool over = (type == 0) == fc.left_over;
      out.push_back({base[ref.placement] + level, over});
    };
    for (int L = 0; L < levels; ++L) {
      const BraidLetter& l = fr.word[L];
      if (pos == l.position) {
        visit(L, 0, {1, -1});
        pos = l.position + 1;
      } else if (pos == l.position + 1) {
        visit(L, 1, {-1, -1});
        pos = l.position;
      }
    }
    pos ^= 1;
    for (int L = levels - 1; L >= 0; --L) {
      const BraidLetter& l = fr.word[L];
      if (pos == l.position + 1) {
        visit(L, 0, {-1, 1});
        pos = l.position;
      } else if (pos == l.position) {
        visit(L, 1, {1, 1});
        pos = l.position + 1;
      }
    }
    const int expected = ref.along ? 2 * ref.finger + 1 : 2 * ref.finger;
    if (pos != expected) throw InvalidSite("fragment word does not return fingers to their own positions");
  };

  std::vector<SurgeryResult::EdgeSplit> splits(edges);
  for (int t = 0; t < edges; ++t) {
    splits[t].start = static_cast<int>(out.size());
    if (auto it = on_edge.find(t); it != on_edge.end())
      for (const FingerRef& ref : it->second) {
        const std::size_t before = out.size();
        trace_finger(ref);
        splits[t].finger_cuts.emplace_back(ref.offset, static_cast<int>(out.size() - before));
      }
    if (n > 0) out.push_back(code.passages[t]);
  }

  GaussCode result;
  result.passages = std::move(out);
  result.signs = code.signs;
  for (const FragmentCrossing& fc : frag) {
    if (fc.strand[0].count != 1 || fc.strand[1].count != 1) throw InvalidSite("fragment crossing not traversed twice");
    const Vec2 over = fc.left_over ? fc.strand[0].dir : fc.strand[1].dir;
    const Vec2 under = fc.left_over ? fc.strand[1].dir : fc.strand[0].dir;
    const int cross = over.x * under.y - over.y * under.x;
    result.signs.push_back(cross > 0 ? 1 : -1);
  }

  std::vector<CrossingOrigin> pre(n + frag.size());
  for (int c = 0; c < n; ++c) pre[c] = {-1, c, {-1, -1}};
  for (std::size_t p = 0; p < surgery.placements.size(); ++p)
    for (std::size_t L = 0; L < surgery.placements[p].fragment.word.size(); ++L) {
      const int id = base[p] + static_cast<int>(L);
      pre[id] = {static_cast<int>(p), static_cast<int>(L), frag[id - n].finger};
    }

  SurgeryResult res{Diagram::from_gauss(result), {}, std::move(splits)};
  std::vector<int> relabel(pre.size(), -1);
  int next = 0;
  for (const Passage& p : result.passages)
    if (relabel[p.crossing] < 0) relabel[p.crossing] = next++;
  res.origin.resize(pre.size());
  for (std::size_t c = 0; c < pre.size(); ++c) res.origin[relabel[c]] = pre[c];

  if (!res.diagram.is_planar()) throw InvalidSite("site collision: placements interleave within a face");
  return res;
}

int SurgeryResult::translate_crossing(int host_crossing) const {
  for (std::size_t c = 0; c < origin.size(); ++c)
    if (origin[c].placement < 0 && origin[c].index == host_crossing) return static_cast<int>(c);
  throw InvalidSite("crossing " + std::to_string(host_crossing) + " not in host");
}

Site SurgeryResult::translate_site(const Site& s) const {
  if (s.edge < 0 || s.edge >= static_cast<int>(edges.size())) throw InvalidSite("site edge out of range");
  const EdgeSplit& split = edges[s.edge];
  int shift = 0;
  for (const auto& [offset, passages] : split.finger_cuts) {
    if (offset == s.offset) throw InvalidSite("site occupied by the surgery");
    if (offset < s.offset) shift += passages;
  }
  const int count = diagram.edge_count();
  // On a crossingless host the new edge 0 also carries the stretch after the
  // last finger, which comes before the basepoint; keep the earlier stretch
  // ordered after it.
  int offset = s.offset;
  if (edges.size() == 1 && shift == 0 && !split.finger_cuts.empty()) offset += kWrappedOffset;
  return {(split.start + shift) % count, offset, s.side};
}

int SurgeryResult::translate_edge(int host_edge) const {
  const EdgeSplit& split = edges.at(host_edge);
  int shift = 0;
  for (const auto& cut : split.finger_cuts) shift += cut.second;
  return (split.start + shift) % diagram.edge_count();
}

}  // namespace knotlab
