#include "knotlab/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace knotlab {

namespace {

struct SlotRef {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

bool slot_is_incoming(const Crossing& x, int slot) {
  return slot == 0 || (x.sign > 0 ? slot == 3 : slot == 1);
}

}  // namespace

Diagram Diagram::from_gauss(const GaussCode& code) {
  const int n = code.crossing_count();
  if (static_cast<int>(code.passages.size()) != 2 * n)
    throw ParseError("gauss code: passage count must be twice the crossing count");

  std::vector<int> relabel(n, -1);
  std::vector<int> over_seen(n, 0), under_seen(n, 0);
  int next = 0;
  for (const Passage& p : code.passages) {
    if (p.crossing < 0 || p.crossing >= n) throw ParseError("gauss code: crossing id out of range");
    if (relabel[p.crossing] < 0) relabel[p.crossing] = next++;
    (p.over ? over_seen : under_seen)[p.crossing]++;
  }
  for (int c = 0; c < n; ++c) {
    if (over_seen[c] != 1 || under_seen[c] != 1)
      throw ParseError("gauss code: crossing " + std::to_string(c) + " needs one over and one under passage");
    if (code.signs[c] != 1 && code.signs[c] != -1) throw ParseError("gauss code: sign must be +/-1");
  }

  Diagram d;
  d.code_.signs.assign(n, 0);
  d.code_.passages.reserve(code.passages.size());
  for (const Passage& p : code.passages) d.code_.passages.push_back({relabel[p.crossing], p.over});
  for (int c = 0; c < n; ++c) d.code_.signs[relabel[c]] = code.signs[c];

  const int m = 2 * n;
  std::vector<int> under(n), over(n);
  for (int t = 0; t < m; ++t) {
    const Passage& p = d.code_.passages[t];
    (p.over ? over : under)[p.crossing] = t;
  }
  d.crossings_.resize(n);
  for (int c = 0; c < n; ++c) {
    const int u = under[c];
    const int s = over[c];
    Crossing& x = d.crossings_[c];
    x.sign = d.code_.signs[c];
    x.edges[0] = u;
    x.edges[2] = (u + 1) % m;
    if (x.sign > 0) {
      x.edges[1] = (s + 1) % m;
      x.edges[3] = s;
    } else {
      x.edges[1] = s;
      x.edges[3] = (s + 1) % m;
    }
  }
  return d;
}

int Diagram::writhe() const { return std::accumulate(code_.signs.begin(), code_.signs.end(), 0); }

int Diagram::over_passage(int crossing) const {
  const Crossing& x = crossings_.at(crossing);
  return x.sign > 0 ? x.edges[3] : x.edges[1];
}

std::array<int, 2> Diagram::edge_passages(int edge) const {
  const int m = 2 * crossing_count();
  return {(edge - 1 + m) % m, edge};
}

std::vector<Face> Diagram::faces() const {
  const int n = crossing_count();
  if (n == 0) return {Face{{0, true}}, Face{{0, false}}};

  const int m = 2 * n;
  std::vector<SlotRef> tail(m), head(m);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < 4; ++i) {
      const int e = crossings_[c].edges[i];
      (slot_is_incoming(crossings_[c], i) ? head : tail)[e] = {c, i};
    }

  std::vector<char> visited(4 * n, 0);
  std::vector<Face> out;
  for (int c0 = 0; c0 < n; ++c0)
    for (int i0 = 0; i0 < 4; ++i0) {
      if (visited[4 * c0 + i0]) continue;
      Face face;
      SlotRef cur{c0, i0};
      while (!visited[4 * cur.crossing + cur.slot]) {
        visited[4 * cur.crossing + cur.slot] = 1;
        const SlotRef leave{cur.crossing, (cur.slot + 1) % 4};
        const int e = crossings_[leave.crossing].edges[leave.slot];
        const bool along = tail[e] == leave;
        face.push_back({e, along});
        cur = along ? head[e] : tail[e];
      }
      out.push_back(std::move(face));
    }
  return out;
}

int Diagram::face_of(int edge, Side side, const std::vector<Face>& faces) const {
  const FaceEdge want{edge, side == Side::Right};
  for (std::size_t f = 0; f < faces.size(); ++f)
    if (std::find(faces[f].begin(), faces[f].end(), want) != faces[f].end()) return static_cast<int>(f);
  throw InvalidSite("no face on requested side of edge " + std::to_string(edge));
}

bool Diagram::is_planar() const {
  const int n = crossing_count();
  return n == 0 || static_cast<int>(faces().size()) == n + 2;
}

GaussDiagram Diagram::gauss_diagram() const {
  GaussDiagram g;
  g.length = 2 * crossing_count();
  g.arrows.reserve(crossings_.size());
  for (int c = 0; c < crossing_count(); ++c) g.arrows.push_back({over_passage(c), under_passage(c), sign(c)});
  return g;
}

std::string Diagram::pd_string() const {
  std::ostringstream os;
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& e = crossings_[c].edges;
    if (c) os << ' ';
    os << "X[" << e[0] + 1 << ',' << e[1] + 1 << ',' << e[2] + 1 << ',' << e[3] + 1 << ']';
  }
  return os.str();
}

std::string canonical_key(const Diagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return "0:";
  const int m = 2 * n;
  const auto& code = d.gauss_code();

  auto encode = [&](int rotation, std::vector<int>& out, std::vector<int>& label) {
    std::fill(label.begin(), label.end(), -1);
    int next = 0;
    for (int k = 0; k < m; ++k) {
      const Passage& p = code.passages[(rotation + k) % m];
      if (label[p.crossing] < 0) label[p.crossing] = next++;
      out[k] = label[p.crossing] * 4 + (p.over ? 2 : 0) + (code.signs[p.crossing] > 0 ? 1 : 0);
    }
  };

  std::vector<int> best(m), cand(m), label(n);
  encode(0, best, label);
  for (int r = 1; r < m; ++r) {
    encode(r, cand, label);
    if (cand < best) best.swap(cand);
  }

  std::ostringstream os;
  os << n << ':';
  for (int token : best) os << ((token & 2) ? 'O' : 'U') << (token >> 2) + 1 << ((token & 1) ? '+' : '-');
  return os.str();
}

GaussDiagram to_gauss(const Diagram& d) { return d.gauss_diagram(); }

Diagram connected_sum(const Diagram& a, const Diagram& b) {
  GaussCode code = a.gauss_code();
  const int offset = a.crossing_count();
  for (const Passage& p : b.gauss_code().passages) code.passages.push_back({p.crossing + offset, p.over});
  code.signs.insert(code.signs.end(), b.gauss_code().signs.begin(), b.gauss_code().signs.end());
  return Diagram::from_gauss(code);
}

Diagram mirror(const Diagram& d) {
  GaussCode code = d.gauss_code();
  for (Passage& p : code.passages) p.over = !p.over;
  for (int& s : code.signs) s = -s;
  return Diagram::from_gauss(code);
}

Diagram switch_crossing(const Diagram& d, int crossing) {
  if (crossing < 0 || crossing >= d.crossing_count())
    throw InvalidSite("switch: crossing " + std::to_string(crossing) + " out of range");
  GaussCode code = d.gauss_code();
  for (Passage& p : code.passages)
    if (p.crossing == crossing) p.over = !p.over;
  code.signs[crossing] = -code.signs[crossing];
  return Diagram::from_gauss(code);
}

Diagram rotate_basepoint(const Diagram& d, int shift) {
  GaussCode code = d.gauss_code();
  const int m = static_cast<int>(code.passages.size());
  if (m == 0) return d;
  shift = ((shift % m) + m) % m;
  std::rotate(code.passages.begin(), code.passages.begin() + shift, code.passages.end());
  return Diagram::from_gauss(code);
}

Diagram delete_crossings(const Diagram& d, std::span<const int> crossings) {
  const int n = d.crossing_count();
  std::vector<char> drop(n, 0);
  for (int c : crossings) {
    if (c < 0 || c >= n) throw InvalidSite("delete: crossing out of range");
    drop[c] = 1;
  }
  std::vector<int> remap(n, -1);
  GaussCode code;
  for (int c = 0; c < n; ++c)
    if (!drop[c]) {
      remap[c] = static_cast<int>(code.signs.size());
      code.signs.push_back(d.sign(c));
    }
  for (const Passage& p : d.gauss_code().passages)
    if (!drop[p.crossing]) code.passages.push_back({remap[p.crossing], p.over});
  return Diagram::from_gauss(code);
}

}  // namespace knotlab
