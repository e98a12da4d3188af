#include "knotlab/arrows.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace knotlab {

namespace {

struct Endpoint {
  int pos;
  int arrow;
  bool tail;
};

ArrowSignature encode(std::array<Endpoint, 6>& pts, int arrows) {
  const int k = 2 * arrows;
  std::sort(pts.begin(), pts.begin() + k, [](const Endpoint& a, const Endpoint& b) { return a.pos < b.pos; });
  std::array<int, 3> label{-1, -1, -1};
  int next = 0;
  std::uint32_t code = 0;
  for (int i = 0; i < k; ++i) {
    int& l = label[pts[i].arrow];
    if (l < 0) l = next++;
    code |= static_cast<std::uint32_t>((l << 1) | (pts[i].tail ? 1 : 0)) << (3 * i);
  }
  return {arrows, code};
}

}  // namespace

ArrowSignature signature_of(const std::vector<std::pair<int, int>>& arrows) {
  if (arrows.empty() || arrows.size() > 3) throw std::invalid_argument("signature_of: 1 to 3 arrows");
  std::array<Endpoint, 6> pts{};
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    pts[2 * a] = {arrows[a].first, static_cast<int>(a), true};
    pts[2 * a + 1] = {arrows[a].second, static_cast<int>(a), false};
  }
  return encode(pts, static_cast<int>(arrows.size()));
}

std::string describe(const ArrowSignature& sig) {
  std::ostringstream os;
  for (int i = 0; i < 2 * sig.arrows; ++i) {
    const std::uint32_t v = (sig.code >> (3 * i)) & 7u;
    if (i) os << ' ';
    os << ((v & 1u) ? 'T' : 'H') << (v >> 1) + 1;
  }
  return os.str();
}

ArrowSignature parse_signature(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  std::vector<std::pair<int, int>> arrows(3, {-1, -1});
  int pos = 0, count = 0;
  while (is >> tok) {
    if (tok.size() != 2 || (tok[0] != 'T' && tok[0] != 'H') || tok[1] < '1' || tok[1] > '3')
      throw std::invalid_argument("bad arrow token " + tok);
    const int a = tok[1] - '1';
    (tok[0] == 'T' ? arrows[a].first : arrows[a].second) = pos++;
    count = std::max(count, a + 1);
  }
  arrows.resize(count);
  for (const auto& [t, h] : arrows)
    if (t < 0 || h < 0) throw std::invalid_argument("arrow signature missing an endpoint");
  return signature_of(arrows);
}

std::map<ArrowSignature, std::int64_t> arrow_counts(const GaussDiagram& g, int arrows) {
  std::map<ArrowSignature, std::int64_t> out;
  const int n = static_cast<int>(g.arrows.size());
  std::array<Endpoint, 6> pts{};
  auto load = [&](int slot, const Arrow& a) {
    pts[2 * slot] = {a.tail, slot, true};
    pts[2 * slot + 1] = {a.head, slot, false};
  };
  if (arrows == 1) {
    for (int i = 0; i < n; ++i) {
      load(0, g.arrows[i]);
      out[encode(pts, 1)] += g.arrows[i].sign;
    }
  } else if (arrows == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        load(0, g.arrows[i]);
        load(1, g.arrows[j]);
        out[encode(pts, 2)] += g.arrows[i].sign * g.arrows[j].sign;
      }
  } else if (arrows == 3) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          load(0, g.arrows[i]);
          load(1, g.arrows[j]);
          load(2, g.arrows[k]);
          out[encode(pts, 3)] += g.arrows[i].sign * g.arrows[j].sign * g.arrows[k].sign;
        }
  } else {
    throw std::invalid_argument("arrow_counts: 1 to 3 arrows");
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::int64_t arrow_count(const GaussDiagram& g, const ArrowSignature& pattern) {
  const auto counts = arrow_counts(g, pattern.arrows);
  auto it = counts.find(pattern);
  return it == counts.end() ? 0 : it->second;
}

}  // namespace knotlab
