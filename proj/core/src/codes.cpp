#include "knotlab/codes.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace knotlab {

namespace {

std::vector<long> extract_integers(std::string_view text, bool allow_pd_syntax) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
      continue;
    }
    if (allow_pd_syntax && (ch == 'X' || ch == '[' || ch == ']' || ch == '(' || ch == ')')) {
      ++i;
      continue;
    }
    if (allow_pd_syntax && text.substr(i, 2) == "PD") {
      i += 2;
      continue;
    }
    if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const std::string token(text.substr(i, j - i));
      if (token == "-" || token == "+") throw ParseError("malformed token '" + token + "'");
      if (j - i > 9) throw ParseError("integer too large: " + token);
      out.push_back(std::stol(token));
      i = j;
      continue;
    }
    throw ParseError(std::string("malformed token at '") + std::string(text.substr(i, 8)) + "'");
  }
  return out;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
  const std::vector<long> values = extract_integers(text, true);
  if (values.size() % 4 != 0) throw ParseError("PD code: entry count is not a multiple of 4");
  const int n = static_cast<int>(values.size() / 4);
  if (n == 0) return Diagram{};

  std::map<long, std::vector<std::pair<int, int>>> where;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      const long label = values[4 * c + s];
      if (label <= 0) throw ParseError("PD code: edge labels must be positive");
      where[label].push_back({c, s});
    }
  for (const auto& [label, occ] : where)
    if (occ.size() != 2)
      throw ParseError("PD code: edge " + std::to_string(label) + " occurs " + std::to_string(occ.size()) +
                       " times (expected 2)");

  auto other = [&](int c, int s) {
    const auto& occ = where.at(values[4 * c + s]);
    return occ[0] == std::make_pair(c, s) ? occ[1] : occ[0];
  };

  // Walk from crossing 0, entering on its under-strand.
  std::vector<int> sign(n, 0);
  std::vector<int> visits(n, 0);
  std::vector<Passage> passages;
  std::vector<long> incoming_label;
  int c = 0, s = 0;
  for (;;) {
    if (s == 2) throw ParseError("PD code: orientation conflict on an under-strand");
    const bool over = (s % 2) == 1;
    if (over) {
      const int sg = s == 3 ? 1 : -1;
      if (sign[c] != 0 && sign[c] != sg) throw ParseError("PD code: inconsistent over-strand orientation");
      sign[c] = sg;
    }
    if (++visits[c] > 2) throw ParseError("PD code: traversal revisits a crossing");
    passages.push_back({c, over});
    incoming_label.push_back(values[4 * c + s]);
    const auto [nc, ns] = other(c, (s + 2) % 4);
    c = nc;
    s = ns;
    if (c == 0 && s == 0) break;
    if (passages.size() > static_cast<std::size_t>(2 * n)) throw ParseError("PD code: traversal does not close");
  }
  if (static_cast<int>(passages.size()) != 2 * n) throw ParseError("PD code: multiple components");
  for (int k = 0; k < n; ++k)
    if (visits[k] != 2 || sign[k] == 0) throw ParseError("PD code: multiple components");

  // Basepoint on the lowest-numbered edge.
  const auto lowest = std::min_element(incoming_label.begin(), incoming_label.end()) - incoming_label.begin();
  std::rotate(passages.begin(), passages.begin() + lowest, passages.end());

  GaussCode code{std::move(passages), std::move(sign)};
  Diagram d = Diagram::from_gauss(code);
  if (!d.is_planar()) throw ParseError("PD code: not a planar diagram");
  return d;
}

std::string emit_pd(const Diagram& d) { return d.pd_string(); }

Diagram parse_dt(std::string_view text) {
  const std::vector<long> values = extract_integers(text, false);
  const int n = static_cast<int>(values.size());
  if (n == 0) return Diagram{};
  if (n > kMaxDtCrossings) throw LimitExceeded("DT code: more than " + std::to_string(kMaxDtCrossings) + " crossings");

  std::vector<char> used(2 * n + 1, 0);
  GaussCode code;
  code.passages.resize(2 * n);
  code.signs.assign(n, 1);
  for (int i = 0; i < n; ++i) {
    const long v = values[i];
    const long a = v < 0 ? -v : v;
    if (a % 2 != 0) throw ParseError("DT code: odd entry " + std::to_string(v));
    if (a < 2 || a > 2 * n) throw ParseError("DT code: entry out of range " + std::to_string(v));
    if (used[a]) throw ParseError("DT code: repeated entry " + std::to_string(a));
    used[a] = 1;
    const int odd = 2 * i;  // 0-based position of label 2i+1
    const int even = static_cast<int>(a) - 1;
    const bool odd_over = v > 0;
    code.passages[odd] = {i, odd_over};
    code.passages[even] = {i, !odd_over};
  }

  // The embedding is fixed by the sign of each crossing once over/under is
  // known; search for a sign vector whose rotation system is planar. Crossing
  // 0 is pinned, which selects one of the two mirror-related embeddings.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 1; i < n; ++i) code.signs[i] = ((mask >> (i - 1)) & 1u) ? -1 : 1;
    Diagram d = Diagram::from_gauss(code);
    if (d.is_planar()) return d;
  }
  throw ParseError("DT code: no planar realization");
}

std::string emit_dt(const Diagram& d) {
  const int n = d.crossing_count();
  const auto& passages = d.gauss_code().passages;
  std::vector<int> first(n, -1), second(n, -1);
  for (int t = 0; t < 2 * n; ++t) (first[passages[t].crossing] < 0 ? first : second)[passages[t].crossing] = t;

  std::vector<std::pair<int, long>> entries;
  for (int c = 0; c < n; ++c) {
    int odd = first[c], even = second[c];
    if (odd % 2 != 0) std::swap(odd, even);  // 0-based even index == odd label
    if (odd % 2 != 0 || even % 2 != 1) throw ParseError("DT code: diagram violates Gauss parity");
    const long value = even + 1;
    entries.push_back({odd, passages[odd].over ? value : -value});
  }
  std::sort(entries.begin(), entries.end());
  std::ostringstream os;
  for (std::size_t i = 0; i < entries.size(); ++i) os << (i ? " " : "") << entries[i].second;
  return os.str();
}

Diagram parse_code(std::string_view text) {
  const bool pd = text.find_first_of("X[]()") != std::string_view::npos;
  return pd ? parse_pd(text) : parse_dt(text);
}

}  // namespace knotlab
