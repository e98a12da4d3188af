#include "knotlab/corpus.hpp"

#include <stdexcept>
#include <tuple>

#include "knotlab/codes.hpp"

namespace knotlab {

namespace {

struct RawEntry {
  const char* name;
  const char* code;
};

constexpr RawEntry kCorpus[] = {
    {"0_1", ""},
    {"3_1", "4 6 2"},
    {"4_1", "4 6 8 2"},
    {"5_1", "6 8 10 2 4"},
    {"5_2", "4 8 10 2 6"},
    {"6_1", "4 8 12 10 2 6"},
    {"6_2", "4 8 10 12 2 6"},
    {"6_3", "4 8 10 2 12 6"},
    {"7_1", "8 10 12 14 2 4 6"},
    {"7_2", "4 10 14 12 2 8 6"},
    {"7_3", "6 10 12 14 2 4 8"},
    {"7_4", "6 10 12 14 4 2 8"},
    {"7_5", "4 10 12 14 2 8 6"},
    {"7_6", "4 8 12 2 14 6 10"},
    {"7_7", "4 8 10 12 2 14 6"},
    {"8_1", "4 10 16 14 12 2 8 6"},
    {"8_2", "4 10 12 14 16 2 6 8"},
    {"8_3", "6 12 10 16 14 4 2 8"},
    {"8_4", "6 10 12 16 14 4 2 8"},
    {"8_5", "6 8 12 2 14 16 4 10"},
    {"8_19", "4 8 -12 2 -14 -16 -6 -10"},
    {"8_20", "4 8 -12 2 -14 -6 -16 -10"},
    {"8_21", "4 8 -12 2 14 -6 16 10"},
    {"9_1", "10 12 14 16 18 2 4 6 8"},
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (const RawEntry& r : kCorpus) out.push_back({r.name, r.code, parse_code(r.code)});
    return out;
  }();
  return corpus;
}

std::vector<CorpusEntry> corpus_up_to(int max_crossings) {
  std::vector<CorpusEntry> out;
  for (const auto& e : builtin_corpus())
    if (e.diagram.crossing_count() <= max_crossings) out.push_back(e);
  return out;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : builtin_corpus())
    if (e.name == name) return e;
  throw std::out_of_range("no corpus entry named " + name);
}

std::pair<std::string, std::string> split_corpus_line(const std::string& line) {
  const std::string t = trim(line);
  auto cut = t.find('\t');
  if (cut == std::string::npos) cut = t.find(' ');
  if (cut == std::string::npos) return {t, ""};
  return {trim(t.substr(0, cut)), trim(t.substr(cut + 1))};
}

std::vector<CorpusLine> read_corpus(std::istream& in) {
  std::vector<CorpusLine> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    CorpusLine entry;
    entry.line = number;
    std::tie(entry.name, entry.code) = split_corpus_line(t);
    try {
      entry.diagram = parse_code(entry.code);
    } catch (const KnotlabError& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace knotlab
