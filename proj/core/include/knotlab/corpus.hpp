#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "knotlab/diagram.hpp"

namespace knotlab {

struct CorpusEntry {
  std::string name;
  std::string code;
  Diagram diagram;
};

/// Prime knots through nine crossings (a selection) plus the unknot, from DT
/// codes. Chirality of each entry is whatever its DT code realises.
const std::vector<CorpusEntry>& builtin_corpus();

/// Entries with at most `max_crossings` crossings.
std::vector<CorpusEntry> corpus_up_to(int max_crossings);

const CorpusEntry& corpus_entry(const std::string& name);

/// One result per non-blank, non-comment line of a `name<TAB>code` file.
struct CorpusLine {
  int line = 0;
  std::string name;
  std::string code;
  std::optional<Diagram> diagram;
  std::string error;
};
std::vector<CorpusLine> read_corpus(std::istream& in);

/// Splits "name<TAB>code" (or "name code..." when there is no tab).
std::pair<std::string, std::string> split_corpus_line(const std::string& line);

}  // namespace knotlab
