#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotlab/serialize.hpp"

namespace knotlab::workbench {

enum ExitCode : int { kOk = 0, kAssertionFailed = 1, kUsageError = 2 };

/// Append-only JSONL cache of invariant records keyed by canonical key.
/// Each line carries an FNV-1a checksum of its record; lines that fail the
/// check are skipped and counted.
class InvariantCache {
 public:
  InvariantCache() = default;
  explicit InvariantCache(std::filesystem::path file);

  std::optional<json> get(const std::string& key) const;
  void put(const std::string& key, const json& record);
  std::size_t size() const;
  int corrupt_lines() const { return corrupt_; }

 private:
  std::filesystem::path file_;
  std::unordered_map<std::string, json> entries_;
  int corrupt_ = 0;
  mutable std::mutex mutex_;
};

/// Header record; the timestamp is the only non-deterministic field in any
/// output.
json header_record(const std::string& command, std::uint64_t seed, const json& config);

void write_line(std::ostream& out, const json& record);

struct InvariantsOptions {
  std::string input;  // file path, "builtin", or an inline code
  std::optional<std::filesystem::path> cache;
  unsigned threads = 0;  // 0: hardware concurrency
};
int cmd_invariants(const InvariantsOptions& opt, std::ostream& out, std::ostream& err);

/// The full acceptance configuration.
json default_verify_config();
int cmd_verify(const json& config, std::optional<std::uint64_t> seed, std::ostream& out, std::ostream& err);

struct FamilyOptions {
  std::string base;  // code; empty for the unknot
  std::vector<int> orders;
  std::uint64_t seed = 1;
};
int cmd_family(const FamilyOptions& opt, std::ostream& out, std::ostream& err);

struct SearchOptions {
  std::string from;
  std::string to;
  std::vector<int> moves{2};
  bool delta_unknot = false;
  std::int64_t budget = kDefaultSearchBudget;
};
int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err);

/// Replays every path or certificate record in a JSON / JSONL file.
int cmd_path_replay(const std::filesystem::path& file, std::ostream& out, std::ostream& err);

/// Parses "2,2,2" or "2 2 2".
std::vector<int> parse_orders(const std::string& text);

}  // namespace knotlab::workbench
