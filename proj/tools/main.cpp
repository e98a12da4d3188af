#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "knotlab/version.hpp"
#include "workbench.hpp"

using namespace knotlab;
using namespace knotlab::workbench;

int main(int argc, char** argv) {
  CLI::App app{"knotlab: knot diagrams, finite-type invariants and Brunnian local moves"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  std::int64_t budget = -1;
  std::string cache_path, config_path;

  InvariantsOptions inv;
  auto* invariants = app.add_subcommand("invariants", "Invariant records for a corpus file, 'builtin', or an inline code");
  invariants->add_option("input", inv.input, "name<TAB>code file, 'builtin', or a DT/PD code")->required();
  invariants->add_option("--cache", cache_path, "Append-only invariant cache file");
  invariants->add_option("--threads", inv.threads, "Worker threads (0: all cores)");

  auto* verify = app.add_subcommand("verify", "Run verification suites from a JSON config (default: full acceptance suite)");
  verify->add_option("--config", config_path, "Suite configuration (JSON)");
  verify->add_option("--seed", seed, "Master seed overriding per-suite seeds");

  FamilyOptions fam;
  std::string orders_text = "2,2,2";
  auto* family_cmd = app.add_subcommand("family", "Generate a singular family and its alternating sums");
  family_cmd->add_option("--base", fam.base, "Base knot code (default: unknot)");
  family_cmd->add_option("--orders", orders_text, "Chord orders, e.g. 2,2,2 (empty for none)");
  family_cmd->add_option("--seed", fam.seed, "Seed");

  SearchOptions srch;
  std::string moves_text = "2";
  auto* search = app.add_subcommand("search", "Bounded search for a move path between two diagrams");
  search->add_option("--from", srch.from, "Start code")->required();
  search->add_option("--to", srch.to, "Target code (default: unknot)");
  search->add_option("--moves", moves_text, "Chord orders to use, e.g. 2 or 3,4");
  search->add_flag("--delta-unknot", srch.delta_unknot, "Search delta moves to the unknot instead");
  search->add_option("--budget", budget, "State budget");

  std::string replay_file;
  auto* replay = app.add_subcommand("path-replay", "Replay paths and certificates stored in a JSON/JSONL file");
  replay->add_option("file", replay_file, "File to replay")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*invariants) {
      if (!cache_path.empty()) inv.cache = cache_path;
      return cmd_invariants(inv, std::cout, std::cerr);
    }
    if (*verify) {
      json config = default_verify_config();
      if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) {
          std::cerr << "verify: cannot open " << config_path << '\n';
          return kUsageError;
        }
        try {
          config = json::parse(in);
        } catch (const json::parse_error& e) {
          std::cerr << "verify: " << e.what() << '\n';
          return kUsageError;
        }
      }
      return cmd_verify(config, seed, std::cout, std::cerr);
    }
    if (*family_cmd) {
      fam.orders = parse_orders(orders_text);
      return cmd_family(fam, std::cout, std::cerr);
    }
    if (*search) {
      srch.moves = parse_orders(moves_text);
      if (budget > 0) srch.budget = budget;
      return cmd_search(srch, std::cout, std::cerr);
    }
    if (*replay) return cmd_path_replay(replay_file, std::cout, std::cerr);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
