#pragma once

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "slimsell/bfs.hpp"
#include "slimsell/graph.hpp"
#include "slimsell/semiring.hpp"

namespace slimsell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;  // I/O or configuration trouble
inline constexpr int kExitVerify = 2;  // an invariant or oracle check failed

/// Loads a graph from a generator spec ("er:...", "kron:...", "path:...")
/// or from a file (MatrixMarket is sniffed from the banner, anything else
/// parses as an edge list).
Graph load_graph(const std::string& source);

/// Resolves a sigma flag value for a concrete graph: an integer, or the
/// presets "n" (padded vertex count), "sqrt_n" (smallest multiple of C
/// >= sqrt(n)), "C".
std::int64_t resolve_sigma(const std::string& text, std::int64_t C, vid_t n);

struct RunConfig {
  std::string graph_source;
  std::vector<std::int64_t> chunk_heights = {8};
  std::vector<std::string> sigmas = {"n"};
  std::vector<Variant> semirings = {Variant::tropical};
  std::optional<vid_t> fixed_root;
  int random_roots = 1;
  std::uint64_t seed = 1;
  bool slimwork = false;
  std::int64_t slimchunk_len = 0;  // 0 = off
  Schedule schedule = Schedule::static_blocks;
  int workers = 1;
  int repeat = 1;
  bool verify = true;
  std::string out_dir = ".";
  bool corrupt_repr = false;  // test hook: damages one column entry
};

struct StorageConfig {
  std::string graph_source;
  std::int64_t chunk_height = 8;
  std::vector<std::string> sigmas = {"n"};
  std::string out_dir = ".";
};

struct DumpConfig {
  std::string graph_source;
  std::int64_t chunk_height = 8;
  std::string sigma = "n";
  std::optional<Variant> with_values;  // also dump the val grid
};

struct SelftestConfig {
  std::uint64_t seed = 7;
  int workers = 8;            // upper worker count for determinism checks
  bool inject_bad_pad = false;  // test hook: breaks the pad-absorption law
};

int cmd_run(const RunConfig& cfg, std::ostream& out = std::cout,
            std::ostream& err = std::cerr);
int cmd_storage(const StorageConfig& cfg, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);
int cmd_dump(const DumpConfig& cfg, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);
int cmd_selftest(const SelftestConfig& cfg, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr);

}  // namespace slimsell::cli
