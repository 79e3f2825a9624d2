// Command-line front end: build or load graphs, run BFS sweeps with
// per-iteration CSV output, print storage reports and layout dumps, and
// run the embedded self-test suites.

#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slimsell/cli.hpp"

namespace {

using slimsell::Variant;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = s.find(',', pos);
    const std::size_t end = comma == std::string::npos ? s.size() : comma;
    if (end > pos) out.push_back(s.substr(pos, end - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<Variant> parse_semirings(const std::string& list) {
  std::vector<Variant> out;
  for (const auto& name : split_list(list)) {
    const auto v = slimsell::parse_variant(name);
    if (!v) throw CLI::ValidationError("--semiring", "unknown semiring '" + name + "'");
    out.push_back(*v);
  }
  if (out.empty()) throw CLI::ValidationError("--semiring", "empty semiring list");
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& flag,
                                         const std::string& list) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(list)) {
    try {
      out.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "bad integer '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

slimsell::Schedule parse_schedule(const std::string& s) {
  if (s == "static") return slimsell::Schedule::static_blocks;
  if (s == "dynamic") return slimsell::Schedule::dynamic_queue;
  throw CLI::ValidationError("--schedule", "expected static or dynamic");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SlimSell BFS benchmark harness"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run BFS sweeps and emit CSV");
  std::string run_graph, run_chunks = "8", run_sigmas = "n";
  std::string run_semirings = "tropical", run_root = "random:1";
  std::string run_slimwork = "off", run_slimchunk = "off", run_schedule = "static";
  std::string run_verify = "on", run_out = ".";
  std::uint64_t run_seed = 1;
  int run_workers = 1, run_repeat = 1;
  bool run_corrupt = false;
  run->add_option("--graph", run_graph, "file path or generator spec")->required();
  run->add_option("--chunk-height", run_chunks, "comma list of C values");
  run->add_option("--sigma", run_sigmas, "comma list: int, n, sqrt_n, C");
  run->add_option("--semiring", run_semirings,
                  "comma list: tropical, real, boolean, selmax");
  run->add_option("--root", run_root, "vertex id or random:k");
  run->add_option("--seed", run_seed, "seed for generators and root choice");
  run->add_option("--slimwork", run_slimwork, "on|off");
  run->add_option("--slimchunk", run_slimchunk, "off or max subchunk columns L");
  run->add_option("--schedule", run_schedule, "static|dynamic");
  run->add_option("--workers", run_workers, "worker threads inside one BFS");
  run->add_option("--repeat", run_repeat, "repeats per configuration");
  run->add_option("--verify", run_verify, "on|off: check against queue BFS");
  run->add_option("--out", run_out, "output directory for CSV files");
  run->add_flag("--corrupt-repr", run_corrupt,
                "test hook: damage the representation to exercise verification");

  // storage
  auto* storage = app.add_subcommand("storage", "storage report per sigma");
  std::string st_graph, st_sigmas = "n", st_out = ".";
  std::int64_t st_chunk = 8;
  storage->add_option("--graph", st_graph)->required();
  storage->add_option("--chunk-height", st_chunk);
  storage->add_option("--sigma", st_sigmas, "comma list: int, n, sqrt_n, C");
  storage->add_option("--out", st_out);

  // dump
  auto* dump = app.add_subcommand("dump", "print the chunked layout");
  std::string dp_graph, dp_sigma = "n", dp_semiring;
  std::int64_t dp_chunk = 8;
  dump->add_option("--graph", dp_graph)->required();
  dump->add_option("--chunk-height", dp_chunk);
  dump->add_option("--sigma", dp_sigma);
  dump->add_option("--semiring", dp_semiring,
                   "also dump the value grid of this semiring");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "embedded invariant suites");
  std::uint64_t sf_seed = 7;
  int sf_workers = 8;
  bool sf_bad_pad = false;
  selftest->add_option("--seed", sf_seed);
  selftest->add_option("--workers", sf_workers);
  selftest->add_flag("--inject-bad-pad", sf_bad_pad,
                     "test hook: corrupt the padding value to prove detection");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      slimsell::cli::RunConfig cfg;
      cfg.graph_source = run_graph;
      cfg.chunk_heights = parse_int_list("--chunk-height", run_chunks);
      cfg.sigmas = split_list(run_sigmas);
      cfg.semirings = parse_semirings(run_semirings);
      if (run_root.rfind("random:", 0) == 0) {
        cfg.random_roots = std::stoi(run_root.substr(7));
      } else {
        cfg.fixed_root = std::stoll(run_root);
      }
      cfg.seed = run_seed;
      cfg.slimwork = run_slimwork == "on";
      cfg.slimchunk_len = run_slimchunk == "off" ? 0 : std::stoll(run_slimchunk);
      cfg.schedule = parse_schedule(run_schedule);
      cfg.workers = run_workers;
      cfg.repeat = run_repeat;
      cfg.verify = run_verify != "off";
      cfg.out_dir = run_out;
      cfg.corrupt_repr = run_corrupt;
      return slimsell::cli::cmd_run(cfg);
    }
    if (storage->parsed()) {
      slimsell::cli::StorageConfig cfg;
      cfg.graph_source = st_graph;
      cfg.chunk_height = st_chunk;
      cfg.sigmas = split_list(st_sigmas);
      cfg.out_dir = st_out;
      return slimsell::cli::cmd_storage(cfg);
    }
    if (dump->parsed()) {
      slimsell::cli::DumpConfig cfg;
      cfg.graph_source = dp_graph;
      cfg.chunk_height = dp_chunk;
      cfg.sigma = dp_sigma;
      if (!dp_semiring.empty()) {
        const auto v = slimsell::parse_variant(dp_semiring);
        if (!v) {
          std::cerr << "error: unknown semiring '" << dp_semiring << "'\n";
          return slimsell::cli::kExitConfig;
        }
        cfg.with_values = *v;
      }
      return slimsell::cli::cmd_dump(cfg);
    }
    slimsell::cli::SelftestConfig cfg;
    cfg.seed = sf_seed;
    cfg.workers = sf_workers;
    cfg.inject_bad_pad = sf_bad_pad;
    return slimsell::cli::cmd_selftest(cfg);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return slimsell::cli::kExitConfig;
  }
}
