#include "slimsell/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "slimsell/analysis.hpp"
#include "slimsell/generator.hpp"
#include "slimsell/repr.hpp"

namespace slimsell::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::ofstream open_csv(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const std::string path = dir + "/" + name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  return out;
}

std::int64_t sum_iteration_ns(const BfsResult& res) {
  std::int64_t total = 0;
  for (const auto& it : res.per_iter) total += it.elapsed_ns;
  return total;
}

std::int64_t median_of(std::vector<std::int64_t> v) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return (v[mid - 1] + v[mid]) / 2;
}

std::int64_t mean_of(const std::vector<std::int64_t>& v) {
  if (v.empty()) return 0;
  double sum = 0;
  for (auto x : v) sum += static_cast<double>(x);
  return std::llround(sum / static_cast<double>(v.size()));
}

const char* schedule_name(Schedule s) {
  return s == Schedule::static_blocks ? "static" : "dynamic";
}

/// Distances must match the oracle exactly; parents must form a valid BFS
/// tree. Returns a diff report on failure.
std::optional<std::string> verify_against_oracle(const CsrView& csr,
                                                 const BfsResult& run,
                                                 const BfsResult& oracle) {
  std::ostringstream diff;
  int mismatches = 0;
  const vid_t n = csr.num_vertices();
  for (vid_t v = 0; v < n && mismatches < 10; ++v) {
    if (run.dist[v] != oracle.dist[v]) {
      diff << "  vertex " << v << ": dist " << run.dist[v] << " vs oracle "
           << oracle.dist[v] << '\n';
      ++mismatches;
    }
  }
  if (mismatches > 0) return "distance mismatch:\n" + diff.str();

  if (!run.parent.empty()) {
    for (vid_t v = 0; v < n; ++v) {
      const vid_t p = run.parent[v];
      if (run.dist[v] == kInf) {
        if (p != kNoParent) {
          return "vertex " + std::to_string(v) + " unreached but parent set";
        }
        continue;
      }
      if (run.dist[v] == 0) {
        if (p != v) return "root " + std::to_string(v) + " not self-parented";
        continue;
      }
      if (p < 0 || p >= n || !csr.has_edge(p, v)) {
        return "vertex " + std::to_string(v) + ": parent " + std::to_string(p) +
               " is not a neighbor";
      }
      if (run.dist[p] != run.dist[v] - 1) {
        return "vertex " + std::to_string(v) + ": parent " + std::to_string(p) +
               " not one level closer";
      }
    }
  }
  return std::nullopt;
}

std::vector<vid_t> pick_roots(const RunConfig& cfg, vid_t n) {
  if (cfg.fixed_root) {
    if (*cfg.fixed_root < 0 || *cfg.fixed_root >= n) {
      throw std::invalid_argument("root " + std::to_string(*cfg.fixed_root) +
                                  " outside [0, " + std::to_string(n) + ")");
    }
    return {*cfg.fixed_root};
  }
  const vid_t want = std::min<vid_t>(std::max(cfg.random_roots, 1), n);
  SplitMix64 rng = SplitMix64(cfg.seed).split(0x526f);
  std::vector<vid_t> roots;
  std::vector<bool> used(n, false);
  while (static_cast<vid_t>(roots.size()) < want) {
    const vid_t r = static_cast<vid_t>(rng.next() % static_cast<std::uint64_t>(n));
    if (!used[r]) {
      used[r] = true;
      roots.push_back(r);
    }
  }
  return roots;
}

}  // namespace

Graph load_graph(const std::string& source) {
  if (is_gen_spec(source)) return generate(parse_gen_spec(source));
  const std::string text = read_file(source);
  if (text.rfind("%%MatrixMarket", 0) == 0) return from_matrix_market(text);
  return from_edge_list(text);
}

std::int64_t resolve_sigma(const std::string& text, std::int64_t C, vid_t n) {
  if (text == "n") {
    const std::int64_t chunks = C > 0 ? (n + C - 1) / C : 0;
    return std::max<std::int64_t>(1, chunks * C);
  }
  if (text == "sqrt_n") {
    const auto root = static_cast<std::int64_t>(
        std::ceil(std::sqrt(static_cast<double>(std::max<vid_t>(n, 0)))));
    const std::int64_t k = (root + C - 1) / C;
    return std::max<std::int64_t>(C, k * C);
  }
  if (text == "C") return C;
  std::int64_t v = 0;
  try {
    std::size_t used = 0;
    v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad sigma '" + text + "'");
  }
  if (v < 1) throw std::invalid_argument("sigma must be >= 1");
  return v;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(cfg.graph_source);
    const CsrView csr = to_csr(g);
    const vid_t n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("graph has no vertices");
    const std::vector<vid_t> roots = pick_roots(cfg, n);

    std::ofstream iter_csv = open_csv(cfg.out_dir, "iterations.csv");
    std::ofstream summary_csv = open_csv(cfg.out_dir, "summary.csv");
    iter_csv << "run,graph,n,m,C,sigma,semiring,slimwork,slimchunk_L,schedule,"
                "workers,root,repeat,iteration,elapsed_ns,chunks_processed,"
                "chunks_skipped,subchunks_processed,columns_processed,"
                "frontier_size\n";
    summary_csv << "graph,n,m,C,sigma,semiring,slimwork,slimchunk_L,schedule,"
                   "workers,root,repeats,iterations,verified,build_ns,"
                   "total_ns_mean,total_ns_median,iter_ns_mean,iter_ns_median\n";

    const std::string graph_field = csv_field(cfg.graph_source);
    std::int64_t run_id = 0;
    std::map<vid_t, BfsResult> oracle;

    for (const std::int64_t C : cfg.chunk_heights) {
      for (const std::string& sigma_text : cfg.sigmas) {
        const std::int64_t sigma = resolve_sigma(sigma_text, C, n);
        const auto build0 = std::chrono::steady_clock::now();
        SlimSellRepr repr = build_slimsell(g, C, sigma);
        const std::int64_t build_ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::steady_clock::now() - build0)
                .count();
        if (cfg.corrupt_repr && n > 1) {
          for (auto& c : repr.col) {
            if (c >= 0) {
              c = (c + 1) % n;
              break;
            }
          }
        }
        for (const Variant variant : cfg.semirings) {
          for (const vid_t root : roots) {
            std::vector<std::int64_t> totals;
            std::vector<std::int64_t> iter_times;
            std::int64_t iterations = 0;
            for (int rep = 0; rep < cfg.repeat; ++rep) {
              ++run_id;
              BfsOptions opts;
              opts.variant = variant;
              opts.slimwork = cfg.slimwork;
              opts.slimchunk_len = cfg.slimchunk_len;
              opts.schedule = cfg.schedule;
              opts.workers = cfg.workers;
              const BfsResult res = bfs_spmv(repr, root, opts, &csr);
              if (cfg.verify) {
                auto it = oracle.find(root);
                if (it == oracle.end()) {
                  it = oracle.emplace(root, bfs_traditional(csr, root)).first;
                }
                if (auto bad = verify_against_oracle(csr, res, it->second)) {
                  err << "verification failed: graph=" << cfg.graph_source
                      << " C=" << C << " sigma=" << sigma
                      << " semiring=" << variant_name(variant)
                      << " root=" << root << '\n'
                      << *bad << '\n';
                  return kExitVerify;
                }
              }
              for (const auto& it : res.per_iter) {
                iter_csv << run_id << ',' << graph_field << ',' << n << ','
                         << g.num_edges() << ',' << C << ',' << sigma << ','
                         << variant_name(variant) << ',' << (cfg.slimwork ? 1 : 0)
                         << ',' << cfg.slimchunk_len << ','
                         << schedule_name(cfg.schedule) << ',' << cfg.workers
                         << ',' << root << ',' << rep << ',' << it.iteration
                         << ',' << it.elapsed_ns << ',' << it.chunks_processed
                         << ',' << it.chunks_skipped << ','
                         << it.subchunks_processed << ','
                         << it.columns_processed << ',' << it.frontier_size
                         << '\n';
                iter_times.push_back(it.elapsed_ns);
              }
              totals.push_back(sum_iteration_ns(res));
              iterations = res.iterations;
            }
            summary_csv << graph_field << ',' << n << ',' << g.num_edges() << ','
                        << C << ',' << sigma << ',' << variant_name(variant)
                        << ',' << (cfg.slimwork ? 1 : 0) << ','
                        << cfg.slimchunk_len << ',' << schedule_name(cfg.schedule)
                        << ',' << cfg.workers << ',' << root << ',' << cfg.repeat
                        << ',' << iterations << ',' << (cfg.verify ? 1 : 0) << ','
                        << build_ns << ',' << mean_of(totals) << ','
                        << median_of(totals) << ',' << mean_of(iter_times) << ','
                        << median_of(iter_times) << '\n';
          }
        }
      }
    }
    out << "wrote " << cfg.out_dir << "/iterations.csv and " << cfg.out_dir
        << "/summary.csv (" << run_id << " runs)\n";
    return kExitOk;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitConfig;
  }
}

int cmd_storage(const StorageConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(cfg.graph_source);
    std::ofstream csv = open_csv(cfg.out_dir, "storage.csv");
    csv << "graph,n,m,C,sigma,n_chunks,P,csr_measured,csr_predicted,"
           "csr_weighted,al_measured,al_predicted,sell_measured,sell_predicted,"
           "slimsell_measured,slimsell_predicted,slimsell_vs_sell,"
           "slimsell_vs_al,slimsell_beats_al\n";
    for (const std::string& sigma_text : cfg.sigmas) {
      const std::int64_t sigma =
          resolve_sigma(sigma_text, cfg.chunk_height, g.num_vertices());
      const StorageReport rep = storage_report(g, cfg.chunk_height, sigma);
      out << render_storage_table(rep);
      csv << csv_field(cfg.graph_source) << ',' << rep.n << ',' << rep.m << ','
          << rep.C << ',' << rep.sigma << ',' << rep.n_chunks << ','
          << rep.padding << ',' << rep.csr_measured << ',' << rep.csr_predicted
          << ',' << rep.csr_weighted << ',' << rep.al_measured << ','
          << rep.al_predicted << ',' << rep.sell_measured << ','
          << rep.sell_predicted << ',' << rep.slimsell_measured << ','
          << rep.slimsell_predicted << ',' << rep.slimsell_vs_sell << ','
          << rep.slimsell_vs_al << ',' << (rep.slimsell_beats_al ? 1 : 0)
          << '\n';
    }
    return kExitOk;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitConfig;
  }
}

int cmd_dump(const DumpConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Graph g = load_graph(cfg.graph_source);
    const std::int64_t sigma =
        resolve_sigma(cfg.sigma, cfg.chunk_height, g.num_vertices());
    if (cfg.with_values) {
      out << dump_layout(
          build_sell_c_sigma(g, cfg.chunk_height, sigma, semiring(*cfg.with_values)));
    } else {
      out << dump_layout(build_slimsell(g, cfg.chunk_height, sigma));
    }
    return kExitOk;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitConfig;
  }
}

namespace {

bool laws_hold(const SemiringSpec& s, std::uint64_t seed, int triples,
               std::string& detail) {
  SplitMix64 rng = SplitMix64(seed).split(0x4c61);
  for (int i = 0; i < triples; ++i) {
    const val_t a = s.sample_scalar(rng.next());
    const val_t b = s.sample_scalar(rng.next());
    const val_t c = s.sample_scalar(rng.next());
    auto fail = [&](const char* law) {
      std::ostringstream os;
      os << s.name << ": " << law << " violated for (" << a << ", " << b << ", "
         << c << ")";
      detail = os.str();
      return false;
    };
    if (s.plus(s.plus(a, b), c) != s.plus(a, s.plus(b, c))) {
      return fail("plus associativity");
    }
    if (s.plus(a, b) != s.plus(b, a)) return fail("plus commutativity");
    if (s.times(s.times(a, b), c) != s.times(a, s.times(b, c))) {
      return fail("times associativity");
    }
    if (s.plus(a, s.zero) != a) return fail("additive identity");
    if (s.times(a, s.one) != a || s.times(s.one, a) != a) {
      return fail("multiplicative identity");
    }
    if (s.plus(a, s.times(b, s.pad_value)) != a) return fail("pad absorption");
  }
  return true;
}

struct SelftestCase {
  Graph graph;
  std::string name;
};

std::vector<SelftestCase> selftest_graphs(std::uint64_t seed) {
  std::vector<SelftestCase> cases;
  cases.push_back({gen_path(7), "path:n=7"});
  cases.push_back({gen_clique(5), "clique:n=5"});
  cases.push_back({gen_star(9), "star:n=9"});
  int idx = 0;
  for (vid_t n : {16, 33, 64}) {
    for (double p : {0.05, 0.15, 0.4}) {
      cases.push_back({gen_erdos_renyi(n, p, seed + idx),
                       "er:n=" + std::to_string(n) + ",p=" + std::to_string(p)});
      ++idx;
    }
  }
  for (std::int64_t scale : {4, 6}) {
    for (std::int64_t ef : {4, 8}) {
      cases.push_back({gen_kronecker(scale, ef, seed + idx),
                       "kron:scale=" + std::to_string(scale) +
                           ",ef=" + std::to_string(ef)});
      ++idx;
    }
  }
  return cases;
}

bool counters_equal(const BfsResult& a, const BfsResult& b) {
  if (a.dist != b.dist || a.parent != b.parent || a.iterations != b.iterations) {
    return false;
  }
  if (a.per_iter.size() != b.per_iter.size()) return false;
  for (std::size_t i = 0; i < a.per_iter.size(); ++i) {
    const auto& x = a.per_iter[i];
    const auto& y = b.per_iter[i];
    if (x.chunks_processed != y.chunks_processed ||
        x.chunks_skipped != y.chunks_skipped ||
        x.subchunks_processed != y.subchunks_processed ||
        x.columns_processed != y.columns_processed ||
        x.frontier_size != y.frontier_size) {
      return false;
    }
  }
  return true;
}

}  // namespace

int cmd_selftest(const SelftestConfig& cfg, std::ostream& out, std::ostream& err) {
  bool all_ok = true;
  const auto report = [&](const std::string& name, bool ok,
                          const std::string& detail) {
    if (ok) {
      out << "ok   " << name << '\n';
    } else {
      all_ok = false;
      err << "FAIL " << name << (detail.empty() ? "" : ": " + detail) << '\n';
    }
  };

  for (Variant v : kAllVariants) {
    SemiringSpec s = semiring(v);
    if (cfg.inject_bad_pad) {
      s.pad_value = v == Variant::tropical ? 0 : 1;
    }
    std::string detail;
    const bool ok = laws_hold(s, cfg.seed, 10000, detail);
    report(std::string("semiring laws (") + s.name + ")", ok, detail);
  }

  {
    std::string detail;
    bool ok = true;
    const auto cases = selftest_graphs(cfg.seed);
    for (const auto& tc : cases) {
      const CsrView csr = to_csr(tc.graph);
      const vid_t n = tc.graph.num_vertices();
      const std::vector<vid_t> roots = {0, n / 2};
      for (const std::int64_t C : {2, 8}) {
        for (const std::int64_t sigma : {std::int64_t{1}, std::int64_t{n}}) {
          const SlimSellRepr repr = build_slimsell(tc.graph, C, std::max<std::int64_t>(sigma, 1));
          for (const vid_t root : roots) {
            const BfsResult oracle = bfs_traditional(csr, root);
            for (Variant variant : kAllVariants) {
              for (bool slimwork : {false, true}) {
                for (std::int64_t L : {std::int64_t{0}, std::int64_t{4}}) {
                  BfsOptions opts;
                  opts.variant = variant;
                  opts.slimwork = slimwork;
                  opts.slimchunk_len = L;
                  const BfsResult res = bfs_spmv(repr, root, opts, &csr);
                  if (auto bad = verify_against_oracle(csr, res, oracle)) {
                    std::ostringstream os;
                    os << tc.name << " C=" << C << " sigma=" << sigma
                       << " semiring=" << variant_name(variant)
                       << " slimwork=" << slimwork << " L=" << L
                       << " root=" << root << ": " << *bad;
                    detail = os.str();
                    ok = false;
                  }
                }
              }
            }
          }
        }
      }
      if (!ok) break;
    }
    report("oracle equivalence", ok, detail);
  }

  {
    std::string detail;
    bool ok = true;
    SplitMix64 rng = SplitMix64(cfg.seed).split(0x5054);
    const std::int64_t heights[] = {1, 2, 4, 8, 16};
    for (int i = 0; i < 200 && ok; ++i) {
      const vid_t n = 1 + static_cast<vid_t>(rng.next() % 80);
      const double p = rng.next_unit() * 0.3;
      const Graph g = gen_erdos_renyi(n, p, rng.next());
      const std::int64_t C = heights[i % 5];
      const PaddingBound pb = check_padding_bound(g, C);
      if (!pb.holds) {
        detail = "n=" + std::to_string(n) + " C=" + std::to_string(C) +
                 ": " + std::to_string(pb.measured_cells) + " > " +
                 std::to_string(pb.bound);
        ok = false;
      }
    }
    report("padding bound (sigma = n)", ok, detail);
  }

  {
    std::string detail;
    bool ok = true;
    const Graph g = gen_kronecker(6, 8, cfg.seed);
    const CsrView csr = to_csr(g);
    const SlimSellRepr repr = build_slimsell(g, 8, g.num_vertices());
    for (Variant variant : {Variant::tropical, Variant::selmax}) {
      for (Schedule sched : {Schedule::static_blocks, Schedule::dynamic_queue}) {
        BfsOptions opts;
        opts.variant = variant;
        opts.slimwork = true;
        opts.slimchunk_len = 4;
        opts.schedule = sched;
        opts.workers = 1;
        const BfsResult base = bfs_spmv(repr, 0, opts, &csr);
        for (int workers : {4, cfg.workers}) {
          opts.workers = workers;
          const BfsResult res = bfs_spmv(repr, 0, opts, &csr);
          if (!counters_equal(base, res)) {
            detail = std::string(variant_name(variant)) + " " +
                     schedule_name(sched) + " workers=" +
                     std::to_string(workers) + ": results differ";
            ok = false;
          }
        }
      }
    }
    report("determinism across workers", ok, detail);
  }

  return all_ok ? kExitOk : kExitVerify;
}

}  // namespace slimsell::cli
