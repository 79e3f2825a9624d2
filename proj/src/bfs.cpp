#include "slimsell/bfs.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace slimsell {

SubchunkPlan plan_subchunks(const SlimSellRepr& r, std::int64_t L) {
  if (L < 1) throw std::invalid_argument("subchunk length must be >= 1");
  SubchunkPlan plan;
  plan.chunk_first.reserve(r.n_chunks + 1);
  for (std::int64_t i = 0; i < r.n_chunks; ++i) {
    plan.chunk_first.push_back(static_cast<std::int64_t>(plan.segments.size()));
    for (std::int64_t c = 0; c < r.cl[i]; c += L) {
      plan.segments.push_back({i, c, std::min(L, r.cl[i] - c)});
    }
  }
  plan.chunk_first.push_back(static_cast<std::int64_t>(plan.segments.size()));
  return plan;
}

std::vector<val_t> combine_partials(const SemiringSpec& s,
                                    const std::vector<std::vector<val_t>>& partials) {
  if (partials.empty()) return {};
  std::vector<val_t> out = partials.front();
  for (std::size_t i = 1; i < partials.size(); ++i) {
    if (partials[i].size() != out.size()) {
      throw std::invalid_argument("partial accumulator length mismatch");
    }
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = s.plus(out[j], partials[i][j]);
    }
  }
  return out;
}

namespace {

// Scheduling unit of one iteration: a chunk (slimchunk off) or one column
// segment of a chunk.
struct Task {
  std::int64_t chunk;
  std::int64_t col_begin;
  std::int64_t col_len;
  std::int64_t partial;  // index of the partial buffer; -1 writes out directly
  bool seed_from_input;  // first segment of its chunk
};

class BfsEngine {
 public:
  BfsEngine(const SlimSellRepr& r, vid_t root, const BfsOptions& opts)
      : r_(r), opts_(opts), spec_(semiring(opts.variant)) {
    const IterationState init = init_state(opts.variant, r.n, root);
    st_.variant = opts_.variant;
    st_.x = permute_in(init.x, r_, spec_.zero);
    st_.f = permute_in(init.f, r_, opts_.variant == Variant::tropical ? kInf : 0);
    st_.d = permute_in(init.d, r_, kInf);
    if (!init.g.empty()) st_.g = permute_in(init.g, r_, 0);
    if (!init.p.empty()) st_.p = permute_in(init.p, r_, 0);
    x_prev_ = st_.x;
    if (opts_.slimchunk_len > 0) {
      plan_ = plan_subchunks(r_, opts_.slimchunk_len);
      partials_.resize(plan_.segments.size() * r_.C);
    }
  }

  BfsResult run() {
    const std::int64_t cap =
        opts_.max_iterations > 0 ? opts_.max_iterations : r_.n + 1;
    BfsResult res;
    bool converged = r_.n == 0;
    for (std::int64_t k = 1; !converged && k <= cap; ++k) {
      const auto t0 = std::chrono::steady_clock::now();
      IterStats stats = iterate(k);
      converged = is_converged(st_, x_prev_);
      stats.iteration = k;
      stats.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
      res.per_iter.push_back(stats);
    }
    res.iterations = static_cast<std::int64_t>(res.per_iter.size());
    res.dist = permute_out(st_.d, r_);
    if (!converged) {
      throw BfsCapError("iteration cap " + std::to_string(cap) +
                            " reached before fixed point",
                        std::move(res));
    }
    return res;
  }

  std::vector<vid_t> selmax_parents() const {
    std::vector<vid_t> parent(r_.n, kNoParent);
    for (vid_t pos = 0; pos < r_.n; ++pos) {
      const val_t pv = st_.p[pos];
      if (pv != 0) parent[r_.perm[pos]] = r_.perm[static_cast<vid_t>(pv) - 1];
    }
    return parent;
  }

 private:
  IterStats iterate(std::int64_t k) {
    IterStats stats;
    std::swap(x_prev_, st_.x);
    // The product gathers from (and seeds with) the previous frontier for
    // the filtered variants and the previous result for the others.
    const bool input_is_frontier = opts_.variant == Variant::real ||
                                   opts_.variant == Variant::boolean;
    const std::vector<val_t>& input = input_is_frontier ? st_.f : x_prev_;

    tasks_.clear();
    for (std::int64_t i = 0; i < r_.n_chunks; ++i) {
      const vid_t row0 = r_.chunk_row_begin(i);
      if (opts_.slimwork && should_skip_chunk(st_, row0, r_.chunk_row_end(i))) {
        // Carry the previous product result forward for these rows.
        std::copy_n(x_prev_.begin() + row0, r_.C, st_.x.begin() + row0);
        ++stats.chunks_skipped;
        continue;
      }
      ++stats.chunks_processed;
      stats.columns_processed += r_.cl[i];
      if (opts_.slimchunk_len <= 0) {
        tasks_.push_back({i, 0, r_.cl[i], -1, true});
      } else {
        if (plan_.chunk_first[i] == plan_.chunk_first[i + 1]) {
          // Empty chunk: the product degenerates to the seed.
          std::copy_n(input.begin() + row0, r_.C, st_.x.begin() + row0);
          continue;
        }
        for (std::int64_t sidx = plan_.chunk_first[i];
             sidx < plan_.chunk_first[i + 1]; ++sidx) {
          const auto& seg = plan_.segments[sidx];
          tasks_.push_back({seg.chunk, seg.col_begin, seg.col_len, sidx,
                            sidx == plan_.chunk_first[i]});
        }
      }
    }
    stats.subchunks_processed =
        opts_.slimchunk_len > 0 ? static_cast<std::int64_t>(tasks_.size()) : 0;

    run_tasks(input);
    if (opts_.slimchunk_len > 0) combine_chunks(k);

    post_process(st_, k);
    for (vid_t pos = 0; pos < r_.n; ++pos) {
      if (opts_.variant == Variant::tropical) {
        stats.frontier_size += x_prev_[pos] == kInf && st_.x[pos] != kInf;
      } else {
        stats.frontier_size += st_.f[pos] != 0;
      }
    }
    return stats;
  }

  void run_task(const Task& t, const std::vector<val_t>& input) {
    std::span<val_t> acc;
    if (t.partial < 0) {
      acc = std::span<val_t>(st_.x).subspan(r_.chunk_row_begin(t.chunk), r_.C);
    } else {
      acc = std::span<val_t>(partials_).subspan(t.partial * r_.C, r_.C);
    }
    if (t.seed_from_input) {
      std::copy_n(input.begin() + r_.chunk_row_begin(t.chunk), r_.C, acc.begin());
    } else {
      std::fill(acc.begin(), acc.end(), spec_.zero);
    }
    spmv_segment(r_, spec_, input, acc, t.chunk, t.col_begin, t.col_len);
  }

  void run_tasks(const std::vector<val_t>& input) {
    const std::size_t total = tasks_.size();
    const int workers = std::max(1, opts_.workers);
    if (workers == 1 || total <= 1) {
      for (const Task& t : tasks_) run_task(t, input);
      return;
    }
    if (opts_.schedule == Schedule::static_blocks) {
      auto block = [&](int w) {
        const std::size_t lo = total * w / workers;
        const std::size_t hi = total * (w + 1) / workers;
        for (std::size_t i = lo; i < hi; ++i) run_task(tasks_[i], input);
      };
      std::vector<std::thread> pool;
      for (int w = 1; w < workers; ++w) pool.emplace_back(block, w);
      block(0);
      for (auto& th : pool) th.join();
    } else {
      std::atomic<std::size_t> next{0};
      auto drain = [&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
          run_task(tasks_[i], input);
        }
      };
      std::vector<std::thread> pool;
      for (int w = 1; w < workers; ++w) pool.emplace_back(drain);
      drain();
      for (auto& th : pool) th.join();
    }
  }

  // Folds each dispatched chunk's partials into st_.x in segment order;
  // deterministic for any worker count or schedule.
  void combine_chunks(std::int64_t) {
    for (const Task& t : tasks_) {
      if (!t.seed_from_input) continue;  // one entry per dispatched chunk
      const vid_t row0 = r_.chunk_row_begin(t.chunk);
      const std::int64_t first = plan_.chunk_first[t.chunk];
      const std::int64_t last = plan_.chunk_first[t.chunk + 1];
      auto out = std::span<val_t>(st_.x).subspan(row0, r_.C);
      std::copy_n(partials_.begin() + first * r_.C, r_.C, out.begin());
      for (std::int64_t sidx = first + 1; sidx < last; ++sidx) {
        const val_t* part = partials_.data() + sidx * r_.C;
        for (std::int64_t lane = 0; lane < r_.C; ++lane) {
          out[lane] = spec_.plus(out[lane], part[lane]);
        }
      }
    }
  }

  const SlimSellRepr& r_;
  const BfsOptions& opts_;
  const SemiringSpec& spec_;
  IterationState st_;
  std::vector<val_t> x_prev_;
  SubchunkPlan plan_;
  std::vector<val_t> partials_;
  std::vector<Task> tasks_;
};

}  // namespace

BfsResult bfs_spmv(const SlimSellRepr& r, vid_t root, const BfsOptions& opts,
                   const CsrView* csr_for_parents) {
  BfsEngine engine(r, root, opts);
  BfsResult res = engine.run();
  if (opts.want_parents) {
    if (opts.variant == Variant::selmax) {
      res.parent = engine.selmax_parents();
    } else if (csr_for_parents != nullptr) {
      res.parent = dp_transform(*csr_for_parents, res.dist);
    }
  }
  return res;
}

BfsResult bfs_traditional(const CsrView& csr, vid_t root) {
  const vid_t n = csr.num_vertices();
  if (root < 0 || root >= n) {
    throw std::out_of_range("root " + std::to_string(root) + " outside [0, " +
                            std::to_string(n) + ")");
  }
  BfsResult res;
  res.dist.assign(n, kInf);
  res.parent.assign(n, kNoParent);
  res.dist[root] = 0;
  res.parent[root] = root;

  std::vector<vid_t> frontier{root};
  std::vector<vid_t> next;
  std::int64_t k = 0;
  while (!frontier.empty()) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    next.clear();
    // Ascending frontier order makes the first discoverer the smallest-id
    // parent.
    for (vid_t u : frontier) {
      for (vid_t e = csr.row[u]; e < csr.row[u + 1]; ++e) {
        const vid_t w = csr.col[e];
        if (res.dist[w] == kInf) {
          res.dist[w] = k;
          res.parent[w] = u;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    frontier.swap(next);
    IterStats stats;
    stats.iteration = k;
    stats.frontier_size = static_cast<std::int64_t>(frontier.size());
    stats.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    res.per_iter.push_back(stats);
  }
  res.iterations = k;
  return res;
}

BfsResult bfs_traditional(const Graph& g, vid_t root) {
  return bfs_traditional(to_csr(g), root);
}

}  // namespace slimsell
