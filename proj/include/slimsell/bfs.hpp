#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "slimsell/graph.hpp"
#include "slimsell/repr.hpp"
#include "slimsell/semiring.hpp"

namespace slimsell {

enum class Schedule { static_blocks, dynamic_queue };

struct BfsOptions {
  Variant variant = Variant::tropical;
  bool slimwork = false;
  std::int64_t slimchunk_len = 0;  // max columns per subchunk; 0 = off
  Schedule schedule = Schedule::static_blocks;
  int workers = 1;
  std::int64_t max_iterations = 0;  // <= 0 resolves to n + 1
  bool want_parents = true;
};

struct IterStats {
  std::int64_t iteration = 0;  // k, 1-based
  std::int64_t elapsed_ns = 0;
  std::int64_t chunks_processed = 0;
  std::int64_t chunks_skipped = 0;
  std::int64_t subchunks_processed = 0;
  std::int64_t columns_processed = 0;  // chunk columns actually multiplied
  std::int64_t frontier_size = 0;      // vertices reached in this iteration
};

struct BfsResult {
  std::vector<val_t> dist;    // original ids; kInf for unreached
  std::vector<vid_t> parent;  // original ids; root self-parented; kNoParent
                              // when unreached; empty when not requested
  std::int64_t iterations = 0;
  std::vector<IterStats> per_iter;
};

/// Raised when the iteration cap is hit before the fixed point; carries
/// whatever state had been computed.
class BfsCapError : public std::runtime_error {
 public:
  BfsCapError(std::string what, BfsResult partial)
      : std::runtime_error(std::move(what)), partial_(std::move(partial)) {}
  const BfsResult& partial() const { return partial_; }

 private:
  BfsResult partial_;
};

/// Vertical split of each chunk into column segments of at most L columns,
/// the SlimChunk scheduling unit.
struct SubchunkPlan {
  struct Segment {
    std::int64_t chunk = 0;
    std::int64_t col_begin = 0;
    std::int64_t col_len = 0;
  };
  std::vector<Segment> segments;          // ordered by (chunk, col_begin)
  std::vector<std::int64_t> chunk_first;  // per chunk, index into segments; n_chunks+1
};

/// Throws std::invalid_argument for L < 1.
SubchunkPlan plan_subchunks(const SlimSellRepr& r, std::int64_t L);

/// Elementwise semiring-plus fold across subchunk partials, in order.
/// All partials must have equal length.
std::vector<val_t> combine_partials(const SemiringSpec& s,
                                    const std::vector<std::vector<val_t>>& partials);

/// Algebraic BFS over the chunked representation. Results are reported in
/// original vertex ids. For variants other than sel-max, parents are
/// derived from distances when csr_for_parents is given and
/// opts.want_parents is set.
BfsResult bfs_spmv(const SlimSellRepr& r, vid_t root, const BfsOptions& opts,
                   const CsrView* csr_for_parents = nullptr);

/// Level-synchronous queue BFS; the correctness oracle and the baseline in
/// benchmark output. Parents pick the smallest-id neighbor one level up.
BfsResult bfs_traditional(const CsrView& csr, vid_t root);
BfsResult bfs_traditional(const Graph& g, vid_t root);

}  // namespace slimsell
