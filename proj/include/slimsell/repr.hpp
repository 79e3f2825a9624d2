#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slimsell/graph.hpp"
#include "slimsell/semiring.hpp"

namespace slimsell {

/// Marker stored in col for cells that exist only because of padding.
inline constexpr vid_t kPadMarker = -1;

/// Row reordering used by the chunked layouts: rows are sorted by
/// descending length inside every window of sigma consecutive rows,
/// ties broken by ascending original id. sigma = 1 keeps the input order,
/// sigma >= n sorts globally.
struct SortPlan {
  std::int64_t sigma = 1;       // effective window actually used
  std::vector<vid_t> perm;      // new position -> original vertex
  std::vector<vid_t> inv_perm;  // original vertex -> new position
};

SortPlan make_sort_plan(std::span<const vid_t> row_lengths, std::int64_t sigma);

/// Chunked, column-major, padded column-index array without a value
/// array: padding cells hold kPadMarker and edge values are implied.
/// Rows live in the permuted numbering; neighbor ids are remapped the
/// same way and stored ascending per row. n is padded up to a multiple
/// of C with empty rows appended after the sorted order.
struct SlimSellRepr {
  std::int64_t C = 1;
  std::int64_t sigma = 1;
  vid_t n = 0;         // real vertices
  vid_t n_padded = 0;  // multiple of C
  std::int64_t n_chunks = 0;
  vid_t nonzeros = 0;  // 2m, symmetric storage
  std::vector<vid_t> col;
  std::vector<std::int64_t> cs;  // chunk start offsets into col
  std::vector<std::int64_t> cl;  // chunk lengths (longest row per chunk)
  std::vector<vid_t> perm;
  std::vector<vid_t> inv_perm;
  std::int64_t padding = 0;  // P: number of kPadMarker cells

  vid_t chunk_row_begin(std::int64_t chunk) const {
    return static_cast<vid_t>(chunk * C);
  }
  /// End of the chunk's real rows (virtual padding rows excluded).
  vid_t chunk_row_end(std::int64_t chunk) const {
    const vid_t end = static_cast<vid_t>((chunk + 1) * C);
    return end < n ? end : n;
  }
};

/// SlimSellRepr layout plus the explicit value array the classic format
/// keeps: edge_value at structural entries, pad_value at padding.
struct SellCSigma {
  SlimSellRepr layout;
  Variant variant = Variant::tropical;
  std::vector<val_t> val;
};

/// Throws std::invalid_argument for C <= 0 or sigma <= 0.
SlimSellRepr build_slimsell(const Graph& g, std::int64_t C, std::int64_t sigma);
SellCSigma build_sell_c_sigma(const Graph& g, std::int64_t C, std::int64_t sigma,
                              const SemiringSpec& s);

/// Exact storage cell counts: col + cs + cl (+ val for Sell-C-sigma).
std::int64_t storage_cells(const SlimSellRepr& r);
std::int64_t storage_cells(const SellCSigma& m);

/// Accumulates columns [col_begin, col_begin + col_len) of one chunk into
/// acc (C lanes). acc must be pre-seeded by the caller, either with the
/// x_prev rows of the chunk or with the additive identity for partials.
/// Padding cells gather index 0 and substitute pad_value, which any
/// accumulator absorbs.
void spmv_segment(const SlimSellRepr& r, const SemiringSpec& s,
                  std::span<const val_t> x_prev, std::span<val_t> acc,
                  std::int64_t chunk, std::int64_t col_begin, std::int64_t col_len);
void spmv_segment(const SellCSigma& m, const SemiringSpec& s,
                  std::span<const val_t> x_prev, std::span<val_t> acc,
                  std::int64_t chunk, std::int64_t col_begin, std::int64_t col_len);

/// One product step over the chunks in [chunk_begin, chunk_end): for each
/// row v, out[v] = plus over {x_prev[v]} and {times(x_prev[u], edge) : u
/// neighbor of v}. Rows outside the range are left untouched. Vectors are
/// in the permuted numbering, length n_padded.
void spmv_step(const SlimSellRepr& r, const SemiringSpec& s,
               std::span<const val_t> x_prev, std::span<val_t> out,
               std::int64_t chunk_begin, std::int64_t chunk_end);
void spmv_step(const SellCSigma& m, const SemiringSpec& s,
               std::span<const val_t> x_prev, std::span<val_t> out,
               std::int64_t chunk_begin, std::int64_t chunk_end);

std::vector<val_t> spmv_step(const SlimSellRepr& r, const SemiringSpec& s,
                             std::span<const val_t> x_prev);
std::vector<val_t> spmv_step(const SellCSigma& m, const SemiringSpec& s,
                             std::span<const val_t> x_prev);

/// original-id vector -> permuted vector of length n_padded; the virtual
/// tail rows get fill.
std::vector<val_t> permute_in(std::span<const val_t> v, const SlimSellRepr& r,
                              val_t fill);
/// permuted vector -> original-id vector of length n (tail dropped).
std::vector<val_t> permute_out(std::span<const val_t> v, const SlimSellRepr& r);

/// Text rendering of cs/cl and the chunk grids (one line per lane), used
/// by the dump command and golden tests.
std::string dump_layout(const SlimSellRepr& r);
std::string dump_layout(const SellCSigma& m);

}  // namespace slimsell
