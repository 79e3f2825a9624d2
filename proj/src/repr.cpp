#include "slimsell/repr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace slimsell {

namespace {

void check_vector_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw std::invalid_argument(std::string(what) + " length " +
                                std::to_string(got) + ", expected " +
                                std::to_string(want));
  }
}

template <Variant V>
void slim_segment_impl(const SlimSellRepr& r, std::span<const val_t> x,
                       std::span<val_t> acc, std::int64_t chunk,
                       std::int64_t col_begin, std::int64_t col_len) {
  using O = ScalarOps<V>;
  const std::int64_t C = r.C;
  const vid_t* cols = r.col.data() + r.cs[chunk] + col_begin * C;
  for (std::int64_t j = 0; j < col_len; ++j, cols += C) {
    for (std::int64_t lane = 0; lane < C; ++lane) {
      const vid_t c = cols[lane];
      const vid_t gather = c < 0 ? 0 : c;  // keep the gather in bounds
      const val_t v = c < 0 ? O::pad : O::edge;
      acc[lane] = O::plus(acc[lane], O::times(x[gather], v));
    }
  }
}

template <Variant V>
void sell_segment_impl(const SellCSigma& m, std::span<const val_t> x,
                       std::span<val_t> acc, std::int64_t chunk,
                       std::int64_t col_begin, std::int64_t col_len) {
  using O = ScalarOps<V>;
  const SlimSellRepr& r = m.layout;
  const std::int64_t C = r.C;
  const std::int64_t base = r.cs[chunk] + col_begin * C;
  const vid_t* cols = r.col.data() + base;
  const val_t* vals = m.val.data() + base;
  for (std::int64_t j = 0; j < col_len; ++j, cols += C, vals += C) {
    for (std::int64_t lane = 0; lane < C; ++lane) {
      const vid_t c = cols[lane];
      const vid_t gather = c < 0 ? 0 : c;
      acc[lane] = O::plus(acc[lane], O::times(x[gather], vals[lane]));
    }
  }
}

std::string cell_to_string(val_t v) {
  return v == kInf ? "inf" : std::to_string(v);
}

}  // namespace

SortPlan make_sort_plan(std::span<const vid_t> row_lengths, std::int64_t sigma) {
  if (sigma <= 0) throw std::invalid_argument("sorting scope must be positive");
  const auto n = static_cast<vid_t>(row_lengths.size());
  SortPlan plan;
  plan.sigma = std::min<std::int64_t>(sigma, std::max<vid_t>(n, 1));
  plan.perm.resize(n);
  std::iota(plan.perm.begin(), plan.perm.end(), vid_t{0});
  for (vid_t w = 0; w < n; w += plan.sigma) {
    const vid_t end = std::min<vid_t>(w + plan.sigma, n);
    std::sort(plan.perm.begin() + w, plan.perm.begin() + end,
              [&](vid_t a, vid_t b) {
                if (row_lengths[a] != row_lengths[b]) {
                  return row_lengths[a] > row_lengths[b];
                }
                return a < b;
              });
  }
  plan.inv_perm.resize(n);
  for (vid_t pos = 0; pos < n; ++pos) plan.inv_perm[plan.perm[pos]] = pos;
  return plan;
}

SlimSellRepr build_slimsell(const Graph& g, std::int64_t C, std::int64_t sigma) {
  if (C <= 0) throw std::invalid_argument("chunk height must be positive");
  const vid_t n = g.num_vertices();
  const CsrView csr = to_csr(g);
  std::vector<vid_t> lengths(n);
  for (vid_t v = 0; v < n; ++v) lengths[v] = csr.row[v + 1] - csr.row[v];
  SortPlan plan = make_sort_plan(lengths, sigma);

  SlimSellRepr r;
  r.C = C;
  r.sigma = plan.sigma;
  r.n = n;
  r.n_chunks = (n + C - 1) / C;
  r.n_padded = static_cast<vid_t>(r.n_chunks * C);
  r.nonzeros = n == 0 ? 0 : csr.row[n];
  r.perm = std::move(plan.perm);
  r.inv_perm = std::move(plan.inv_perm);

  r.cs.resize(r.n_chunks);
  r.cl.resize(r.n_chunks);
  std::int64_t total = 0;
  for (std::int64_t i = 0; i < r.n_chunks; ++i) {
    vid_t longest = 0;
    for (std::int64_t lane = 0; lane < C; ++lane) {
      const vid_t pos = static_cast<vid_t>(i * C + lane);
      if (pos < n) longest = std::max(longest, lengths[r.perm[pos]]);
    }
    r.cs[i] = total;
    r.cl[i] = longest;
    total += C * longest;
  }

  r.col.assign(total, kPadMarker);
  std::vector<vid_t> nbrs;
  for (vid_t pos = 0; pos < n; ++pos) {
    const vid_t orig = r.perm[pos];
    nbrs.assign(csr.col.begin() + csr.row[orig], csr.col.begin() + csr.row[orig + 1]);
    for (vid_t& w : nbrs) w = r.inv_perm[w];
    std::sort(nbrs.begin(), nbrs.end());
    const std::int64_t chunk = pos / C;
    const std::int64_t lane = pos % C;
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      r.col[r.cs[chunk] + static_cast<std::int64_t>(k) * C + lane] = nbrs[k];
    }
  }
  r.padding = total - r.nonzeros;
  return r;
}

SellCSigma build_sell_c_sigma(const Graph& g, std::int64_t C, std::int64_t sigma,
                              const SemiringSpec& s) {
  SellCSigma m;
  m.layout = build_slimsell(g, C, sigma);
  m.variant = s.variant;
  m.val.resize(m.layout.col.size());
  for (std::size_t i = 0; i < m.val.size(); ++i) {
    m.val[i] = m.layout.col[i] == kPadMarker ? s.pad_value : s.edge_value;
  }
  return m;
}

std::int64_t storage_cells(const SlimSellRepr& r) {
  return static_cast<std::int64_t>(r.col.size() + r.cs.size() + r.cl.size());
}

std::int64_t storage_cells(const SellCSigma& m) {
  return storage_cells(m.layout) + static_cast<std::int64_t>(m.val.size());
}

void spmv_segment(const SlimSellRepr& r, const SemiringSpec& s,
                  std::span<const val_t> x_prev, std::span<val_t> acc,
                  std::int64_t chunk, std::int64_t col_begin, std::int64_t col_len) {
  switch (s.variant) {
    case Variant::tropical:
      slim_segment_impl<Variant::tropical>(r, x_prev, acc, chunk, col_begin, col_len);
      break;
    case Variant::real:
      slim_segment_impl<Variant::real>(r, x_prev, acc, chunk, col_begin, col_len);
      break;
    case Variant::boolean:
      slim_segment_impl<Variant::boolean>(r, x_prev, acc, chunk, col_begin, col_len);
      break;
    case Variant::selmax:
      slim_segment_impl<Variant::selmax>(r, x_prev, acc, chunk, col_begin, col_len);
      break;
  }
}

void spmv_segment(const SellCSigma& m, const SemiringSpec& s,
                  std::span<const val_t> x_prev, std::span<val_t> acc,
                  std::int64_t chunk, std::int64_t col_begin, std::int64_t col_len) {
  switch (s.variant) {
    case Variant::tropical:
      sell_segment_impl<Variant::tropical>(m, x_prev, acc, chunk, col_begin, col_len);
      break;
    case Variant::real:
      sell_segment_impl<Variant::real>(m, x_prev, acc, chunk, col_begin, col_len);
      break;
    case Variant::boolean:
      sell_segment_impl<Variant::boolean>(m, x_prev, acc, chunk, col_begin, col_len);
      break;
    case Variant::selmax:
      sell_segment_impl<Variant::selmax>(m, x_prev, acc, chunk, col_begin, col_len);
      break;
  }
}

namespace {

template <typename Repr>
void spmv_chunks(const Repr& repr, const SlimSellRepr& layout, const SemiringSpec& s,
                 std::span<const val_t> x_prev, std::span<val_t> out,
                 std::int64_t chunk_begin, std::int64_t chunk_end) {
  check_vector_length(x_prev.size(), static_cast<std::size_t>(layout.n_padded),
                      "x_prev");
  check_vector_length(out.size(), static_cast<std::size_t>(layout.n_padded), "out");
  if (chunk_begin < 0 || chunk_end > layout.n_chunks || chunk_begin > chunk_end) {
    throw std::invalid_argument("chunk range out of bounds");
  }
  for (std::int64_t i = chunk_begin; i < chunk_end; ++i) {
    const vid_t row0 = layout.chunk_row_begin(i);
    auto acc = out.subspan(row0, layout.C);
    std::copy_n(x_prev.begin() + row0, layout.C, acc.begin());
    spmv_segment(repr, s, x_prev, acc, i, 0, layout.cl[i]);
  }
}

}  // namespace

void spmv_step(const SlimSellRepr& r, const SemiringSpec& s,
               std::span<const val_t> x_prev, std::span<val_t> out,
               std::int64_t chunk_begin, std::int64_t chunk_end) {
  spmv_chunks(r, r, s, x_prev, out, chunk_begin, chunk_end);
}

void spmv_step(const SellCSigma& m, const SemiringSpec& s,
               std::span<const val_t> x_prev, std::span<val_t> out,
               std::int64_t chunk_begin, std::int64_t chunk_end) {
  spmv_chunks(m, m.layout, s, x_prev, out, chunk_begin, chunk_end);
}

std::vector<val_t> spmv_step(const SlimSellRepr& r, const SemiringSpec& s,
                             std::span<const val_t> x_prev) {
  std::vector<val_t> out(x_prev.size());
  spmv_step(r, s, x_prev, out, 0, r.n_chunks);
  return out;
}

std::vector<val_t> spmv_step(const SellCSigma& m, const SemiringSpec& s,
                             std::span<const val_t> x_prev) {
  std::vector<val_t> out(x_prev.size());
  spmv_step(m, s, x_prev, out, 0, m.layout.n_chunks);
  return out;
}

std::vector<val_t> permute_in(std::span<const val_t> v, const SlimSellRepr& r,
                              val_t fill) {
  check_vector_length(v.size(), static_cast<std::size_t>(r.n), "input vector");
  std::vector<val_t> out(r.n_padded, fill);
  for (vid_t pos = 0; pos < r.n; ++pos) out[pos] = v[r.perm[pos]];
  return out;
}

std::vector<val_t> permute_out(std::span<const val_t> v, const SlimSellRepr& r) {
  check_vector_length(v.size(), static_cast<std::size_t>(r.n_padded),
                      "permuted vector");
  std::vector<val_t> out(r.n);
  for (vid_t pos = 0; pos < r.n; ++pos) out[r.perm[pos]] = v[pos];
  return out;
}

namespace {

void dump_header(std::ostringstream& os, const char* kind, const SlimSellRepr& r) {
  os << kind << " C=" << r.C << " sigma=" << r.sigma << " n=" << r.n
     << " n_padded=" << r.n_padded << " chunks=" << r.n_chunks
     << " nnz=" << r.nonzeros << " P=" << r.padding << '\n';
  os << "cs:";
  for (auto v : r.cs) os << ' ' << v;
  os << '\n' << "cl:";
  for (auto v : r.cl) os << ' ' << v;
  os << '\n';
}

void dump_chunk_grid(std::ostringstream& os, const SlimSellRepr& r,
                     std::int64_t chunk, const std::vector<val_t>* val) {
  os << "chunk " << chunk << " rows " << chunk * r.C << ".."
     << (chunk + 1) * r.C - 1 << '\n';
  for (std::int64_t lane = 0; lane < r.C; ++lane) {
    if (r.cl[chunk] == 0) break;
    os << "  col:";
    for (std::int64_t j = 0; j < r.cl[chunk]; ++j) {
      os << ' ' << r.col[r.cs[chunk] + j * r.C + lane];
    }
    os << '\n';
  }
  if (val != nullptr) {
    for (std::int64_t lane = 0; lane < r.C; ++lane) {
      if (r.cl[chunk] == 0) break;
      os << "  val:";
      for (std::int64_t j = 0; j < r.cl[chunk]; ++j) {
        os << ' ' << cell_to_string((*val)[r.cs[chunk] + j * r.C + lane]);
      }
      os << '\n';
    }
  }
}

}  // namespace

std::string dump_layout(const SlimSellRepr& r) {
  std::ostringstream os;
  dump_header(os, "SlimSell", r);
  for (std::int64_t i = 0; i < r.n_chunks; ++i) dump_chunk_grid(os, r, i, nullptr);
  return os.str();
}

std::string dump_layout(const SellCSigma& m) {
  std::ostringstream os;
  dump_header(os, "SellCSigma", m.layout);
  os << "variant: " << variant_name(m.variant) << '\n';
  for (std::int64_t i = 0; i < m.layout.n_chunks; ++i) {
    dump_chunk_grid(os, m.layout, i, &m.val);
  }
  return os.str();
}

}  // namespace slimsell
