#include "slimsell/semiring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slimsell {

namespace {

template <Variant V>
constexpr SemiringSpec make_spec(const char* name) {
  using O = ScalarOps<V>;
  return {V, name, O::zero, O::one, O::edge, O::pad, &O::plus, &O::times};
}

constexpr SemiringSpec kSpecs[] = {
    make_spec<Variant::tropical>("tropical"),
    make_spec<Variant::real>("real"),
    make_spec<Variant::boolean>("boolean"),
    make_spec<Variant::selmax>("selmax"),
};

}  // namespace

const SemiringSpec& semiring(Variant v) {
  return kSpecs[static_cast<int>(v)];
}

const char* variant_name(Variant v) { return semiring(v).name; }

std::optional<Variant> parse_variant(std::string_view name) {
  for (const auto& s : kSpecs) {
    if (name == s.name) return s.variant;
  }
  return std::nullopt;
}

val_t SemiringSpec::sample_scalar(std::uint64_t word) const {
  switch (variant) {
    case Variant::tropical:
      // Small hop counts plus the saturating infinity.
      if (word % 8 == 0) return kInf;
      return static_cast<val_t>(word % 1000);
    case Variant::real:
      return static_cast<val_t>(word % 201) - 100;
    case Variant::boolean:
      return static_cast<val_t>(word % 2);
    case Variant::selmax:
      // Non-negative index encodings: max has identity 0 on this domain.
      return static_cast<val_t>(word % 1000);
  }
  return 0;
}

IterationState init_state(Variant v, vid_t n, vid_t root) {
  if (root < 0 || root >= n) {
    throw std::out_of_range("root " + std::to_string(root) +
                            " outside [0, " + std::to_string(n) + ")");
  }
  IterationState st;
  st.variant = v;
  st.d.assign(n, kInf);
  st.d[root] = 0;
  switch (v) {
    case Variant::tropical:
      st.x.assign(n, kInf);
      st.x[root] = 0;
      st.f = st.x;
      break;
    case Variant::real:
    case Variant::boolean:
      st.x.assign(n, 0);
      st.x[root] = 1;
      st.f = st.x;
      st.g.assign(n, 1);
      st.g[root] = 0;  // root is pre-filtered
      break;
    case Variant::selmax:
      st.x.assign(n, 0);
      st.x[root] = root + 1;  // 1-based so 0 can mean "unset"
      st.p = st.x;
      st.f.assign(n, 0);
      st.f[root] = 1;
      break;
  }
  return st;
}

void post_process_rows(IterationState& st, std::int64_t k, vid_t row_begin,
                       vid_t row_end) {
  switch (st.variant) {
    case Variant::tropical:
      // Just a store: the product result is both frontier and distance.
      for (vid_t v = row_begin; v < row_end; ++v) {
        st.f[v] = st.x[v];
        st.d[v] = st.x[v];
      }
      break;
    case Variant::real:
    case Variant::boolean:
      for (vid_t v = row_begin; v < row_end; ++v) {
        const bool newly = st.x[v] != 0 && st.g[v] != 0;
        st.f[v] = newly ? 1 : 0;  // real: re-clamped to {0,1}
        if (newly) {
          st.d[v] = k;
          st.g[v] = 0;
        }
      }
      break;
    case Variant::selmax:
      for (vid_t v = row_begin; v < row_end; ++v) {
        const bool newly = st.p[v] == 0 && st.x[v] != 0;
        st.f[v] = newly ? 1 : 0;
        if (newly) {
          st.p[v] = st.x[v];
          st.d[v] = k;
        }
        // Each non-zero result becomes its own 1-based index.
        st.x[v] = st.x[v] != 0 ? v + 1 : 0;
      }
      break;
  }
}

void post_process(IterationState& st, std::int64_t k) {
  post_process_rows(st, k, 0, static_cast<vid_t>(st.x.size()));
}

bool should_skip_chunk(const IterationState& st, vid_t row_begin, vid_t row_end) {
  switch (st.variant) {
    case Variant::tropical:
      for (vid_t v = row_begin; v < row_end; ++v) {
        if (st.f[v] == kInf) return false;  // a distance is still open
      }
      return true;
    case Variant::real:
    case Variant::boolean:
      for (vid_t v = row_begin; v < row_end; ++v) {
        if (st.g[v] != 0) return false;  // a filter entry is still live
      }
      return true;
    case Variant::selmax:
      for (vid_t v = row_begin; v < row_end; ++v) {
        if (st.p[v] == 0) return false;  // a parent is still unset
      }
      return true;
  }
  return false;
}

bool is_converged(const IterationState& st, std::span<const val_t> x_prev) {
  if (st.variant == Variant::tropical) {
    return std::equal(st.x.begin(), st.x.end(), x_prev.begin(), x_prev.end());
  }
  return std::all_of(st.f.begin(), st.f.end(), [](val_t v) { return v == 0; });
}

std::vector<vid_t> dp_transform(const CsrView& csr, std::span<const val_t> d) {
  const vid_t n = csr.num_vertices();
  if (static_cast<vid_t>(d.size()) != n) {
    throw std::invalid_argument("distance vector length mismatch");
  }
  std::vector<vid_t> p(n, kNoParent);
  for (vid_t v = 0; v < n; ++v) {
    if (d[v] == kInf) continue;
    if (d[v] == 0) {
      p[v] = v;
      continue;
    }
    vid_t parent = kNoParent;
    for (vid_t e = csr.row[v]; e < csr.row[v + 1]; ++e) {
      const vid_t w = csr.col[e];
      if (d[w] != kInf && d[w] == d[v] - 1) {
        parent = w;  // rows are sorted, first hit is the smallest id
        break;
      }
    }
    if (parent == kNoParent) {
      throw std::invalid_argument("inconsistent distances: vertex " +
                                  std::to_string(v) +
                                  " has no neighbor one level closer");
    }
    p[v] = parent;
  }
  return p;
}

std::vector<vid_t> dp_transform(const Graph& g, std::span<const val_t> d) {
  return dp_transform(to_csr(g), d);
}

}  // namespace slimsell
