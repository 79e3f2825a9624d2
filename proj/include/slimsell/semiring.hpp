#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "slimsell/graph.hpp"

namespace slimsell {

/// Scalar value of every semiring. Exact integer arithmetic keeps the
/// kernels deterministic; the real variant clamps its frontier to {0,1}
/// each iteration so magnitudes never overflow.
using val_t = std::int64_t;

/// Saturating infinity of the tropical variant (kInf + a == kInf).
inline constexpr val_t kInf = std::numeric_limits<val_t>::max();

/// Sentinel in parent vectors for unreached vertices.
inline constexpr vid_t kNoParent = -1;

enum class Variant { tropical, real, boolean, selmax };

inline constexpr Variant kAllVariants[] = {Variant::tropical, Variant::real,
                                           Variant::boolean, Variant::selmax};

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

/// One semiring packaged for the chunked kernel: scalar ops, identities,
/// and the values substituted for structural edges and padding cells.
/// pad_value equals the additive identity, so padded lanes never change
/// an accumulator.
struct SemiringSpec {
  Variant variant;
  const char* name;
  val_t zero;        // additive identity
  val_t one;         // multiplicative identity
  val_t edge_value;  // substituted for a structural non-zero
  val_t pad_value;   // substituted for padding; == zero
  val_t (*plus)(val_t, val_t);
  val_t (*times)(val_t, val_t);

  /// Scalars the variant actually operates on, for sampling in law checks.
  val_t sample_scalar(std::uint64_t word) const;
};

const SemiringSpec& semiring(Variant v);

/// Compile-time scalar ops per variant; the chunked kernels instantiate
/// against these so the inner loops inline fully. semiring(v) exposes the
/// same operations through function pointers.
template <Variant V>
struct ScalarOps;

template <>
struct ScalarOps<Variant::tropical> {
  static constexpr val_t zero = kInf, one = 0, edge = 1, pad = kInf;
  static constexpr val_t plus(val_t a, val_t b) { return a < b ? a : b; }
  static constexpr val_t times(val_t a, val_t b) {
    return (a == kInf || b == kInf) ? kInf : a + b;  // saturating hop add
  }
};

template <>
struct ScalarOps<Variant::real> {
  static constexpr val_t zero = 0, one = 1, edge = 1, pad = 0;
  static constexpr val_t plus(val_t a, val_t b) { return a + b; }
  static constexpr val_t times(val_t a, val_t b) { return a * b; }
};

template <>
struct ScalarOps<Variant::boolean> {
  static constexpr val_t zero = 0, one = 1, edge = 1, pad = 0;
  static constexpr val_t plus(val_t a, val_t b) { return a | b; }
  static constexpr val_t times(val_t a, val_t b) { return a & b; }
};

template <>
struct ScalarOps<Variant::selmax> {
  static constexpr val_t zero = 0, one = 1, edge = 1, pad = 0;
  static constexpr val_t plus(val_t a, val_t b) { return a > b ? a : b; }
  static constexpr val_t times(val_t a, val_t b) { return a * b; }
};

/// Per-iteration BFS state. Vectors are indexed by vertex position in
/// whatever numbering the caller works in (the engine uses the permuted,
/// padded numbering).
struct IterationState {
  Variant variant = Variant::tropical;
  std::vector<val_t> x;  // result of the current product
  std::vector<val_t> f;  // frontier (tropical keeps f == x)
  std::vector<val_t> g;  // filtering term, real/boolean only
  std::vector<val_t> p;  // parents, 1-based encoding, sel-max only
  std::vector<val_t> d;  // distances, kInf when unreached
};

/// Initial state for a BFS from root. Throws std::out_of_range for an
/// invalid root.
IterationState init_state(Variant v, vid_t n, vid_t root);

/// Derives f/d/g/p for rows [row_begin, row_end) from the raw product
/// result in st.x of iteration k. Disjoint row ranges may run concurrently.
void post_process_rows(IterationState& st, std::int64_t k, vid_t row_begin,
                       vid_t row_end);

/// Whole-vector post-processing step of iteration k.
void post_process(IterationState& st, std::int64_t k);

/// SlimWork predicate: true when the product for rows [row_begin, row_end)
/// can be skipped because every row already carries its final value.
bool should_skip_chunk(const IterationState& st, vid_t row_begin, vid_t row_end);

/// Fixed-point test after an iteration. x_prev is the product result of
/// the previous iteration (used by the tropical variant only).
bool is_converged(const IterationState& st, std::span<const val_t> x_prev);

/// Derives parents from a valid BFS distance vector: the smallest-id
/// neighbor one level closer. Throws std::invalid_argument when a reached
/// non-root vertex has no such neighbor.
std::vector<vid_t> dp_transform(const CsrView& csr, std::span<const val_t> d);
std::vector<vid_t> dp_transform(const Graph& g, std::span<const val_t> d);

}  // namespace slimsell
