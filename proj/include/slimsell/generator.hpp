#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "slimsell/graph.hpp"

namespace slimsell {

/// splitmix64 (v1): the fixed 64-bit mixing function behind every
/// generator stream; seed plus spec fully determine the output bits.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based stream over mix64. Substreams are derived by mixing a
/// tag into the seed, so generation order never depends on thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return mix64(state_ += 0x9e3779b97f4a7c15ULL); }

  /// Uniform double in [0, 1).
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  SplitMix64 split(std::uint64_t tag) const {
    return SplitMix64(mix64(state_ ^ mix64(tag + 0x6a09e667f3bcc909ULL)));
  }

 private:
  std::uint64_t state_;
};

struct GenSpec {
  enum class Kind { erdos_renyi, kronecker, path, clique, star };
  Kind kind = Kind::path;
  vid_t n = 0;           // er / path / clique / star
  double p = 0.0;        // er
  std::int64_t scale = 0;       // kronecker: n = 2^scale
  std::int64_t edgefactor = 0;  // kronecker: e * 2^scale candidates
  std::array<double, 4> initiator = {0.57, 0.19, 0.19, 0.05};
  std::uint64_t seed = 1;
};

/// Each unordered pair appears independently with probability p; sampling
/// skips geometrically so the expected cost is O(m + n).
Graph gen_erdos_renyi(vid_t n, double p, std::uint64_t seed);

/// Recursive-quadrant power-law graph: edgefactor * 2^scale directed edge
/// candidates, then the usual normalization (self-loops dropped, dedup,
/// symmetrized). n is fixed at 2^scale; trailing vertices may be isolated.
Graph gen_kronecker(std::int64_t scale, std::int64_t edgefactor,
                    std::uint64_t seed,
                    const std::array<double, 4>& initiator = {0.57, 0.19, 0.19, 0.05});

Graph gen_path(vid_t n);
Graph gen_clique(vid_t n);
Graph gen_star(vid_t n);  // vertex 0 is the center, n - 1 leaves

Graph generate(const GenSpec& spec);

/// Parses CLI spec strings: "er:n=4096,p=0.004,seed=3",
/// "kron:scale=14,ef=16", "path:n=64", "clique:n=4", "star:n=6".
GenSpec parse_gen_spec(std::string_view text);

/// True if the text looks like a generator spec rather than a file path.
bool is_gen_spec(std::string_view text);

}  // namespace slimsell
