#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace slimsell {

using vid_t = std::int64_t;

/// Thrown on malformed text input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::int64_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::int64_t line() const { return line_; }

 private:
  std::int64_t line_;
};

/// Canonical undirected, unweighted graph: n vertices and a deduplicated
/// edge set stored as (u, v) pairs with u < v. No self-loops. Immutable
/// after construction; safe to share read-only across threads.
class Graph {
 public:
  Graph() = default;

  /// Normalizes raw (possibly directed, duplicated, self-looped) pairs.
  /// n < 0 infers the vertex count as max id + 1; an explicit n rejects
  /// out-of-range endpoints.
  static Graph from_pairs(std::vector<std::pair<vid_t, vid_t>> pairs,
                          vid_t n = -1);

  vid_t num_vertices() const { return n_; }
  vid_t num_edges() const { return static_cast<vid_t>(edges_.size()); }
  const std::vector<std::pair<vid_t, vid_t>>& edges() const { return edges_; }

  bool has_edge(vid_t u, vid_t v) const;

 private:
  vid_t n_ = 0;
  std::vector<std::pair<vid_t, vid_t>> edges_;  // sorted, u < v
};

enum class InputDirective { symmetrize, reject_asymmetric };

/// Parses whitespace-separated "u v" records. Lines starting with '#' or
/// '%' are comments; an optional first record "H n m" pins the vertex
/// count (required for isolated trailing vertices).
Graph from_edge_list(std::string_view text,
                     InputDirective directive = InputDirective::symmetrize);

/// Parses MatrixMarket coordinate input (pattern/real, general/symmetric).
Graph from_matrix_market(std::string_view text);

/// Symmetric CSR adjacency: row offsets (n+1) and 2m neighbor ids, each
/// row sorted ascending.
struct CsrView {
  std::vector<vid_t> row;
  std::vector<vid_t> col;

  vid_t num_vertices() const { return static_cast<vid_t>(row.size()) - 1; }
  bool has_edge(vid_t u, vid_t v) const;
};

CsrView to_csr(const Graph& g);

/// Adjacency-list layout: exactly 2m + n cells (per-vertex start offsets
/// plus the flat neighbor array).
struct AlView {
  std::vector<vid_t> offsets;    // length n
  std::vector<vid_t> neighbors;  // length 2m

  std::int64_t cells() const {
    return static_cast<std::int64_t>(offsets.size() + neighbors.size());
  }
};

AlView to_adjacency_list(const Graph& g);

struct DegreeStats {
  double avg_degree = 0.0;            // 2m / n
  vid_t max_degree = 0;
  std::vector<std::int64_t> histogram;  // histogram[d] = #vertices of degree d
};

/// Throws std::domain_error for n = 0 (average degree undefined).
DegreeStats degree_stats(const Graph& g);

}  // namespace slimsell
