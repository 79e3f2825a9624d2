#include "slimsell/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace slimsell {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

vid_t parse_vertex_id(std::string_view tok, std::int64_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec == std::errc::result_out_of_range ||
      value > static_cast<std::uint64_t>(std::numeric_limits<vid_t>::max())) {
    throw std::out_of_range("line " + std::to_string(line_no) +
                            ": vertex id out of range: " + std::string(tok));
  }
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected unsigned integer, got '" + std::string(tok) + "'");
  }
  return static_cast<vid_t>(value);
}

// Splits text into lines, tolerating trailing '\r'.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::int64_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    fn(line, line_no);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

bool is_comment_or_blank(std::string_view line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#' || c == '%';
  }
  return true;
}

}  // namespace

Graph Graph::from_pairs(std::vector<std::pair<vid_t, vid_t>> pairs, vid_t n) {
  vid_t max_id = -1;
  for (auto& [u, v] : pairs) {
    if (u < 0 || v < 0) throw std::out_of_range("negative vertex id");
    if (u > v) std::swap(u, v);
    max_id = std::max(max_id, v);
  }
  if (n < 0) {
    n = max_id + 1;
  } else if (max_id >= n) {
    throw std::out_of_range("vertex id " + std::to_string(max_id) +
                            " exceeds declared vertex count " + std::to_string(n));
  }
  std::erase_if(pairs, [](const auto& e) { return e.first == e.second; });
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(pairs);
  return g;
}

bool Graph::has_edge(vid_t u, vid_t v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Graph from_edge_list(std::string_view text, InputDirective directive) {
  std::vector<std::pair<vid_t, vid_t>> pairs;
  vid_t header_n = -1;
  bool seen_data = false;

  for_each_line(text, [&](std::string_view line, std::int64_t line_no) {
    if (is_comment_or_blank(line)) return;
    auto toks = split_tokens(line);
    if (toks[0] == "H") {
      if (seen_data) throw ParseError(line_no, "header after edge records");
      if (header_n >= 0) throw ParseError(line_no, "duplicate header");
      if (toks.size() != 3) throw ParseError(line_no, "header needs 'H n m'");
      header_n = parse_vertex_id(toks[1], line_no);
      parse_vertex_id(toks[2], line_no);  // declared m; informational only
      return;
    }
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected 'u v', got " +
                                    std::to_string(toks.size()) + " tokens");
    }
    pairs.emplace_back(parse_vertex_id(toks[0], line_no),
                       parse_vertex_id(toks[1], line_no));
    seen_data = true;
  });

  if (directive == InputDirective::reject_asymmetric) {
    std::vector<std::pair<vid_t, vid_t>> directed;
    directed.reserve(pairs.size());
    for (auto [u, v] : pairs) {
      if (u != v) directed.emplace_back(u, v);
    }
    std::sort(directed.begin(), directed.end());
    directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
    for (auto [u, v] : directed) {
      if (!std::binary_search(directed.begin(), directed.end(), std::make_pair(v, u))) {
        throw std::invalid_argument("asymmetric input: (" + std::to_string(u) +
                                    ", " + std::to_string(v) +
                                    ") has no reverse record");
      }
    }
  }
  return Graph::from_pairs(std::move(pairs), header_n);
}

Graph from_matrix_market(std::string_view text) {
  bool header_done = false;
  bool symmetric = false;
  bool pattern = false;
  bool size_done = false;
  vid_t rows = 0, cols = 0;
  std::int64_t declared_nnz = 0, seen_nnz = 0;
  std::vector<std::pair<vid_t, vid_t>> pairs;

  for_each_line(text, [&](std::string_view line, std::int64_t line_no) {
    if (!header_done) {
      auto toks = split_tokens(line);
      if (toks.size() < 5 || toks[0] != "%%MatrixMarket" || toks[1] != "matrix") {
        throw ParseError(line_no, "missing '%%MatrixMarket matrix' banner");
      }
      if (toks[2] != "coordinate") {
        throw std::invalid_argument("unsupported MatrixMarket format '" +
                                    std::string(toks[2]) + "' (need coordinate)");
      }
      if (toks[3] == "pattern") {
        pattern = true;
      } else if (toks[3] != "real") {
        throw std::invalid_argument("unsupported MatrixMarket field '" +
                                    std::string(toks[3]) + "' (need pattern or real)");
      }
      if (toks[4] == "symmetric") {
        symmetric = true;
      } else if (toks[4] != "general") {
        throw std::invalid_argument("unsupported MatrixMarket symmetry '" +
                                    std::string(toks[4]) + "' (need general or symmetric)");
      }
      header_done = true;
      return;
    }
    if (is_comment_or_blank(line)) return;
    auto toks = split_tokens(line);
    if (!size_done) {
      if (toks.size() != 3) throw ParseError(line_no, "expected 'rows cols nnz'");
      rows = parse_vertex_id(toks[0], line_no);
      cols = parse_vertex_id(toks[1], line_no);
      declared_nnz = parse_vertex_id(toks[2], line_no);
      if (rows != cols) {
        throw std::invalid_argument("adjacency matrix must be square, got " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
      }
      size_done = true;
      return;
    }
    std::size_t expected = pattern ? 2 : 3;
    if (toks.size() != expected) {
      throw ParseError(line_no, "expected " + std::to_string(expected) + " tokens");
    }
    vid_t i = parse_vertex_id(toks[0], line_no);
    vid_t j = parse_vertex_id(toks[1], line_no);
    if (i < 1 || i > rows || j < 1 || j > rows) {
      throw std::out_of_range("line " + std::to_string(line_no) +
                              ": entry outside matrix bounds");
    }
    ++seen_nnz;
    if (seen_nnz > declared_nnz) return;  // counted; reported below
    pairs.emplace_back(i - 1, j - 1);     // 1-based -> 0-based
    if (symmetric) pairs.emplace_back(j - 1, i - 1);
  });

  if (!header_done) throw ParseError(1, "empty MatrixMarket input");
  if (!size_done) throw ParseError(1, "missing MatrixMarket size line");
  if (seen_nnz != declared_nnz) {
    throw std::invalid_argument("MatrixMarket entry count mismatch: header says " +
                                std::to_string(declared_nnz) + ", found " +
                                std::to_string(seen_nnz));
  }
  return Graph::from_pairs(std::move(pairs), rows);
}

CsrView to_csr(const Graph& g) {
  const vid_t n = g.num_vertices();
  CsrView csr;
  csr.row.assign(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : g.edges()) {
    ++csr.row[static_cast<std::size_t>(u) + 1];
    ++csr.row[static_cast<std::size_t>(v) + 1];
  }
  for (vid_t i = 0; i < n; ++i) csr.row[i + 1] += csr.row[i];
  csr.col.resize(csr.row[n]);

  // Edges are sorted by (u, v) with u < v, so a single pass appends every
  // row's below-diagonal neighbors in order before its above-diagonal ones,
  // leaving each row sorted.
  std::vector<vid_t> cursor(csr.row.begin(), csr.row.end() - 1);
  for (auto [u, v] : g.edges()) {
    csr.col[cursor[u]++] = v;
    csr.col[cursor[v]++] = u;
  }
  return csr;
}

bool CsrView::has_edge(vid_t u, vid_t v) const {
  if (u < 0 || u >= num_vertices() || v < 0 || v >= num_vertices()) return false;
  auto begin = col.begin() + row[u];
  auto end = col.begin() + row[u + 1];
  return std::binary_search(begin, end, v);
}

AlView to_adjacency_list(const Graph& g) {
  CsrView csr = to_csr(g);
  AlView al;
  al.offsets.assign(csr.row.begin(), csr.row.end() - 1);
  al.neighbors = std::move(csr.col);
  return al;
}

DegreeStats degree_stats(const Graph& g) {
  const vid_t n = g.num_vertices();
  if (n == 0) throw std::domain_error("average degree undefined for empty graph");
  std::vector<vid_t> deg(n, 0);
  for (auto [u, v] : g.edges()) {
    ++deg[u];
    ++deg[v];
  }
  DegreeStats stats;
  stats.max_degree = *std::max_element(deg.begin(), deg.end());
  stats.avg_degree = 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(n);
  stats.histogram.assign(stats.max_degree + 1, 0);
  for (vid_t d : deg) ++stats.histogram[d];
  return stats;
}

}  // namespace slimsell
