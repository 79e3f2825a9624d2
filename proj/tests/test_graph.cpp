#include <doctest.h>

#include <set>

#include "slimsell/generator.hpp"
#include "slimsell/graph.hpp"

using namespace slimsell;

TEST_CASE("edge list: path") {
  const Graph g = from_edge_list("0 1\n1 2\n2 3");
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 3);
  CHECK(g.has_edge(2, 1));
  CHECK(!g.has_edge(0, 2));
}

TEST_CASE("edge list: duplicates and self-loops dropped") {
  const Graph g = from_edge_list("0 1\n1 0\n0 0");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
}

TEST_CASE("edge list: 4-clique") {
  const Graph g = from_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3");
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 6);
  const DegreeStats st = degree_stats(g);
  CHECK(st.max_degree == 3);
  CHECK(st.histogram[3] == 4);
}

TEST_CASE("edge list: header fixes n, comments skipped") {
  const Graph g = from_edge_list("# comment\n% more\nH 6 2\n0 1\n1 2\n");
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("edge list: malformed line reports its number") {
  try {
    from_edge_list("0 1\nx 2\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(from_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("0\n"), ParseError);
}

TEST_CASE("edge list: id range errors") {
  CHECK_THROWS_AS(from_edge_list("H 2 1\n0 5\n"), std::out_of_range);
  CHECK_THROWS_AS(from_edge_list("0 99999999999999999999999\n"),
                  std::out_of_range);
}

TEST_CASE("edge list: reject-asymmetric directive") {
  CHECK_THROWS_AS(from_edge_list("0 1\n", InputDirective::reject_asymmetric),
                  std::invalid_argument);
  const Graph g =
      from_edge_list("0 1\n1 0\n", InputDirective::reject_asymmetric);
  CHECK(g.num_edges() == 1);
}

TEST_CASE("matrix market: pattern symmetric path") {
  const Graph g = from_matrix_market(
      "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 2\n2 1\n3 2\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
}

TEST_CASE("matrix market: general input is symmetrized") {
  const Graph g = from_matrix_market(
      "%%MatrixMarket matrix coordinate real general\n"
      "3 3 3\n1 2 1.5\n2 1 2.0\n3 2 0.5\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("matrix market: errors") {
  CHECK_THROWS_AS(from_matrix_market(
                      "%%MatrixMarket matrix array real general\n2 2 1\n1 2\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(from_matrix_market("%%MatrixMarket matrix coordinate pattern "
                                     "general\n3 3 2\n1 2\n"),
                  std::invalid_argument);  // count mismatch
  CHECK_THROWS_AS(from_matrix_market("%%MatrixMarket matrix coordinate pattern "
                                     "general\n3 2 1\n1 2\n"),
                  std::invalid_argument);  // non-square
}

TEST_CASE("csr: path layout") {
  const Graph g = from_edge_list("0 1\n1 2\n2 3");
  const CsrView csr = to_csr(g);
  CHECK(csr.row == std::vector<vid_t>{0, 1, 3, 5, 6});
  CHECK(csr.col == std::vector<vid_t>{1, 0, 2, 1, 3, 2});
}

TEST_CASE("csr: empty graph") {
  const Graph g = from_edge_list("H 3 0\n");
  const CsrView csr = to_csr(g);
  CHECK(csr.row == std::vector<vid_t>{0, 0, 0, 0});
  CHECK(csr.col.empty());
}

TEST_CASE("csr: clique rows") {
  const Graph g = gen_clique(4);
  const CsrView csr = to_csr(g);
  for (vid_t v = 0; v < 4; ++v) CHECK(csr.row[v + 1] - csr.row[v] == 3);
}

TEST_CASE("al: cell count is exactly 2m + n") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen_erdos_renyi(40, 0.1, seed);
    const AlView al = to_adjacency_list(g);
    CHECK(al.cells() == 2 * g.num_edges() + g.num_vertices());
  }
}

TEST_CASE("degree stats") {
  CHECK(degree_stats(gen_path(4)).avg_degree == doctest::Approx(1.5));
  CHECK(degree_stats(gen_path(4)).max_degree == 2);
  const DegreeStats star = degree_stats(gen_star(6));
  CHECK(star.max_degree == 5);
  CHECK(star.avg_degree == doctest::Approx(10.0 / 6.0));
  const DegreeStats clique = degree_stats(gen_clique(4));
  CHECK(clique.max_degree == 3);
  CHECK(clique.avg_degree == doctest::Approx(3.0));
  CHECK_THROWS_AS(degree_stats(Graph{}), std::domain_error);
}

TEST_CASE("round trip: csr reconstructs the edge set") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_erdos_renyi(30, 0.15, seed);
    const CsrView csr = to_csr(g);
    std::set<std::pair<vid_t, vid_t>> rebuilt;
    for (vid_t u = 0; u < g.num_vertices(); ++u) {
      for (vid_t e = csr.row[u]; e < csr.row[u + 1]; ++e) {
        const vid_t v = csr.col[e];
        rebuilt.emplace(std::min(u, v), std::max(u, v));
      }
    }
    const std::set<std::pair<vid_t, vid_t>> expect(g.edges().begin(),
                                                   g.edges().end());
    CHECK(rebuilt == expect);
  }
}

TEST_CASE("symmetry: adjacency always contains the reverse") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_erdos_renyi(25, 0.2, seed);
    const CsrView csr = to_csr(g);
    for (vid_t u = 0; u < g.num_vertices(); ++u) {
      for (vid_t e = csr.row[u]; e < csr.row[u + 1]; ++e) {
        CHECK(csr.has_edge(csr.col[e], u));
      }
    }
  }
}
