#include "slimsell/analysis.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace slimsell {

StorageReport storage_report(const Graph& g, std::int64_t C, std::int64_t sigma) {
  const SlimSellRepr slim = build_slimsell(g, C, sigma);
  const SellCSigma sell = build_sell_c_sigma(g, C, sigma, semiring(Variant::tropical));
  const CsrView csr = to_csr(g);
  const AlView al = to_adjacency_list(g);

  StorageReport rep;
  rep.n = g.num_vertices();
  rep.m = g.num_edges();
  rep.C = C;
  rep.sigma = slim.sigma;
  rep.n_chunks = slim.n_chunks;
  rep.padding = slim.padding;

  const std::int64_t two_m = 2 * rep.m;
  rep.csr_measured = static_cast<std::int64_t>(csr.row.size() + csr.col.size());
  rep.csr_predicted = two_m + rep.n + 1;
  rep.csr_weighted = 2 * two_m + rep.n;
  rep.al_measured = al.cells();
  rep.al_predicted = two_m + rep.n;
  rep.sell_measured = storage_cells(sell);
  rep.sell_predicted = 2 * (two_m + rep.padding) + 2 * rep.n_chunks;
  rep.slimsell_measured = storage_cells(slim);
  rep.slimsell_predicted = two_m + rep.padding + 2 * rep.n_chunks;

  rep.slimsell_vs_sell = rep.sell_measured == 0
                             ? 0.0
                             : static_cast<double>(rep.slimsell_measured) /
                                   static_cast<double>(rep.sell_measured);
  rep.slimsell_vs_al = rep.al_measured == 0
                           ? 0.0
                           : static_cast<double>(rep.slimsell_measured) /
                                 static_cast<double>(rep.al_measured);
  rep.slimsell_beats_al = rep.padding < rep.n - 2 * rep.n_chunks;
  return rep;
}

namespace {

WorkBound make_bound(WorkModel model, double diameter, double n, double m,
                     double chunk_height, double tail) {
  if (!(diameter > 0) || !(n > 0) || !(m >= 0) || !(chunk_height > 0)) {
    throw std::invalid_argument("work bound parameters must be positive");
  }
  WorkBound b;
  b.model = model;
  b.diameter = diameter;
  b.n = n;
  b.m = m;
  b.chunk_height = chunk_height;
  b.value = diameter * n + diameter * m + diameter * chunk_height * tail;
  return b;
}

}  // namespace

WorkBound work_bound_general(double diameter, double n, double m,
                             double chunk_height, double max_degree) {
  if (!(max_degree >= 0)) throw std::invalid_argument("max degree must be >= 0");
  WorkBound b = make_bound(WorkModel::general, diameter, n, m, chunk_height,
                           max_degree);
  b.max_degree = max_degree;
  return b;
}

WorkBound work_bound_erdos_renyi(double diameter, double n, double m,
                                 double chunk_height) {
  return make_bound(WorkModel::erdos_renyi, diameter, n, m, chunk_height,
                    std::log(n));
}

WorkBound work_bound_power_law(double diameter, double n, double m,
                               double chunk_height, double alpha, double beta) {
  if (!(beta > 1.0)) throw std::invalid_argument("power-law exponent must be > 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be > 0");
  const double tail = std::pow(alpha * n * std::log(n), 1.0 / (beta - 1.0));
  WorkBound b =
      make_bound(WorkModel::power_law, diameter, n, m, chunk_height, tail);
  b.alpha = alpha;
  b.beta = beta;
  return b;
}

PaddingBound check_padding_bound(const Graph& g, std::int64_t C) {
  const vid_t n = g.num_vertices();
  const SlimSellRepr full = build_slimsell(g, C, std::max<vid_t>(n, 1));
  vid_t max_degree = 0;
  if (n > 0) max_degree = degree_stats(g).max_degree;

  PaddingBound pb;
  pb.measured_cells = static_cast<std::int64_t>(full.col.size());
  pb.bound = 2 * g.num_edges() + C * max_degree;
  pb.holds = pb.measured_cells <= pb.bound;
  return pb;
}

std::string render_storage_table(const StorageReport& rep) {
  std::ostringstream os;
  os << "graph: n=" << rep.n << " m=" << rep.m << " C=" << rep.C
     << " sigma=" << rep.sigma << " chunks=" << rep.n_chunks
     << " P=" << rep.padding << '\n';
  os << "  representation   measured   predicted\n";
  auto row = [&](const char* name, std::int64_t measured, std::int64_t predicted) {
    os << "  " << name;
    for (std::size_t i = std::string(name).size(); i < 17; ++i) os << ' ';
    std::string ms = std::to_string(measured), ps = std::to_string(predicted);
    for (std::size_t i = ms.size(); i < 8; ++i) os << ' ';
    os << ms << "   ";
    for (std::size_t i = ps.size(); i < 9; ++i) os << ' ';
    os << ps << '\n';
  };
  row("csr", rep.csr_measured, rep.csr_predicted);
  row("csr+val", rep.csr_weighted, rep.csr_weighted);
  row("al", rep.al_measured, rep.al_predicted);
  row("sell-c-sigma", rep.sell_measured, rep.sell_predicted);
  row("slimsell", rep.slimsell_measured, rep.slimsell_predicted);
  os << "  slimsell/sell = " << rep.slimsell_vs_sell
     << ", slimsell/al = " << rep.slimsell_vs_al
     << ", beats_al = " << (rep.slimsell_beats_al ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace slimsell
