#pragma once

#include <cstdint>
#include <string>

#include "slimsell/graph.hpp"
#include "slimsell/repr.hpp"

namespace slimsell {

/// Measured storage cells side by side with the closed-form predictions;
/// the formulas are exact once the padding count P is known.
struct StorageReport {
  vid_t n = 0;
  vid_t m = 0;
  std::int64_t C = 1;
  std::int64_t sigma = 1;
  std::int64_t n_chunks = 0;
  std::int64_t padding = 0;  // P

  std::int64_t csr_measured = 0;        // 2m + n + 1 (no value array)
  std::int64_t csr_predicted = 0;       // 2m + n + 1
  std::int64_t csr_weighted = 0;        // 4m + n, the with-values accounting
  std::int64_t al_measured = 0;         // 2m + n
  std::int64_t al_predicted = 0;
  std::int64_t sell_measured = 0;       // 4m + 2P + 2 n_c
  std::int64_t sell_predicted = 0;
  std::int64_t slimsell_measured = 0;   // 2m + P + 2 n_c
  std::int64_t slimsell_predicted = 0;

  double slimsell_vs_sell = 0.0;  // slimsell / sell cells
  double slimsell_vs_al = 0.0;    // slimsell / al cells
  bool slimsell_beats_al = false; // P < n - 2 n_c, strict
};

StorageReport storage_report(const Graph& g, std::int64_t C, std::int64_t sigma);

enum class WorkModel { general, erdos_renyi, power_law };

/// Dominant-term work index for one full BFS: D*n + D*m + D*C*T where T is
/// rho_hat (general), log n (uniform random), or (alpha n log n)^(1/(beta-1))
/// (power law). Big-O constants are dropped; values compare, they do not
/// predict cycles.
struct WorkBound {
  WorkModel model = WorkModel::general;
  double diameter = 0.0;
  double n = 0.0;
  double m = 0.0;
  double chunk_height = 0.0;
  double max_degree = 0.0;  // general
  double alpha = 0.0;       // power_law
  double beta = 0.0;        // power_law
  double value = 0.0;
};

WorkBound work_bound_general(double diameter, double n, double m,
                             double chunk_height, double max_degree);
WorkBound work_bound_erdos_renyi(double diameter, double n, double m,
                                 double chunk_height);
/// Throws std::invalid_argument for beta <= 1.
WorkBound work_bound_power_law(double diameter, double n, double m,
                               double chunk_height, double alpha, double beta);

/// Full-sort padding theorem: at sigma = n the col array holds at most
/// 2m + C*rho_hat cells.
struct PaddingBound {
  std::int64_t measured_cells = 0;  // |col| = 2m + P at sigma = n
  std::int64_t bound = 0;           // 2m + C * rho_hat
  bool holds = false;
};

PaddingBound check_padding_bound(const Graph& g, std::int64_t C);

/// Aligned text table of one report, for the storage command.
std::string render_storage_table(const StorageReport& rep);

}  // namespace slimsell
