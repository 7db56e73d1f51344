#ifndef SPINFER_DIAGNOSTICS_HPP
#define SPINFER_DIAGNOSTICS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "spinfer/matrix.hpp"
#include "spinfer/sampler.hpp"

namespace spinfer {

/// Pairwise Pearson correlations between flattened snapshot averages; the
/// convergence heuristic reported alongside every run.
struct CorrelationReport {
  RealMatrix matrix;  // B x B, symmetric, unit diagonal
  double min_off_diagonal = 1.0;
};

/// `exclude_diagonal` drops the (i,i) cells of square snapshots before
/// correlating; graph averages carry a constant unit diagonal that would
/// otherwise distort the coefficients. Throws DegenerateSnapshotError when
/// a snapshot has zero variance over the included cells.
CorrelationReport pearson_matrix(const std::vector<RealMatrix>& snapshots,
                                 bool exclude_diagonal);

struct AlphaScanResult {
  std::vector<double> grid;
  std::vector<ChainResult> chains;          // one per grid value, grid order
  std::vector<double> mean_final_logpost;   // selection statistic per value
  std::size_t selected_index = 0;
  double selected_alpha = 0.0;
};

/// One independent chain per grid value (seed = base seed + grid index),
/// executed concurrently. Selection maximizes the mean unnormalized
/// log-posterior over the final snapshot block; ties break toward the
/// smaller alpha.
AlphaScanResult alpha_scan(const BinaryMatrix& m, std::span<const double> grid,
                           const ChainConfig& config_template);
AlphaScanResult alpha_scan(const ObservationSequence& seq, std::span<const double> grid,
                           const ChainConfig& config_template);

/// Row-similarity baseline: S(i,j) = 1 / (1 + Hamming(row i, row j)).
/// The +1 keeps identical rows finite; S is symmetric with unit diagonal.
RealMatrix hamming_similarity(const BinaryMatrix& m);

}  // namespace spinfer

#endif  // SPINFER_DIAGNOSTICS_HPP
