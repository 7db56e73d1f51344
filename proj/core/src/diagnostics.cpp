#include "spinfer/diagnostics.hpp"

#include <cmath>
#include <future>

namespace spinfer {

CorrelationReport pearson_matrix(const std::vector<RealMatrix>& snapshots,
                                 bool exclude_diagonal) {
  if (snapshots.size() < 2)
    throw ConfigError("pearson_matrix needs at least two snapshots");
  const RealMatrix& first = snapshots[0];
  for (const RealMatrix& s : snapshots)
    if (s.rows() != first.rows() || s.cols() != first.cols())
      throw DimensionError("pearson_matrix: snapshot shape mismatch");

  const bool drop_diag = exclude_diagonal && first.rows() == first.cols();
  std::vector<std::vector<double>> flat(snapshots.size());
  for (std::size_t b = 0; b < snapshots.size(); ++b) {
    for (std::size_t i = 0; i < first.rows(); ++i)
      for (std::size_t u = 0; u < first.cols(); ++u)
        if (!drop_diag || i != u) flat[b].push_back(snapshots[b](i, u));
  }

  const std::size_t len = flat[0].size();
  std::vector<double> mean(snapshots.size(), 0.0);
  std::vector<double> sq(snapshots.size(), 0.0);  // sum of squared deviations
  for (std::size_t b = 0; b < snapshots.size(); ++b) {
    for (double v : flat[b]) mean[b] += v;
    mean[b] /= static_cast<double>(len);
    for (double v : flat[b]) sq[b] += (v - mean[b]) * (v - mean[b]);
    if (sq[b] == 0.0) throw DegenerateSnapshotError(b);
  }

  CorrelationReport report;
  report.matrix = RealMatrix(snapshots.size(), snapshots.size());
  for (std::size_t a = 0; a < snapshots.size(); ++a) {
    report.matrix.at(a, a) = 1.0;
    for (std::size_t b = a + 1; b < snapshots.size(); ++b) {
      double cov = 0.0;
      for (std::size_t k = 0; k < len; ++k)
        cov += (flat[a][k] - mean[a]) * (flat[b][k] - mean[b]);
      const double r = cov / std::sqrt(sq[a] * sq[b]);
      report.matrix.at(a, b) = r;
      report.matrix.at(b, a) = r;
      if (r < report.min_off_diagonal) report.min_off_diagonal = r;
    }
  }
  return report;
}

namespace {

template <typename Input>
AlphaScanResult alpha_scan_impl(const Input& input, std::span<const double> grid,
                                const ChainConfig& config_template) {
  if (grid.empty()) throw ConfigError("alpha_scan: empty grid");
  AlphaScanResult scan;
  scan.grid.assign(grid.begin(), grid.end());

  std::vector<std::future<ChainResult>> futures;
  futures.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    ChainConfig cfg = config_template;
    cfg.alpha = SPParams{grid[k]};
    cfg.seed = config_template.seed + k;
    futures.push_back(
        std::async(std::launch::async, [&input, cfg]() { return run_chain(input, cfg); }));
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    try {
      scan.chains.push_back(futures[k].get());
    } catch (const std::exception& e) {
      throw Error("chain for alpha=" + std::to_string(grid[k]) + " failed: " + e.what());
    }
    scan.mean_final_logpost.push_back(scan.chains.back().block_mean_logpost.back());
  }
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double cur = scan.mean_final_logpost[k];
    const double best = scan.mean_final_logpost[scan.selected_index];
    // ties break toward the smaller alpha, whatever the grid order
    if (cur > best || (cur == best && scan.grid[k] < scan.grid[scan.selected_index]))
      scan.selected_index = k;
  }
  scan.selected_alpha = scan.grid[scan.selected_index];
  return scan;
}

}  // namespace

AlphaScanResult alpha_scan(const BinaryMatrix& m, std::span<const double> grid,
                           const ChainConfig& config_template) {
  return alpha_scan_impl(m, grid, config_template);
}

AlphaScanResult alpha_scan(const ObservationSequence& seq, std::span<const double> grid,
                           const ChainConfig& config_template) {
  return alpha_scan_impl(seq, grid, config_template);
}

RealMatrix hamming_similarity(const BinaryMatrix& m) {
  const std::size_t n = m.rows();
  RealMatrix sim(n, n);
  sim.row_labels = m.row_labels;
  sim.col_labels = m.row_labels;
  for (std::size_t i = 0; i < n; ++i) {
    sim.at(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t hamming = 0;
      for (std::size_t u = 0; u < m.cols(); ++u) hamming += m(i, u) != m(j, u);
      const double s = 1.0 / (1.0 + static_cast<double>(hamming));
      sim.at(i, j) = s;
      sim.at(j, i) = s;
    }
  }
  return sim;
}

}  // namespace spinfer
