// Test-only reference implementations, deliberately independent of the
// library code paths they check: distances come from Floyd-Warshall instead
// of BFS, likelihoods from literal per-cell products in the linear domain,
// posterior marginals from exhaustive state enumeration.
#ifndef SPINFER_TESTS_ORACLES_HPP
#define SPINFER_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "spinfer/digraph.hpp"
#include "spinfer/matrix.hpp"

namespace oracles {

inline constexpr int kInf = 1 << 20;
inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Hop counts by Floyd-Warshall over the adjacency matrix.
inline std::vector<std::vector<int>> fw_distances(const spinfer::DirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline double fw_influence(double alpha, int d) {
  if (d >= kInf) return 0.0;
  if (d == 0) return 1.0;
  return std::pow(alpha, d);
}

// Literal per-cell product Pr(M(i,u)=0) over explicit source bits.
inline double cell_prob_zero(std::size_t i, std::size_t u, const spinfer::BinaryMatrix& sources,
                             const std::vector<std::vector<int>>& d, double alpha) {
  double p0 = 1.0;
  for (std::size_t j = 0; j < sources.rows(); ++j)
    if (sources(j, u)) p0 *= 1.0 - fw_influence(alpha, d[j][i]);
  return p0;
}

inline double log_likelihood(const spinfer::BinaryMatrix& m, const spinfer::DirectedGraph& g,
                             const spinfer::BinaryMatrix& sources, double alpha) {
  const auto d = fw_distances(g);
  double total = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t u = 0; u < m.cols(); ++u) {
      const double p0 = cell_prob_zero(i, u, sources, d, alpha);
      const double p = m(i, u) ? 1.0 - p0 : p0;
      if (p <= 0.0) return kNegInf;
      total += std::log(p);
    }
  }
  return total;
}

inline double log_likelihood_temporal(const spinfer::ObservationSequence& seq,
                                      const spinfer::DirectedGraph& g,
                                      const std::vector<spinfer::BinaryMatrix>& inits,
                                      double alpha) {
  double total = 0.0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    spinfer::BinaryMatrix sources = inits[t];
    if (t > 0)
      for (std::size_t i = 0; i < sources.rows(); ++i)
        for (std::size_t u = 0; u < sources.cols(); ++u)
          if (seq[t - 1](i, u)) sources.set(i, u, true);
    const double term = log_likelihood(seq[t], g, sources, alpha);
    if (term == kNegInf) return kNegInf;
    total += term;
  }
  return total;
}

inline double log_posterior(const spinfer::BinaryMatrix& m, const spinfer::DirectedGraph& g,
                            const spinfer::BinaryMatrix& inits, double alpha, double c1,
                            double c2) {
  const double ll = log_likelihood(m, g, inits, alpha);
  if (ll == kNegInf) return kNegInf;
  return ll - c1 * static_cast<double>(g.edge_count()) -
         c2 * static_cast<double>(spinfer::count_ones(inits));
}

// Exact posterior marginals by enumerating every (G, N) pair. Feasible for
// n(n-1) + n*m of a dozen bits or so.
struct ExactMarginals {
  std::vector<double> edge;       // n*n, diagonal 0
  std::vector<double> initiator;  // n*m
  double expected_edges = 0.0;
};

inline ExactMarginals enumerate_posterior(const spinfer::BinaryMatrix& m, double alpha,
                                          double c1, double c2) {
  const std::size_t n = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  const std::size_t gbits = cells.size();
  const std::size_t nbits = n * cols;

  std::vector<double> logp;
  logp.reserve(std::size_t{1} << (gbits + nbits));
  double max_lp = kNegInf;
  for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << gbits); ++gm) {
    spinfer::DirectedGraph g(n);
    for (std::size_t b = 0; b < gbits; ++b)
      if (gm >> b & 1) g.set_edge(cells[b].first, cells[b].second, true);
    for (std::uint64_t nm = 0; nm < (std::uint64_t{1} << nbits); ++nm) {
      spinfer::BinaryMatrix inits(n, cols);
      for (std::size_t b = 0; b < nbits; ++b)
        if (nm >> b & 1) inits.set(b / cols, b % cols, true);
      const double lp = log_posterior(m, g, inits, alpha, c1, c2);
      logp.push_back(lp);
      max_lp = std::max(max_lp, lp);
    }
  }

  ExactMarginals out;
  out.edge.assign(n * n, 0.0);
  out.initiator.assign(nbits, 0.0);
  double z = 0.0;
  std::size_t idx = 0;
  for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << gbits); ++gm) {
    for (std::uint64_t nm = 0; nm < (std::uint64_t{1} << nbits); ++nm, ++idx) {
      if (logp[idx] == kNegInf) continue;
      const double w = std::exp(logp[idx] - max_lp);
      z += w;
      for (std::size_t b = 0; b < gbits; ++b)
        if (gm >> b & 1) out.edge[cells[b].first * n + cells[b].second] += w;
      for (std::size_t b = 0; b < nbits; ++b)
        if (nm >> b & 1) out.initiator[b] += w;
    }
  }
  for (double& v : out.edge) v /= z;
  for (double& v : out.initiator) v /= z;
  out.expected_edges = std::accumulate(out.edge.begin(), out.edge.end(), 0.0);
  return out;
}

// Exact marginals of the temporal posterior over every (G, N_1..N_T),
// feasible for a handful of bits.
struct ExactTemporalMarginals {
  std::vector<double> edge;                     // n*n
  std::vector<std::vector<double>> initiator;   // T x (n*m)
};

inline ExactTemporalMarginals enumerate_temporal_posterior(
    const spinfer::ObservationSequence& seq, double alpha, double c1, double c2) {
  const std::size_t n = seq[0].rows();
  const std::size_t cols = seq[0].cols();
  const std::size_t T = seq.size();
  std::vector<std::pair<std::size_t, std::size_t>> gcells;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) gcells.emplace_back(i, j);
  const std::size_t gbits = gcells.size();
  const std::size_t nbits = n * cols;
  const std::size_t total_nbits = T * nbits;

  ExactTemporalMarginals out;
  out.edge.assign(n * n, 0.0);
  out.initiator.assign(T, std::vector<double>(nbits, 0.0));

  // two passes: find the max for stable exponentiation, then accumulate
  double max_lp = kNegInf;
  for (int pass = 0; pass < 2; ++pass) {
    double z = 0.0;
    for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << gbits); ++gm) {
      spinfer::DirectedGraph g(n);
      for (std::size_t b = 0; b < gbits; ++b)
        if (gm >> b & 1) g.set_edge(gcells[b].first, gcells[b].second, true);
      for (std::uint64_t nm = 0; nm < (std::uint64_t{1} << total_nbits); ++nm) {
        std::vector<spinfer::BinaryMatrix> inits(T, spinfer::BinaryMatrix(n, cols));
        std::size_t ones = 0;
        for (std::size_t b = 0; b < total_nbits; ++b) {
          if (nm >> b & 1) {
            inits[b / nbits].set((b % nbits) / cols, (b % nbits) % cols, true);
            ++ones;
          }
        }
        const double ll = log_likelihood_temporal(seq, g, inits, alpha);
        if (ll == kNegInf) continue;
        const double lp = ll - c1 * static_cast<double>(g.edge_count()) -
                          c2 * static_cast<double>(ones);
        if (pass == 0) {
          max_lp = std::max(max_lp, lp);
          continue;
        }
        const double w = std::exp(lp - max_lp);
        z += w;
        for (std::size_t b = 0; b < gbits; ++b)
          if (gm >> b & 1) out.edge[gcells[b].first * n + gcells[b].second] += w;
        for (std::size_t b = 0; b < total_nbits; ++b)
          if (nm >> b & 1) out.initiator[b / nbits][b % nbits] += w;
      }
    }
    if (pass == 1) {
      for (double& v : out.edge) v /= z;
      for (auto& per_t : out.initiator)
        for (double& v : per_t) v /= z;
    }
  }
  return out;
}

// Mann-Whitney AUC with average ranks for ties.
inline double auc(const std::vector<double>& scores, const std::vector<int>& labels) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  std::vector<double> rank(n);
  std::size_t k = 0;
  while (k < n) {
    std::size_t j = k;
    while (j + 1 < n && scores[order[j + 1]] == scores[order[k]]) ++j;
    const double avg = 0.5 * static_cast<double>(k + j) + 1.0;
    for (std::size_t q = k; q <= j; ++q) rank[order[q]] = avg;
    k = j + 1;
  }
  double pos_rank_sum = 0.0;
  std::size_t pos = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (labels[q]) {
      pos_rank_sum += rank[q];
      ++pos;
    }
  }
  const std::size_t neg = n - pos;
  return (pos_rank_sum - 0.5 * static_cast<double>(pos) * static_cast<double>(pos + 1)) /
         (static_cast<double>(pos) * static_cast<double>(neg));
}

// The worked 3x6 example: M, its initiator matrix, and the two-edge graph.
struct WorkedExample {
  spinfer::BinaryMatrix m;
  spinfer::BinaryMatrix inits;
  spinfer::DirectedGraph graph;
};

inline WorkedExample worked_example() {
  WorkedExample ex;
  ex.m = spinfer::BinaryMatrix::from_rows({{1, 1, 1, 0, 0, 0},
                                           {1, 1, 1, 1, 1, 1},
                                           {0, 0, 0, 1, 1, 1}});
  ex.inits = spinfer::BinaryMatrix::from_rows({{1, 1, 1, 0, 0, 0},
                                               {0, 0, 0, 0, 0, 0},
                                               {0, 0, 0, 1, 1, 1}});
  ex.graph = spinfer::DirectedGraph(3);
  ex.graph.set_edge(0, 1, true);
  ex.graph.set_edge(2, 1, true);
  return ex;
}

// 99th-percentile chi-square critical value, 15 degrees of freedom.
inline constexpr double kChiSq99Dof15 = 30.5779;

}  // namespace oracles

#endif  // SPINFER_TESTS_ORACLES_HPP
