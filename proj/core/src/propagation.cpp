#include "spinfer/propagation.hpp"

#include <cmath>
#include <vector>

namespace spinfer {

BinaryMatrix sp_forward(const DirectedGraph& g, const BinaryMatrix& initiators,
                        const SPParams& p, Rng& rng) {
  validate_params(p);
  if (g.size() != initiators.rows()) throw DimensionError("sp_forward: graph size != rows");
  const DistanceMatrix dist = all_pairs_distances(g);
  BinaryMatrix out(initiators.rows(), initiators.cols());
  out.row_labels = initiators.row_labels;
  out.col_labels = initiators.col_labels;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t u = 0; u < out.cols(); ++u) {
      const double p1 = 1.0 - prob_entry_zero(i, u, initiators, dist, p);
      out.set(i, u, rng.next_unit() < p1);
    }
  }
  return out;
}

IndependentCascadeModel::IndependentCascadeModel(double edge_prob) : edge_prob_(edge_prob) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw ConfigError("edge_prob must lie in [0,1], got " + std::to_string(edge_prob));
}

BinaryMatrix ic_forward(const DirectedGraph& g, const BinaryMatrix& initiators,
                        double edge_prob, Rng& rng) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw ConfigError("edge_prob must lie in [0,1], got " + std::to_string(edge_prob));
  if (g.size() != initiators.rows()) throw DimensionError("ic_forward: graph size != rows");
  const std::size_t n = g.size();
  BinaryMatrix out(initiators.rows(), initiators.cols());
  out.row_labels = initiators.row_labels;
  out.col_labels = initiators.col_labels;
  std::vector<std::uint8_t> active(n);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  for (std::size_t u = 0; u < initiators.cols(); ++u) {
    std::fill(active.begin(), active.end(), 0);
    queue.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (initiators(i, u)) {
        active[i] = 1;
        queue.push_back(static_cast<std::uint32_t>(i));
      }
    }
    // Each activated node gets one chance per out-neighbor, FIFO order.
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t j = queue[head];
      const std::uint8_t* row = g.adjacency_row(j);
      for (std::size_t v = 0; v < n; ++v) {
        if (!row[v] || active[v]) continue;
        if (rng.next_unit() < edge_prob) {
          active[v] = 1;
          queue.push_back(static_cast<std::uint32_t>(v));
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (active[i]) out.set(i, u, true);
  }
  return out;
}

void validate_params(const GenericLikelihoodParams& p) {
  if (!(p.c >= 0.0)) throw ConfigError("penalty c must be >= 0");
  if (p.mc_samples < 1) throw ConfigError("mc_samples must be >= 1");
}

RealMatrix expected_matrix(const PropagationModel& model, const DirectedGraph& g,
                           const BinaryMatrix& initiators, const GenericLikelihoodParams& params,
                           Rng& rng) {
  validate_params(params);
  const std::size_t samples = model.is_deterministic() ? 1 : params.mc_samples;
  RealMatrix mean(initiators.rows(), initiators.cols(), 0.0);
  for (std::size_t s = 0; s < samples; ++s) {
    const BinaryMatrix draw = model.simulate(g, initiators, rng);
    for (std::size_t i = 0; i < mean.rows(); ++i)
      for (std::size_t u = 0; u < mean.cols(); ++u)
        if (draw(i, u)) mean.at(i, u) += 1.0;
  }
  for (std::size_t i = 0; i < mean.rows(); ++i)
    for (std::size_t u = 0; u < mean.cols(); ++u)
      mean.at(i, u) /= static_cast<double>(samples);
  return mean;
}

RealMatrix sp_expected_matrix(const DirectedGraph& g, const BinaryMatrix& initiators,
                              const SPParams& p) {
  validate_params(p);
  const DistanceMatrix dist = all_pairs_distances(g);
  RealMatrix out(initiators.rows(), initiators.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t u = 0; u < out.cols(); ++u)
      out.at(i, u) = 1.0 - prob_entry_zero(i, u, initiators, dist, p);
  return out;
}

double generic_log_likelihood(const BinaryMatrix& m, const RealMatrix& expected, double c) {
  if (m.rows() != expected.rows() || m.cols() != expected.cols())
    throw DimensionError("generic_log_likelihood: shape mismatch");
  if (!(c >= 0.0)) throw ConfigError("penalty c must be >= 0");
  double disagreement = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t u = 0; u < m.cols(); ++u)
      disagreement += std::abs(static_cast<double>(m(i, u)) - expected(i, u));
  return -c * disagreement;
}

double generic_log_likelihood(const BinaryMatrix& m, const DirectedGraph& g,
                              const BinaryMatrix& initiators, const PropagationModel& model,
                              const GenericLikelihoodParams& params, Rng& rng) {
  return generic_log_likelihood(m, expected_matrix(model, g, initiators, params, rng), params.c);
}

}  // namespace spinfer
