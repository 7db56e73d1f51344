#include "spinfer/sp_model.hpp"

#include <cmath>
#include <limits>

namespace spinfer {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void validate_params(const SPParams& p) {
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0))
    throw ConfigError("alpha must lie in [0,1], got " + std::to_string(p.alpha));
}

double influence(std::size_t j, std::size_t i, const DistanceMatrix& dist, const SPParams& p) {
  const std::int32_t d = dist(j, i);
  if (d == kUnreachable) return 0.0;
  if (d == 0) return 1.0;  // 0^0 = 1 convention holds even for alpha = 0
  return std::pow(p.alpha, static_cast<double>(d));
}

AlphaPowerTable::AlphaPowerTable(const SPParams& p, std::size_t n) : alpha_(p.alpha) {
  validate_params(p);
  const std::size_t len = n == 0 ? 1 : n;
  pow_.resize(len);
  log_term_.resize(len, 0.0);
  qterm_.resize(len, 0);
  kind_.resize(len, FactorKind::kNone);
  for (std::size_t d = 0; d < len; ++d) {
    const double f = d == 0 ? 1.0 : std::pow(alpha_, static_cast<double>(d));
    pow_[d] = f;
    if (f >= 1.0) {
      kind_[d] = FactorKind::kZero;
    } else if (f > 0.0) {
      const double lt = std::log1p(-f);
      const fixedpoint::Acc q = fixedpoint::quantize(lt);
      if (q != 0) {
        kind_[d] = FactorKind::kFinite;
        log_term_[d] = lt;
        qterm_[d] = q;
      }
    }
  }
}

namespace {

// Per-cell log Pr(M(i,u)=0) in log domain with an explicit impossibility
// channel so log(0) is never evaluated.
struct CellZeroProb {
  bool zero = false;      // Pr(=0) is exactly 0
  double log_p0 = 0.0;    // valid when !zero
  bool has_terms = false; // some finite factor < 1 contributed
};

template <typename SourceBit>
CellZeroProb cell_zero_prob(std::size_t i, std::size_t u, std::size_t n, SourceBit src,
                            const DistanceMatrix& dist, const SPParams& p) {
  CellZeroProb out;
  for (std::size_t j = 0; j < n; ++j) {
    if (!src(j, u)) continue;
    const double f = influence(j, i, dist, p);
    if (f >= 1.0) {
      out.zero = true;
      return out;
    }
    if (f > 0.0) {
      out.log_p0 += std::log1p(-f);
      out.has_terms = true;
    }
  }
  return out;
}

// log Pr of the observed bit given the cell's zero-probability.
double cell_log_prob(bool observed_one, const CellZeroProb& z) {
  if (!observed_one) return z.zero ? kNegInf : z.log_p0;
  if (z.zero) return 0.0;                  // Pr(=1) = 1 exactly
  if (!z.has_terms) return kNegInf;        // Pr(=1) = 0: nothing reaches the cell
  return log1mexp(z.log_p0);
}

double sum_log_likelihood(const BinaryMatrix& m, const BinaryMatrix& sources,
                          const DistanceMatrix& dist, const SPParams& p) {
  const std::size_t n = m.rows();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t u = 0; u < m.cols(); ++u) {
      const CellZeroProb z = cell_zero_prob(
          i, u, n, [&](std::size_t j, std::size_t v) { return sources(j, v) != 0; }, dist, p);
      const double lp = cell_log_prob(m(i, u) != 0, z);
      if (lp == kNegInf) return kNegInf;
      total += lp;
    }
  }
  return total;
}

}  // namespace

double prob_entry_zero(std::size_t i, std::size_t u, const BinaryMatrix& initiators,
                       const DistanceMatrix& dist, const SPParams& p) {
  const CellZeroProb z = cell_zero_prob(
      i, u, initiators.rows(), [&](std::size_t j, std::size_t v) { return initiators(j, v) != 0; },
      dist, p);
  return z.zero ? 0.0 : std::exp(z.log_p0);
}

double log_likelihood(const BinaryMatrix& m, const BinaryMatrix& sources,
                      const DistanceMatrix& dist, const SPParams& p) {
  validate_params(p);
  if (m.rows() != dist.size() || sources.rows() != m.rows() || sources.cols() != m.cols())
    throw DimensionError("log_likelihood: inconsistent shapes");
  return sum_log_likelihood(m, sources, dist, p);
}

double log_likelihood(const BinaryMatrix& m, const DirectedGraph& g,
                      const BinaryMatrix& initiators, const SPParams& p) {
  if (g.size() != m.rows()) throw DimensionError("log_likelihood: graph size != matrix rows");
  return log_likelihood(m, initiators, all_pairs_distances(g), p);
}

double step_prob_zero(std::size_t i, std::size_t u, const BinaryMatrix& m_prev,
                      const BinaryMatrix& n_t, const DistanceMatrix& dist, const SPParams& p) {
  if (!m_prev.same_shape(n_t)) throw DimensionError("step_prob_zero: shape mismatch");
  // M_{t-1}(j,u) + N_t(j,u) - M_{t-1}(j,u) N_t(j,u) is the OR of the bits.
  const CellZeroProb z = cell_zero_prob(
      i, u, m_prev.rows(),
      [&](std::size_t j, std::size_t v) { return m_prev(j, v) != 0 || n_t(j, v) != 0; }, dist, p);
  return z.zero ? 0.0 : std::exp(z.log_p0);
}

double log_likelihood_temporal(const ObservationSequence& seq, const DirectedGraph& g,
                               const std::vector<BinaryMatrix>& initiators, const SPParams& p) {
  validate_params(p);
  if (auto v = validate_sequence(seq)) throw MonotonicityError(v->t, v->i, v->u);
  if (initiators.size() != seq.size())
    throw DimensionError("expected " + std::to_string(seq.size()) + " initiator matrices, got " +
                         std::to_string(initiators.size()));
  for (const BinaryMatrix& n_t : initiators)
    if (!n_t.same_shape(seq[0])) throw DimensionError("initiator matrix shape mismatch");
  if (g.size() != seq[0].rows()) throw DimensionError("graph size != matrix rows");

  const DistanceMatrix dist = all_pairs_distances(g);
  double total = 0.0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const BinaryMatrix sources =
        t == 0 ? initiators[0] : matrix_or(seq[t - 1], initiators[t]);
    const double term = sum_log_likelihood(seq[t], sources, dist, p);
    if (term == kNegInf) return kNegInf;
    total += term;
  }
  return total;
}

AlphaFit fit_alpha(const BinaryMatrix& m, const DirectedGraph& g,
                   const BinaryMatrix& initiators, std::span<const double> grid) {
  if (grid.empty()) throw ConfigError("fit_alpha: empty grid");
  AlphaFit fit;
  fit.log_likelihoods.reserve(grid.size());
  std::size_t best = 0;
  const DistanceMatrix dist = all_pairs_distances(g);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const SPParams p{grid[k]};
    validate_params(p);
    fit.log_likelihoods.push_back(log_likelihood(m, initiators, dist, p));
    // ties break toward the smaller alpha, whatever the grid order
    if (fit.log_likelihoods[k] > fit.log_likelihoods[best] ||
        (fit.log_likelihoods[k] == fit.log_likelihoods[best] && grid[k] < grid[best]))
      best = k;
  }
  fit.best_alpha = grid[best];
  return fit;
}

}  // namespace spinfer
