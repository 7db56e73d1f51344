#ifndef SPINFER_SP_MODEL_HPP
#define SPINFER_SP_MODEL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spinfer/digraph.hpp"
#include "spinfer/errors.hpp"
#include "spinfer/fixed_point.hpp"
#include "spinfer/matrix.hpp"

namespace spinfer {

/// Decay parameter of the shortest-path propagation model.
struct SPParams {
  double alpha = 0.9;
};

void validate_params(const SPParams& p);  // ConfigError unless 0 <= alpha <= 1

/// Influence of node j on node i: alpha^d(j,i). Conventions at the edges of
/// the parameter range: d = 0 gives 1 even for alpha = 0 (0^0 = 1), and an
/// unreachable pair gives 0 even for alpha = 1.
double influence(std::size_t j, std::size_t i, const DistanceMatrix& dist, const SPParams& p);

/// Precomputed alpha^d for d = 0..n-1, with each distance classified by what
/// the factor (1 - alpha^d) contributes to a product of survival terms.
/// Distances whose log-term quantizes below fixed-point resolution are
/// classified kNone together with genuinely zero powers.
class AlphaPowerTable {
 public:
  enum class FactorKind : std::uint8_t {
    kNone,    // alpha^d == 0 (or negligible): factor 1, no contribution
    kZero,    // alpha^d == 1: factor 0, forces the cell probability to 0
    kFinite,  // 0 < alpha^d < 1: contributes log(1 - alpha^d)
  };

  AlphaPowerTable(const SPParams& p, std::size_t n);

  double alpha() const { return alpha_; }
  std::size_t size() const { return pow_.size(); }

  double power(std::int32_t d) const { return d == kUnreachable ? 0.0 : pow_[d]; }
  FactorKind kind(std::int32_t d) const {
    return d == kUnreachable ? FactorKind::kNone : kind_[d];
  }
  /// Quantized log(1 - alpha^d); only meaningful for kFinite distances.
  fixedpoint::Acc qterm(std::int32_t d) const { return qterm_[d]; }
  /// Unquantized log(1 - alpha^d) for kFinite distances.
  double log_term(std::int32_t d) const { return log_term_[d]; }

 private:
  double alpha_;
  std::vector<double> pow_;
  std::vector<double> log_term_;
  std::vector<fixedpoint::Acc> qterm_;
  std::vector<FactorKind> kind_;
};

// --- direct (non-incremental) likelihood evaluation -----------------------

/// Pr(M(i,u) = 0 | G, N): product over all j (including j = i) of
/// (1 - N(j,u) alpha^d(j,i)). Returns exactly 0 when some factor is 0.
double prob_entry_zero(std::size_t i, std::size_t u, const BinaryMatrix& initiators,
                       const DistanceMatrix& dist, const SPParams& p);

/// Sum over cells of log Pr(M(i,u) | G, N); -infinity signals a state that
/// cannot have produced M (never computed via log(0)).
double log_likelihood(const BinaryMatrix& m, const DirectedGraph& g,
                      const BinaryMatrix& initiators, const SPParams& p);
double log_likelihood(const BinaryMatrix& m, const BinaryMatrix& sources,
                      const DistanceMatrix& dist, const SPParams& p);

/// Per-cell zero-probability of the temporal step t: sources are the nodes
/// that carried the signal at t-1 or initiate it at t (bitwise OR).
double step_prob_zero(std::size_t i, std::size_t u, const BinaryMatrix& m_prev,
                      const BinaryMatrix& n_t, const DistanceMatrix& dist, const SPParams& p);

/// Chain-factorized log-likelihood of an ordered sequence: the t = 1 term
/// uses N_1 alone, later terms condition on M_{t-1}. Throws DimensionError /
/// MonotonicityError when the sequence or initiator list is inconsistent.
double log_likelihood_temporal(const ObservationSequence& seq, const DirectedGraph& g,
                               const std::vector<BinaryMatrix>& initiators, const SPParams& p);

/// Grid search for the decay parameter; ties break toward the smaller value.
struct AlphaFit {
  double best_alpha;
  std::vector<double> log_likelihoods;  // one per grid value, same order
};

AlphaFit fit_alpha(const BinaryMatrix& m, const DirectedGraph& g,
                   const BinaryMatrix& initiators, std::span<const double> grid);

}  // namespace spinfer

#endif  // SPINFER_SP_MODEL_HPP
