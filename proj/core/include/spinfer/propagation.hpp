#ifndef SPINFER_PROPAGATION_HPP
#define SPINFER_PROPAGATION_HPP

#include <cstddef>

#include "spinfer/digraph.hpp"
#include "spinfer/matrix.hpp"
#include "spinfer/rng.hpp"
#include "spinfer/sp_model.hpp"

namespace spinfer {

/// A propagation model turns (G, N) into an observation-matrix realization.
/// Every 1-entry of N must appear in every realization; deterministic models
/// must ignore the randomness source.
class PropagationModel {
 public:
  virtual ~PropagationModel() = default;
  virtual BinaryMatrix simulate(const DirectedGraph& g, const BinaryMatrix& initiators,
                                Rng& rng) const = 0;
  virtual bool is_deterministic() const { return false; }
};

/// One independent Bernoulli draw per cell with success probability
/// 1 - Pr(M(i,u)=0 | G, N); initiator cells always come out 1.
BinaryMatrix sp_forward(const DirectedGraph& g, const BinaryMatrix& initiators,
                        const SPParams& p, Rng& rng);

/// Independent cascade, one cascade per signal column: each newly activated
/// node gets a single chance to activate each out-neighbor with probability
/// edge_prob.
BinaryMatrix ic_forward(const DirectedGraph& g, const BinaryMatrix& initiators,
                        double edge_prob, Rng& rng);

class SpPropagationModel final : public PropagationModel {
 public:
  explicit SpPropagationModel(SPParams p) : params_(p) {}
  BinaryMatrix simulate(const DirectedGraph& g, const BinaryMatrix& initiators,
                        Rng& rng) const override {
    return sp_forward(g, initiators, params_, rng);
  }

 private:
  SPParams params_;
};

class IndependentCascadeModel final : public PropagationModel {
 public:
  explicit IndependentCascadeModel(double edge_prob);
  BinaryMatrix simulate(const DirectedGraph& g, const BinaryMatrix& initiators,
                        Rng& rng) const override {
    return ic_forward(g, initiators, edge_prob_, rng);
  }

 private:
  double edge_prob_;
};

struct GenericLikelihoodParams {
  double c = 1.0;                // per-cell disagreement penalty, >= 0
  std::size_t mc_samples = 100;  // Monte Carlo draws for non-deterministic models
};

void validate_params(const GenericLikelihoodParams& p);

/// Element-wise expectation of the model's realization. Deterministic models
/// are realized once and returned exactly; otherwise the mean of mc_samples
/// fresh draws.
RealMatrix expected_matrix(const PropagationModel& model, const DirectedGraph& g,
                           const BinaryMatrix& initiators, const GenericLikelihoodParams& params,
                           Rng& rng);

/// Closed-form expectation of the SP model (per-cell 1-entry probability);
/// usable where a deterministic expectation is preferred over Monte Carlo.
RealMatrix sp_expected_matrix(const DirectedGraph& g, const BinaryMatrix& initiators,
                              const SPParams& p);

/// Unnormalized log-likelihood -c * sum |M - M_p|; 0 iff the expectation
/// reproduces M exactly, negative otherwise.
double generic_log_likelihood(const BinaryMatrix& m, const RealMatrix& expected, double c);
double generic_log_likelihood(const BinaryMatrix& m, const DirectedGraph& g,
                              const BinaryMatrix& initiators, const PropagationModel& model,
                              const GenericLikelihoodParams& params, Rng& rng);

}  // namespace spinfer

#endif  // SPINFER_PROPAGATION_HPP
