#ifndef SPINFER_SAMPLER_HPP
#define SPINFER_SAMPLER_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "spinfer/digraph.hpp"
#include "spinfer/likelihood_cache.hpp"
#include "spinfer/matrix.hpp"
#include "spinfer/rng.hpp"
#include "spinfer/sp_model.hpp"

namespace spinfer {

/// Exponential priors penalizing every edge (c1) and every initiator entry
/// (c2): log Pr(G) = -c1 |E|, log Pr(N_t) = -c2 |N_t|, up to normalization.
struct Priors {
  double c1 = 2.0;
  double c2 = 9.0;
};

void validate_priors(const Priors& p);

enum class SnapshotMode : std::uint8_t {
  kBlockwise,   // disjoint consecutive windows of snapshot_every samples
  kCumulative,  // each snapshot averages all samples since burn-in
};

struct ChainConfig {
  std::size_t total_steps = 200000;
  std::size_t burnin_steps = 100000;
  std::size_t snapshot_every = 10000;
  std::uint64_t seed = 0;
  SPParams alpha{0.9};
  Priors priors{};
  SnapshotMode snapshot_mode = SnapshotMode::kBlockwise;
};

void validate_config(const ChainConfig& cfg);

enum class MoveKind : std::uint8_t { kGraphFlip, kInitiatorFlip };

/// One local move: a single off-diagonal graph cell or a single initiator
/// cell (with its timestep in temporal mode).
struct MoveProposal {
  MoveKind kind = MoveKind::kGraphFlip;
  std::size_t t = 0;  // initiator timestep
  std::size_t a = 0;  // graph row i / initiator row k
  std::size_t b = 0;  // graph col j / initiator col l
};

/// Uniform local move. Draw order per proposal: move kind, then for
/// initiator moves the timestep (only when timesteps > 1, so a length-1
/// temporal chain consumes the same stream as a single-matrix chain), then
/// the cell index. For n < 2 there is no graph cell to flip and every move
/// is an initiator move (no kind draw).
MoveProposal propose_local_move(std::size_t n, std::size_t m, std::size_t timesteps, Rng& rng);

class SamplerState;

struct StepOutcome {
  MoveProposal proposal;
  bool accepted = false;
  double delta_log_posterior = 0.0;
};

/// One Metropolis-Hastings transition: propose a local move, accept with
/// probability min{1, exp(delta log posterior)}. Rejection leaves the state
/// bit-identical. Initiator flips use the O(n) incremental cache path;
/// graph flips are evaluated into scratch distance/cache buffers that are
/// swapped in only on acceptance.
StepOutcome mh_step(SamplerState& state, Rng& rng);

/// Current chain state: graph, per-timestep initiators, cached distances and
/// per-timestep likelihood caches. Confined to one chain; never shared.
class SamplerState {
 public:
  /// Prescribed start: empty graph, N_1 = M_1, N_t = M_t minus M_{t-1}.
  SamplerState(ObservationSequence observed, SPParams alpha, Priors priors);

  /// Warm start from an arbitrary (G, N~) pair; the state may be impossible
  /// (zero likelihood), which run_chain refuses but forced walks may visit.
  SamplerState(ObservationSequence observed, DirectedGraph g,
               std::vector<BinaryMatrix> initiators, SPParams alpha, Priors priors);

  const ObservationSequence& observed() const { return observed_; }
  const DirectedGraph& graph() const { return graph_; }
  const DistanceMatrix& distances() const { return dist_; }
  const std::vector<BinaryMatrix>& initiators() const { return initiators_; }
  const LikelihoodCache& cache(std::size_t t) const { return caches_[t]; }
  std::size_t timesteps() const { return initiators_.size(); }
  std::size_t entity_count() const { return observed_[0].rows(); }
  std::size_t signal_count() const { return observed_[0].cols(); }
  const AlphaPowerTable& alpha_table() const { return table_; }
  const Priors& priors() const { return priors_; }

  std::size_t initiator_ones() const { return initiator_ones_; }
  bool impossible() const;
  double log_likelihood() const;  // -infinity when impossible
  double log_prior() const;
  double log_posterior() const;  // unnormalized

  /// Unconditional state mutations keeping distances and caches consistent;
  /// these are the commit paths of mh_step and the drivers for forced-walk
  /// checks. Both are exactly invertible by repeating the same flip.
  void force_graph_flip(std::size_t i, std::size_t j);
  void force_initiator_flip(std::size_t t, std::size_t k, std::size_t l);

  /// FNV fingerprint of the complete state (bits, distances, cache cells).
  std::uint64_t state_digest() const;

  /// Rebuild-and-compare audit of every per-timestep cache.
  void audit_caches() const;

 private:
  friend StepOutcome mh_step(SamplerState& state, Rng& rng);

  void init_caches();
  fixedpoint::Acc total_q() const;
  std::size_t total_impossible() const;

  ObservationSequence observed_;
  SPParams params_;
  AlphaPowerTable table_;
  Priors priors_;

  DirectedGraph graph_;
  DistanceMatrix dist_;
  std::vector<BinaryMatrix> initiators_;
  std::vector<BinaryMatrix> sources_;  // sources_[t] = M_{t-1} OR N_t (N_1 at t=0)
  std::vector<LikelihoodCache> caches_;
  std::size_t initiator_ones_ = 0;

  // scratch buffers for graph-proposal evaluation; swapped in on acceptance
  DistanceMatrix scratch_dist_;
  std::vector<LikelihoodCache> scratch_caches_;
};

/// Snapshot averages and run statistics of one chain.
struct ChainResult {
  bool temporal = false;
  std::size_t timesteps = 1;
  std::vector<RealMatrix> graph_avgs;                    // one per block, diagonal 1
  std::vector<std::vector<RealMatrix>> initiator_avgs;   // block x timestep
  std::vector<double> logpost_at_block_end;              // one per block
  std::vector<double> block_mean_logpost;                // one per block
  double acceptance_rate = 0.0;
  ChainConfig config;

  std::size_t block_count() const { return graph_avgs.size(); }
  const RealMatrix& graph_avg() const { return graph_avgs.back(); }
  const RealMatrix& initiator_avg(std::size_t t = 0) const { return initiator_avgs.back()[t]; }
};

ChainResult run_chain(const BinaryMatrix& m, const ChainConfig& cfg);
ChainResult run_chain(const ObservationSequence& seq, const ChainConfig& cfg);

/// Observer invoked after every step of a naive run (all steps, including
/// burn-in); used to collect joint state statistics.
using NaiveObserver =
    std::function<void(const DirectedGraph&, const std::vector<BinaryMatrix>&)>;

/// The always-accept sampler; its stationary distribution is uniform over
/// graph-initiator pairs. Likelihoods are never evaluated, so the result's
/// log-posterior fields are NaN.
ChainResult run_naive(const BinaryMatrix& m, const ChainConfig& cfg,
                      const NaiveObserver& observer = {});

/// log prior of an explicit state: -c1 |E| - c2 sum_t |N_t|.
double log_prior(const DirectedGraph& g, const std::vector<BinaryMatrix>& initiators,
                 const Priors& p);

class PropagationModel;        // propagation.hpp
struct GenericLikelihoodParams;

/// Metropolis-Hastings over the generic propagation likelihood
/// -c |M - E[P(G,N)]| with the same priors, local moves and snapshot
/// machinery as the shortest-path chain (single-matrix mode; cfg.alpha is
/// ignored, the model carries its own parameters).
///
/// Non-deterministic models run pseudo-marginally: every proposal's
/// likelihood is re-estimated from params.mc_samples fresh draws while the
/// current state keeps the estimate it was accepted with, so acceptance
/// carries Monte Carlo noise that shrinks with mc_samples and vanishes for
/// deterministic models.
ChainResult run_chain_generic(const BinaryMatrix& m, const PropagationModel& model,
                              const GenericLikelihoodParams& params, const ChainConfig& cfg);

/// Mean over timesteps of the final block's per-timestep initiator averages.
/// Only defined for temporal results.
RealMatrix overall_initiator_average(const ChainResult& result);

}  // namespace spinfer

#endif  // SPINFER_SAMPLER_HPP
