#include "spinfer/sampler.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "spinfer/digest.hpp"
#include "spinfer/propagation.hpp"

namespace spinfer {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();
}

void validate_priors(const Priors& p) {
  if (!(p.c1 >= 0.0) || !(p.c2 >= 0.0)) throw ConfigError("prior penalties must be >= 0");
}

void validate_config(const ChainConfig& cfg) {
  validate_params(cfg.alpha);
  validate_priors(cfg.priors);
  if (cfg.total_steps == 0) throw ConfigError("total_steps must be positive");
  if (cfg.snapshot_every == 0) throw ConfigError("snapshot_every must be positive");
  if (cfg.burnin_steps >= cfg.total_steps)
    throw ConfigError("burnin_steps must be smaller than total_steps");
  if ((cfg.total_steps - cfg.burnin_steps) % cfg.snapshot_every != 0)
    throw ConfigError("sampling steps must divide evenly into snapshot blocks");
}

MoveProposal propose_local_move(std::size_t n, std::size_t m, std::size_t timesteps, Rng& rng) {
  MoveProposal mv;
  const bool graph_possible = n >= 2;
  mv.kind = graph_possible && rng.next_bool() ? MoveKind::kGraphFlip : MoveKind::kInitiatorFlip;
  if (mv.kind == MoveKind::kGraphFlip) {
    const std::uint64_t cell = rng.next_below(static_cast<std::uint64_t>(n) * (n - 1));
    mv.a = static_cast<std::size_t>(cell / (n - 1));
    const std::size_t r = static_cast<std::size_t>(cell % (n - 1));
    mv.b = r + (r >= mv.a ? 1 : 0);  // skip the diagonal
  } else {
    mv.t = timesteps > 1 ? static_cast<std::size_t>(rng.next_below(timesteps)) : 0;
    const std::uint64_t cell = rng.next_below(static_cast<std::uint64_t>(n) * m);
    mv.a = static_cast<std::size_t>(cell / m);
    mv.b = static_cast<std::size_t>(cell % m);
  }
  return mv;
}

double log_prior(const DirectedGraph& g, const std::vector<BinaryMatrix>& initiators,
                 const Priors& p) {
  validate_priors(p);
  std::size_t ones = 0;
  for (const BinaryMatrix& n_t : initiators) ones += count_ones(n_t);
  return -p.c1 * static_cast<double>(g.edge_count()) - p.c2 * static_cast<double>(ones);
}

// --- SamplerState ----------------------------------------------------------

SamplerState::SamplerState(ObservationSequence observed, SPParams alpha, Priors priors)
    : observed_(std::move(observed)),
      params_(alpha),
      table_(alpha, observed_.matrices.empty() ? 0 : observed_[0].rows()),
      priors_(priors) {
  validate_priors(priors_);
  if (auto v = validate_sequence(observed_)) throw MonotonicityError(v->t, v->i, v->u);
  const std::size_t T = observed_.size();
  graph_ = DirectedGraph(observed_[0].rows());
  initiators_.reserve(T);
  initiators_.push_back(observed_[0]);
  for (std::size_t t = 1; t < T; ++t)
    initiators_.push_back(matrix_minus(observed_[t], observed_[t - 1]));
  init_caches();
}

SamplerState::SamplerState(ObservationSequence observed, DirectedGraph g,
                           std::vector<BinaryMatrix> initiators, SPParams alpha, Priors priors)
    : observed_(std::move(observed)),
      params_(alpha),
      table_(alpha, observed_.matrices.empty() ? 0 : observed_[0].rows()),
      priors_(priors),
      graph_(std::move(g)),
      initiators_(std::move(initiators)) {
  validate_priors(priors_);
  if (auto v = validate_sequence(observed_)) throw MonotonicityError(v->t, v->i, v->u);
  if (graph_.size() != observed_[0].rows())
    throw DimensionError("warm start: graph size != entity count");
  if (initiators_.size() != observed_.size())
    throw DimensionError("warm start: one initiator matrix per timestep required");
  for (const BinaryMatrix& n_t : initiators_)
    if (!n_t.same_shape(observed_[0])) throw DimensionError("warm start: initiator shape");
  init_caches();
}

void SamplerState::init_caches() {
  if (observed_[0].rows() == 0 || observed_[0].cols() == 0)
    throw DimensionError("observation matrix must be non-empty");
  const std::size_t T = observed_.size();
  dist_ = all_pairs_distances(graph_);
  sources_.clear();
  sources_.reserve(T);
  caches_.resize(T);
  initiator_ones_ = 0;
  for (std::size_t t = 0; t < T; ++t) {
    initiator_ones_ += count_ones(initiators_[t]);
    sources_.push_back(t == 0 ? initiators_[0] : matrix_or(observed_[t - 1], initiators_[t]));
    caches_[t].build(observed_[t], sources_[t], dist_, table_);
  }
}

fixedpoint::Acc SamplerState::total_q() const {
  fixedpoint::Acc q = 0;
  for (const LikelihoodCache& c : caches_) q += c.total_q();
  return q;
}

std::size_t SamplerState::total_impossible() const {
  std::size_t k = 0;
  for (const LikelihoodCache& c : caches_) k += c.impossible_count();
  return k;
}

bool SamplerState::impossible() const { return total_impossible() > 0; }

double SamplerState::log_likelihood() const {
  return impossible() ? kNegInf : fixedpoint::to_double(total_q());
}

double SamplerState::log_prior() const {
  return -priors_.c1 * static_cast<double>(graph_.edge_count()) -
         priors_.c2 * static_cast<double>(initiator_ones_);
}

double SamplerState::log_posterior() const {
  return impossible() ? kNegInf : log_likelihood() + log_prior();
}

void SamplerState::force_graph_flip(std::size_t i, std::size_t j) {
  graph_.flip_edge_in_place(i, j);
  all_pairs_distances_into(graph_, scratch_dist_);
  std::swap(dist_, scratch_dist_);
  scratch_caches_.resize(caches_.size());
  for (std::size_t t = 0; t < caches_.size(); ++t) {
    scratch_caches_[t].build(observed_[t], sources_[t], dist_, table_);
    std::swap(caches_[t], scratch_caches_[t]);
  }
}

void SamplerState::force_initiator_flip(std::size_t t, std::size_t k, std::size_t l) {
  if (t >= initiators_.size()) throw IndexError("initiator timestep out of range");
  if (k >= entity_count() || l >= signal_count())
    throw IndexError("initiator cell out of range");
  const bool new_bit = !initiators_[t](k, l);
  const bool source_changes = t == 0 || observed_[t - 1](k, l) == 0;
  if (source_changes) {
    caches_[t].apply_source_flip(k, l, new_bit, dist_, table_);
    sources_[t].set(k, l, new_bit);
  }
  initiators_[t].set(k, l, new_bit);
  initiator_ones_ += new_bit ? 1 : static_cast<std::size_t>(-1);
}

std::uint64_t SamplerState::state_digest() const {
  Fnv1a64 h;
  h.update(graph_.adjacency().data(), graph_.adjacency().size());
  h.update_value(graph_.edge_count());
  h.update(dist_.data().data(), dist_.data().size() * sizeof(std::int32_t));
  for (const BinaryMatrix& n_t : initiators_) h.update(n_t.data().data(), n_t.data().size());
  h.update_value(initiator_ones_);
  for (const LikelihoodCache& c : caches_) {
    h.update_value(c.total_q());
    h.update_value(c.impossible_count());
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t u = 0; u < c.cols(); ++u) {
        h.update_value(c.zero_factor_count(i, u));
        h.update_value(c.finite_log_sum(i, u));
      }
    }
  }
  return h.value();
}

void SamplerState::audit_caches() const {
  for (std::size_t t = 0; t < caches_.size(); ++t)
    caches_[t].audit(observed_[t], sources_[t], dist_, table_);
}

namespace {

// Likelihood-ratio exponent on extended reals; the impossibility counts
// stand in for -infinity so no arithmetic on infinities is performed.
double extended_delta(std::size_t imp_before, fixedpoint::Acc q_before, std::size_t imp_after,
                      fixedpoint::Acc q_after) {
  if (imp_before == 0 && imp_after == 0) return fixedpoint::to_double(q_after - q_before);
  if (imp_before > 0 && imp_after > 0) return 0.0;  // both impossible: priors decide
  return imp_after > 0 ? kNegInf : kPosInf;
}

}  // namespace

StepOutcome mh_step(SamplerState& st, Rng& rng) {
  StepOutcome out;
  out.proposal = propose_local_move(st.entity_count(), st.signal_count(), st.timesteps(), rng);
  const double accept_u = rng.next_unit();

  if (out.proposal.kind == MoveKind::kGraphFlip) {
    const std::size_t i = out.proposal.a;
    const std::size_t j = out.proposal.b;
    const bool adding = !st.graph_.has_edge(i, j);
    DirectedGraph candidate = st.graph_.flipped(i, j);
    all_pairs_distances_into(candidate, st.scratch_dist_);
    st.scratch_caches_.resize(st.caches_.size());
    fixedpoint::Acc new_q = 0;
    std::size_t new_imp = 0;
    for (std::size_t t = 0; t < st.caches_.size(); ++t) {
      st.scratch_caches_[t].build(st.observed_[t], st.sources_[t], st.scratch_dist_, st.table_);
      new_q += st.scratch_caches_[t].total_q();
      new_imp += st.scratch_caches_[t].impossible_count();
    }
    const double delta_ll =
        extended_delta(st.total_impossible(), st.total_q(), new_imp, new_q);
    out.delta_log_posterior = delta_ll + (adding ? -st.priors_.c1 : st.priors_.c1);
    out.accepted =
        out.delta_log_posterior >= 0.0 || accept_u < std::exp(out.delta_log_posterior);
    if (out.accepted) {
      st.graph_ = std::move(candidate);
      std::swap(st.dist_, st.scratch_dist_);
      std::swap(st.caches_, st.scratch_caches_);
    }
    return out;
  }

  const std::size_t t = out.proposal.t;
  const std::size_t k = out.proposal.a;
  const std::size_t l = out.proposal.b;
  const bool new_bit = !st.initiators_[t](k, l);
  // When the entity already carried the signal at t-1, the OR-source bit is
  // pinned to 1 and the likelihood is insensitive to this initiator flip.
  const bool source_changes = t == 0 || st.observed_[t - 1](k, l) == 0;
  const std::size_t imp_before = st.total_impossible();
  const fixedpoint::Acc q_before = st.total_q();
  if (source_changes) st.caches_[t].apply_source_flip(k, l, new_bit, st.dist_, st.table_);
  const double delta_ll =
      extended_delta(imp_before, q_before, st.total_impossible(), st.total_q());
  out.delta_log_posterior = delta_ll + (new_bit ? -st.priors_.c2 : st.priors_.c2);
  out.accepted =
      out.delta_log_posterior >= 0.0 || accept_u < std::exp(out.delta_log_posterior);
  if (out.accepted) {
    st.initiators_[t].set(k, l, new_bit);
    st.initiator_ones_ += new_bit ? 1 : static_cast<std::size_t>(-1);
    if (source_changes) st.sources_[t].set(k, l, new_bit);
  } else if (source_changes) {
    // Exact inverse of the fixed-point update: the cache is bit-identical
    // to its pre-proposal state.
    st.caches_[t].apply_source_flip(k, l, !new_bit, st.dist_, st.table_);
  }
  return out;
}

// --- snapshot accumulation -------------------------------------------------

namespace {

// Integer block accumulation: per block we keep the state at block entry
// plus the list of accepted flips, and integrate the piecewise-constant
// trajectory exactly. Sample tau of a block is the state after its step, so
// a flip at tau contributes to samples tau..L-1.
class SnapshotAccumulator {
 public:
  SnapshotAccumulator(std::size_t n, std::size_t m, std::size_t timesteps,
                      const ChainConfig& cfg, const BinaryMatrix& shape_source)
      : n_(n), m_(m), timesteps_(timesteps), block_len_(cfg.snapshot_every),
        cumulative_(cfg.snapshot_mode == SnapshotMode::kCumulative),
        row_labels_(shape_source.row_labels), col_labels_(shape_source.col_labels),
        graph_cum_(n * n, 0), init_cum_(timesteps, std::vector<std::int64_t>(n * m, 0)) {}

  void begin_block(const DirectedGraph& g, const std::vector<BinaryMatrix>& inits) {
    graph_base_ = g.adjacency();
    init_base_.clear();
    for (const BinaryMatrix& n_t : inits) init_base_.push_back(n_t.data());
    events_.clear();
  }

  void record_flip(const MoveProposal& mv, bool new_bit, std::size_t tau) {
    Event e;
    e.is_graph = mv.kind == MoveKind::kGraphFlip ? 1 : 0;
    e.t = static_cast<std::uint32_t>(mv.t);
    e.cell = static_cast<std::uint32_t>(e.is_graph ? mv.a * n_ + mv.b : mv.a * m_ + mv.b);
    e.tau = static_cast<std::int64_t>(tau);
    e.delta = new_bit ? 1 : -1;
    events_.push_back(e);
  }

  void end_block(ChainResult& out) {
    const std::int64_t len = static_cast<std::int64_t>(block_len_);
    std::vector<std::int64_t> graph_sum(n_ * n_);
    for (std::size_t c = 0; c < graph_sum.size(); ++c) graph_sum[c] = graph_base_[c] * len;
    std::vector<std::vector<std::int64_t>> init_sum(timesteps_);
    for (std::size_t t = 0; t < timesteps_; ++t) {
      init_sum[t].resize(n_ * m_);
      for (std::size_t c = 0; c < init_sum[t].size(); ++c)
        init_sum[t][c] = init_base_[t][c] * len;
    }
    for (const Event& e : events_) {
      const std::int64_t weight = len - e.tau;
      if (e.is_graph)
        graph_sum[e.cell] += e.delta * weight;
      else
        init_sum[e.t][e.cell] += e.delta * weight;
    }

    ++blocks_done_;
    std::int64_t denom = len;
    if (cumulative_) {
      for (std::size_t c = 0; c < graph_sum.size(); ++c) graph_cum_[c] += graph_sum[c];
      for (std::size_t t = 0; t < timesteps_; ++t)
        for (std::size_t c = 0; c < init_sum[t].size(); ++c) init_cum_[t][c] += init_sum[t][c];
      denom = len * static_cast<std::int64_t>(blocks_done_);
    }

    RealMatrix g_avg(n_, n_);
    g_avg.row_labels = row_labels_;
    g_avg.col_labels = row_labels_;
    const std::vector<std::int64_t>& gsrc = cumulative_ ? graph_cum_ : graph_sum;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        g_avg.at(i, j) = i == j ? 1.0
                                : static_cast<double>(gsrc[i * n_ + j]) /
                                      static_cast<double>(denom);
    out.graph_avgs.push_back(std::move(g_avg));

    std::vector<RealMatrix> block_inits;
    block_inits.reserve(timesteps_);
    for (std::size_t t = 0; t < timesteps_; ++t) {
      RealMatrix n_avg(n_, m_);
      n_avg.row_labels = row_labels_;
      n_avg.col_labels = col_labels_;
      const std::vector<std::int64_t>& nsrc = cumulative_ ? init_cum_[t] : init_sum[t];
      for (std::size_t c = 0; c < n_ * m_; ++c)
        n_avg.at(c / m_, c % m_) = static_cast<double>(nsrc[c]) / static_cast<double>(denom);
      block_inits.push_back(std::move(n_avg));
    }
    out.initiator_avgs.push_back(std::move(block_inits));
  }

 private:
  struct Event {
    std::uint32_t cell;
    std::uint32_t t;
    std::int64_t tau;
    std::int8_t delta;
    std::uint8_t is_graph;
  };

  std::size_t n_, m_, timesteps_, block_len_;
  bool cumulative_;
  std::vector<std::string> row_labels_, col_labels_;
  std::vector<std::uint8_t> graph_base_;
  std::vector<std::vector<std::uint8_t>> init_base_;
  std::vector<Event> events_;
  std::vector<std::int64_t> graph_cum_;
  std::vector<std::vector<std::int64_t>> init_cum_;
  std::size_t blocks_done_ = 0;
};

ChainResult run_chain_impl(ObservationSequence seq, const ChainConfig& cfg, bool temporal) {
  validate_config(cfg);
  if (auto v = validate_sequence(seq)) throw MonotonicityError(v->t, v->i, v->u);

  ChainResult result;
  result.temporal = temporal;
  result.timesteps = seq.size();
  result.config = cfg;

  SamplerState state(std::move(seq), cfg.alpha, cfg.priors);
  if (state.impossible())
    throw StartStateError("starting state has zero posterior probability");

  const std::size_t n = state.entity_count();
  const std::size_t m = state.signal_count();
  SnapshotAccumulator accum(n, m, state.timesteps(), cfg, state.observed()[0]);

  Rng rng(cfg.seed);
  std::size_t accepted = 0;
  double block_logpost_sum = 0.0;
  const std::size_t block_len = cfg.snapshot_every;

  for (std::size_t s = 0; s < cfg.total_steps; ++s) {
    const bool sampling = s >= cfg.burnin_steps;
    const std::size_t tau = sampling ? (s - cfg.burnin_steps) % block_len : 0;
    if (sampling && tau == 0) {
      accum.begin_block(state.graph(), state.initiators());
      block_logpost_sum = 0.0;
    }
    const StepOutcome outcome = mh_step(state, rng);
    if (outcome.accepted) {
      ++accepted;
      if (sampling) {
        const bool new_bit = outcome.proposal.kind == MoveKind::kGraphFlip
                                 ? state.graph().has_edge(outcome.proposal.a, outcome.proposal.b)
                                 : state.initiators()[outcome.proposal.t](outcome.proposal.a,
                                                                          outcome.proposal.b) != 0;
        accum.record_flip(outcome.proposal, new_bit, tau);
      }
    }
    if (sampling) {
      block_logpost_sum += state.log_posterior();
      if (tau + 1 == block_len) {
        accum.end_block(result);
        result.logpost_at_block_end.push_back(state.log_posterior());
        result.block_mean_logpost.push_back(block_logpost_sum /
                                            static_cast<double>(block_len));
      }
    }
  }
  result.acceptance_rate =
      static_cast<double>(accepted) / static_cast<double>(cfg.total_steps);
  return result;
}

}  // namespace

ChainResult run_chain(const ObservationSequence& seq, const ChainConfig& cfg) {
  return run_chain_impl(seq, cfg, true);
}

ChainResult run_chain(const BinaryMatrix& m, const ChainConfig& cfg) {
  ObservationSequence seq;
  seq.matrices.push_back(m);
  return run_chain_impl(std::move(seq), cfg, false);
}

ChainResult run_naive(const BinaryMatrix& m, const ChainConfig& cfg,
                      const NaiveObserver& observer) {
  validate_config(cfg);
  ObservationSequence seq;
  seq.matrices.push_back(m);
  if (auto v = validate_sequence(seq)) throw MonotonicityError(v->t, v->i, v->u);

  ChainResult result;
  result.temporal = false;
  result.timesteps = 1;
  result.config = cfg;

  // Uniform random walk: no likelihood machinery, every proposal applied.
  DirectedGraph graph(m.rows());
  std::vector<BinaryMatrix> inits{m};
  SnapshotAccumulator accum(m.rows(), m.cols(), 1, cfg, m);

  Rng rng(cfg.seed);
  const std::size_t block_len = cfg.snapshot_every;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  for (std::size_t s = 0; s < cfg.total_steps; ++s) {
    const bool sampling = s >= cfg.burnin_steps;
    const std::size_t tau = sampling ? (s - cfg.burnin_steps) % block_len : 0;
    if (sampling && tau == 0) accum.begin_block(graph, inits);
    const MoveProposal mv = propose_local_move(m.rows(), m.cols(), 1, rng);
    bool new_bit;
    if (mv.kind == MoveKind::kGraphFlip) {
      graph.flip_edge_in_place(mv.a, mv.b);
      new_bit = graph.has_edge(mv.a, mv.b);
    } else {
      new_bit = !inits[0](mv.a, mv.b);
      inits[0].set(mv.a, mv.b, new_bit);
    }
    if (sampling) {
      accum.record_flip(mv, new_bit, tau);
      if (tau + 1 == block_len) {
        accum.end_block(result);
        result.logpost_at_block_end.push_back(nan);
        result.block_mean_logpost.push_back(nan);
      }
    }
    if (observer) observer(graph, inits);
  }
  result.acceptance_rate = 1.0;
  return result;
}

ChainResult run_chain_generic(const BinaryMatrix& m, const PropagationModel& model,
                              const GenericLikelihoodParams& params, const ChainConfig& cfg) {
  validate_config(cfg);
  validate_params(params);
  if (m.rows() == 0 || m.cols() == 0)
    throw DimensionError("observation matrix must be non-empty");

  ChainResult result;
  result.temporal = false;
  result.timesteps = 1;
  result.config = cfg;

  DirectedGraph graph(m.rows());
  std::vector<BinaryMatrix> inits{m};
  std::size_t init_ones = count_ones(m);
  SnapshotAccumulator accum(m.rows(), m.cols(), 1, cfg, m);

  Rng rng(cfg.seed);
  const auto prior = [&](std::size_t edges, std::size_t ones) {
    return -cfg.priors.c1 * static_cast<double>(edges) -
           cfg.priors.c2 * static_cast<double>(ones);
  };
  // Pseudo-marginal bookkeeping: the held state keeps the likelihood
  // estimate it was accepted with.
  double current_ll = generic_log_likelihood(m, graph, inits[0], model, params, rng);
  double current_lp = current_ll + prior(graph.edge_count(), init_ones);

  std::size_t accepted = 0;
  double block_logpost_sum = 0.0;
  const std::size_t block_len = cfg.snapshot_every;

  for (std::size_t s = 0; s < cfg.total_steps; ++s) {
    const bool sampling = s >= cfg.burnin_steps;
    const std::size_t tau = sampling ? (s - cfg.burnin_steps) % block_len : 0;
    if (sampling && tau == 0) {
      accum.begin_block(graph, inits);
      block_logpost_sum = 0.0;
    }

    const MoveProposal mv = propose_local_move(m.rows(), m.cols(), 1, rng);
    const double accept_u = rng.next_unit();
    bool new_bit;
    std::size_t new_edges = graph.edge_count();
    std::size_t new_ones = init_ones;
    if (mv.kind == MoveKind::kGraphFlip) {
      graph.flip_edge_in_place(mv.a, mv.b);
      new_bit = graph.has_edge(mv.a, mv.b);
      new_edges = graph.edge_count();
    } else {
      new_bit = !inits[0](mv.a, mv.b);
      inits[0].set(mv.a, mv.b, new_bit);
      new_ones += new_bit ? 1 : static_cast<std::size_t>(-1);
    }
    const double proposal_ll = generic_log_likelihood(m, graph, inits[0], model, params, rng);
    const double proposal_lp = proposal_ll + prior(new_edges, new_ones);
    const double delta = proposal_lp - current_lp;
    if (delta >= 0.0 || accept_u < std::exp(delta)) {
      ++accepted;
      current_lp = proposal_lp;
      init_ones = new_ones;
      if (sampling) accum.record_flip(mv, new_bit, tau);
    } else {
      if (mv.kind == MoveKind::kGraphFlip)
        graph.flip_edge_in_place(mv.a, mv.b);
      else
        inits[0].set(mv.a, mv.b, !new_bit);
    }

    if (sampling) {
      block_logpost_sum += current_lp;
      if (tau + 1 == block_len) {
        accum.end_block(result);
        result.logpost_at_block_end.push_back(current_lp);
        result.block_mean_logpost.push_back(block_logpost_sum /
                                            static_cast<double>(block_len));
      }
    }
  }
  result.acceptance_rate =
      static_cast<double>(accepted) / static_cast<double>(cfg.total_steps);
  return result;
}

RealMatrix overall_initiator_average(const ChainResult& result) {
  if (!result.temporal)
    throw ModeError("overall initiator average is defined for temporal results only");
  const std::vector<RealMatrix>& finals = result.initiator_avgs.back();
  RealMatrix out(finals[0].rows(), finals[0].cols());
  out.row_labels = finals[0].row_labels;
  out.col_labels = finals[0].col_labels;
  for (const RealMatrix& n_t : finals)
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t u = 0; u < out.cols(); ++u) out.at(i, u) += n_t(i, u);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t u = 0; u < out.cols(); ++u)
      out.at(i, u) /= static_cast<double>(finals.size());
  return out;
}

}  // namespace spinfer
