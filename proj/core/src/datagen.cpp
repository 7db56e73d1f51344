#include "spinfer/datagen.hpp"

#include "spinfer/propagation.hpp"
#include "spinfer/rng.hpp"

namespace spinfer {

PlantedInstance synth_planted(std::size_t n, std::size_t m, std::size_t edge_count,
                              std::size_t initiators_per_signal, const SPParams& p,
                              std::uint64_t seed) {
  validate_params(p);
  if (n == 0 || m == 0) throw ConfigError("synth_planted: empty matrix requested");
  if (edge_count > n * (n - 1))
    throw ConfigError("synth_planted: edge_count exceeds n(n-1)");
  if (initiators_per_signal < 1 || initiators_per_signal > n)
    throw ConfigError("synth_planted: initiators_per_signal must be in [1, n]");

  PlantedInstance inst;
  inst.params = p;
  inst.seed = seed;
  Rng rng(seed);

  inst.true_graph = DirectedGraph(n);
  while (inst.true_graph.edge_count() < edge_count) {
    const std::uint64_t cell = rng.next_below(static_cast<std::uint64_t>(n) * (n - 1));
    const std::size_t i = static_cast<std::size_t>(cell / (n - 1));
    const std::size_t r = static_cast<std::size_t>(cell % (n - 1));
    const std::size_t j = r + (r >= i ? 1 : 0);
    if (!inst.true_graph.has_edge(i, j)) inst.true_graph.set_edge(i, j, true);
  }

  inst.true_initiators = BinaryMatrix(n, m);
  for (std::size_t u = 0; u < m; ++u) {
    std::size_t placed = 0;
    while (placed < initiators_per_signal) {
      const std::size_t row = static_cast<std::size_t>(rng.next_below(n));
      if (!inst.true_initiators(row, u)) {
        inst.true_initiators.set(row, u, true);
        ++placed;
      }
    }
  }

  inst.observed = sp_forward(inst.true_graph, inst.true_initiators, p, rng);
  return inst;
}

ObservationSequence degrade_temporal(const BinaryMatrix& m, std::size_t t_steps,
                                     std::uint64_t seed) {
  if (t_steps < 1) throw ConfigError("degrade_temporal: need at least one timestep");
  ObservationSequence seq;
  seq.matrices.resize(t_steps);
  seq.matrices[t_steps - 1] = m;
  Rng rng(seed);
  const double drop = 1.0 / static_cast<double>(t_steps);
  for (std::size_t t = t_steps - 1; t-- > 0;) {
    BinaryMatrix thinned = seq.matrices[t + 1];
    for (std::size_t i = 0; i < thinned.rows(); ++i)
      for (std::size_t u = 0; u < thinned.cols(); ++u)
        if (thinned(i, u) && rng.next_unit() < drop) thinned.set(i, u, false);
    seq.matrices[t] = std::move(thinned);
  }
  return seq;
}

}  // namespace spinfer
