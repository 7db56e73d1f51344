#ifndef SPINFER_DATAGEN_HPP
#define SPINFER_DATAGEN_HPP

#include <cstddef>
#include <cstdint>

#include "spinfer/digraph.hpp"
#include "spinfer/matrix.hpp"
#include "spinfer/sp_model.hpp"

namespace spinfer {

/// Synthetic instance with known ground truth for recovery benchmarks.
struct PlantedInstance {
  DirectedGraph true_graph;
  BinaryMatrix true_initiators;
  BinaryMatrix observed;  // one SP-model realization from (graph, initiators)
  SPParams params;
  std::uint64_t seed = 0;
};

/// Uniform random off-diagonal edges (distinct, by rejection), a fixed
/// number of distinct initiator rows per signal, and one forward draw of the
/// observation matrix. Bit-reproducible per seed.
PlantedInstance synth_planted(std::size_t n, std::size_t m, std::size_t edge_count,
                              std::size_t initiators_per_signal, const SPParams& p,
                              std::uint64_t seed);

/// Backward thinning generator for temporal experiments: M_T = m, and each
/// earlier matrix turns every 1-entry of its successor to 0 independently
/// with probability 1/T. The result always satisfies monotone growth.
ObservationSequence degrade_temporal(const BinaryMatrix& m, std::size_t t_steps,
                                     std::uint64_t seed);

}  // namespace spinfer

#endif  // SPINFER_DATAGEN_HPP
