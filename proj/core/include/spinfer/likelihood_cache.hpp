#ifndef SPINFER_LIKELIHOOD_CACHE_HPP
#define SPINFER_LIKELIHOOD_CACHE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spinfer/digraph.hpp"
#include "spinfer/fixed_point.hpp"
#include "spinfer/matrix.hpp"
#include "spinfer/sp_model.hpp"

namespace spinfer {

/// Per-cell decomposition of log Pr(M(i,u) | G, sources) that supports O(n)
/// incremental updates when one source bit flips.
///
/// Each cell keeps the count of zero factors (source at influence exactly 1,
/// which pins Pr(=0) to 0) and the fixed-point sum of log(1 - alpha^d) over
/// finite factors. Both are exact integer state, so any flip sequence is
/// exactly invertible and an incrementally maintained cache stays
/// bit-identical to one rebuilt from scratch. Impossible cells (observed bit
/// has probability 0) are tracked by count rather than by -infinity values.
///
/// A cache is confined to one chain; it is never shared across threads.
class LikelihoodCache {
 public:
  using Acc = fixedpoint::Acc;

  LikelihoodCache() = default;

  /// Rebuild from scratch for observation matrix `observed` and source
  /// matrix `sources` (initiators, or their OR with the previous
  /// observation in the temporal chain). `table` must cover hop counts up
  /// to dist.size() - 1.
  void build(const BinaryMatrix& observed, const BinaryMatrix& sources,
             const DistanceMatrix& dist, const AlphaPowerTable& table);

  /// Account for source bit (k,l) flipping to `new_bit`. Touches only the
  /// cells of column l. The caller must pass the same distances/table the
  /// cache was built with and must call this only when the bit really
  /// changes; a flip followed by the inverse flip restores the cache
  /// bit-for-bit.
  void apply_source_flip(std::size_t k, std::size_t l, bool new_bit,
                         const DistanceMatrix& dist, const AlphaPowerTable& table);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /// Number of cells whose observed bit has probability 0 under the current
  /// state; the total likelihood is -infinity iff this is nonzero.
  std::size_t impossible_count() const { return impossible_cells_; }

  /// Exact fixed-point sum of per-cell log-probabilities over possible
  /// cells; meaningful as a likelihood only when impossible_count() == 0.
  Acc total_q() const { return total_q_; }

  double total_log_likelihood() const;

  std::int32_t zero_factor_count(std::size_t i, std::size_t u) const {
    return cells_[i * cols_ + u].zero_factors;
  }
  /// Sum of log(1 - alpha^d) over contributing finite factors.
  double finite_log_sum(std::size_t i, std::size_t u) const {
    return fixedpoint::to_double(cells_[i * cols_ + u].log_sum_q);
  }
  /// log Pr of the observed bit; -infinity for impossible cells.
  double cell_log_prob(std::size_t i, std::size_t u) const;

  /// Rebuild into a scratch cache and compare exact state; throws
  /// CacheCorruptionError on any mismatch. Debug aid, O(n m + n |sources|).
  void audit(const BinaryMatrix& observed, const BinaryMatrix& sources,
             const DistanceMatrix& dist, const AlphaPowerTable& table) const;

  bool operator==(const LikelihoodCache& other) const;

 private:
  struct Cell {
    Acc log_sum_q = 0;       // quantized sum of log(1 - alpha^d) terms
    Acc contrib_q = 0;       // this cell's current term in total_q_
    std::int32_t zero_factors = 0;
    std::uint8_t impossible = 0;

    bool operator==(const Cell& other) const = default;
  };

  void derive_cell(Cell& c, bool observed_one);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> observed_;
  std::vector<Cell> cells_;
  Acc total_q_ = 0;
  std::size_t impossible_cells_ = 0;
};

}  // namespace spinfer

#endif  // SPINFER_LIKELIHOOD_CACHE_HPP
