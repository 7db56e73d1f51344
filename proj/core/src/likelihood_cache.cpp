#include "spinfer/likelihood_cache.hpp"

#include <limits>

namespace spinfer {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

void LikelihoodCache::derive_cell(Cell& c, bool observed_one) {
  // Remove the cell's previous contribution.
  if (c.impossible) {
    --impossible_cells_;
  } else {
    total_q_ -= c.contrib_q;
  }
  // Re-derive from the exact (zero_factors, log_sum_q) state.
  if (!observed_one) {
    if (c.zero_factors > 0) {
      c.impossible = 1;
      c.contrib_q = 0;
    } else {
      c.impossible = 0;
      c.contrib_q = c.log_sum_q;  // log Pr(=0), already in fixed point
    }
  } else {
    if (c.zero_factors > 0) {
      c.impossible = 0;
      c.contrib_q = 0;  // Pr(=1) = 1
    } else if (c.log_sum_q == 0) {
      c.impossible = 1;  // Pr(=0) = 1, observed 1 cannot occur
      c.contrib_q = 0;
    } else {
      c.impossible = 0;
      c.contrib_q = fixedpoint::quantize(log1mexp(fixedpoint::to_double(c.log_sum_q)));
    }
  }
  if (c.impossible) {
    ++impossible_cells_;
  } else {
    total_q_ += c.contrib_q;
  }
}

void LikelihoodCache::build(const BinaryMatrix& observed, const BinaryMatrix& sources,
                            const DistanceMatrix& dist, const AlphaPowerTable& table) {
  if (!observed.same_shape(sources)) throw DimensionError("cache build: shape mismatch");
  if (dist.size() != observed.rows()) throw DimensionError("cache build: distance size mismatch");
  const std::size_t n = observed.rows();
  const std::size_t m = observed.cols();
  rows_ = n;
  cols_ = m;
  observed_ = observed.data();
  cells_.assign(n * m, Cell{});
  total_q_ = 0;
  impossible_cells_ = 0;

  // Accumulate exact per-cell state; source row j touches column u of every
  // receiver i at distance dist(j,i).
  for (std::size_t j = 0; j < n; ++j) {
    const std::int32_t* drow = dist.row(j);
    for (std::size_t u = 0; u < m; ++u) {
      if (!sources(j, u)) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const std::int32_t d = drow[i];
        switch (table.kind(d)) {
          case AlphaPowerTable::FactorKind::kNone:
            break;
          case AlphaPowerTable::FactorKind::kZero:
            ++cells_[i * m + u].zero_factors;
            break;
          case AlphaPowerTable::FactorKind::kFinite:
            cells_[i * m + u].log_sum_q += table.qterm(d);
            break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < m; ++u) derive_cell(cells_[i * m + u], observed_[i * m + u] != 0);
}

void LikelihoodCache::apply_source_flip(std::size_t k, std::size_t l, bool new_bit,
                                        const DistanceMatrix& dist,
                                        const AlphaPowerTable& table) {
  if (k >= rows_ || l >= cols_) throw IndexError("apply_source_flip: cell out of range");
  const std::int32_t* drow = dist.row(k);
  const int sign = new_bit ? 1 : -1;
  for (std::size_t i = 0; i < rows_; ++i) {
    const std::int32_t d = drow[i];
    Cell& c = cells_[i * cols_ + l];
    switch (table.kind(d)) {
      case AlphaPowerTable::FactorKind::kNone:
        continue;  // factor 1 contributes nothing; cell state unchanged
      case AlphaPowerTable::FactorKind::kZero:
        c.zero_factors += sign;
        break;
      case AlphaPowerTable::FactorKind::kFinite:
        c.log_sum_q += sign > 0 ? table.qterm(d) : -table.qterm(d);
        break;
    }
    derive_cell(c, observed_[i * cols_ + l] != 0);
  }
}

double LikelihoodCache::total_log_likelihood() const {
  return impossible_cells_ > 0 ? kNegInf : fixedpoint::to_double(total_q_);
}

double LikelihoodCache::cell_log_prob(std::size_t i, std::size_t u) const {
  const Cell& c = cells_[i * cols_ + u];
  if (c.impossible) return kNegInf;
  return fixedpoint::to_double(c.contrib_q);
}

void LikelihoodCache::audit(const BinaryMatrix& observed, const BinaryMatrix& sources,
                            const DistanceMatrix& dist, const AlphaPowerTable& table) const {
  LikelihoodCache fresh;
  fresh.build(observed, sources, dist, table);
  if (!(*this == fresh)) throw CacheCorruptionError("incremental cache diverged from rebuild");
}

bool LikelihoodCache::operator==(const LikelihoodCache& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && observed_ == other.observed_ &&
         cells_ == other.cells_ && total_q_ == other.total_q_ &&
         impossible_cells_ == other.impossible_cells_;
}

}  // namespace spinfer
