#ifndef SPINFER_MATRIX_HPP
#define SPINFER_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinfer/errors.hpp"

namespace spinfer {

/// Dense 0/1 matrix with optional row (entity) and column (signal) labels.
/// Entries are stored row-major, one byte per cell.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  /// Build from an initializer-style nested vector; rows must be equal length.
  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint8_t operator()(std::size_t i, std::size_t u) const { return bits_[i * cols_ + u]; }
  void set(std::size_t i, std::size_t u, bool value) { bits_[i * cols_ + u] = value ? 1 : 0; }

  const std::vector<std::uint8_t>& data() const { return bits_; }

  bool same_shape(const BinaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  bool operator==(const BinaryMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_ &&
           row_labels == other.row_labels && col_labels == other.col_labels;
  }

  std::vector<std::string> row_labels;  // empty or size rows()
  std::vector<std::string> col_labels;  // empty or size cols()

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Dense real-valued matrix; same text layout as BinaryMatrix with decimal
/// entries (used for posterior means, similarities and correlations).
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t u) const { return values_[i * cols_ + u]; }
  double& at(std::size_t i, std::size_t u) { return values_[i * cols_ + u]; }

  const std::vector<double>& data() const { return values_; }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

/// Time-ordered observation matrices M_1..M_T, all of identical shape.
/// Ones must persist: M_t(i,u) <= M_{t+1}(i,u) for every cell.
struct ObservationSequence {
  std::vector<BinaryMatrix> matrices;

  std::size_t size() const { return matrices.size(); }
  const BinaryMatrix& operator[](std::size_t t) const { return matrices[t]; }
};

/// First cell breaking the monotone-growth invariant. `t` indexes the later
/// matrix of the offending pair, i.e. M_{t-1}(i,u)=1 while M_t(i,u)=0.
struct SequenceViolation {
  std::size_t t;
  std::size_t i;
  std::size_t u;
};

std::size_t count_ones(const BinaryMatrix& m);

/// Checks shapes/labels (DimensionError on mismatch) and monotone growth.
/// Returns the first violation, or nullopt when the sequence is valid.
std::optional<SequenceViolation> validate_sequence(const ObservationSequence& seq);

/// Cell-wise OR / set difference (a AND NOT b). Shapes must match.
BinaryMatrix matrix_or(const BinaryMatrix& a, const BinaryMatrix& b);
BinaryMatrix matrix_minus(const BinaryMatrix& a, const BinaryMatrix& b);

// --- dense-text I/O ------------------------------------------------------
//
// One entity per line, comma-separated tokens, newline '\n', no trailing
// separator. Up to two optional '#'-prefixed header lines precede the data:
// the first carries comma-separated column labels, the second row labels.

BinaryMatrix load_matrix(const std::string& path);
BinaryMatrix parse_matrix(const std::string& text);
void save_matrix(const BinaryMatrix& m, const std::string& path);
std::string format_matrix(const BinaryMatrix& m);

RealMatrix load_real_matrix(const std::string& path);
RealMatrix parse_real_matrix(const std::string& text);
void save_real_matrix(const RealMatrix& m, const std::string& path);
std::string format_real_matrix(const RealMatrix& m);

/// Plain (ASCII, "P2") 8-bit graymap of a [0,1]-valued matrix; pixel value
/// is round(255 * entry). Lines are kept within the 70-character limit.
std::string format_pgm(const RealMatrix& m);
void save_pgm(const RealMatrix& m, const std::string& path);

}  // namespace spinfer

#endif  // SPINFER_MATRIX_HPP
