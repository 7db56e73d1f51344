#ifndef SPINFER_DIGRAPH_HPP
#define SPINFER_DIGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spinfer/errors.hpp"
#include "spinfer/matrix.hpp"

namespace spinfer {

/// Unreachable-pair sentinel in DistanceMatrix. No arithmetic is ever done
/// on it; the influence function maps it to zero.
inline constexpr std::int32_t kUnreachable = -1;

/// All-pairs shortest-path hop counts; row j holds distances from node j
/// along edge direction. d(i,i) = 0 by convention.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n) : n_(n), d_(n * n, kUnreachable) {}

  std::size_t size() const { return n_; }
  std::int32_t operator()(std::size_t from, std::size_t to) const { return d_[from * n_ + to]; }
  std::int32_t& at(std::size_t from, std::size_t to) { return d_[from * n_ + to]; }
  const std::int32_t* row(std::size_t from) const { return d_.data() + from * n_; }
  const std::vector<std::int32_t>& data() const { return d_; }

  bool operator==(const DistanceMatrix& other) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> d_;
};

/// Directed graph over the entities. The diagonal carries no explicit
/// self-loops (every node reaches itself at distance 0); only off-diagonal
/// cells can be flipped and only those count toward edge_count.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }
  const std::uint8_t* adjacency_row(std::size_t i) const { return adj_.data() + i * n_; }
  const std::vector<std::uint8_t>& adjacency() const { return adj_; }

  /// Set the off-diagonal cell (i,j). Throws SelfLoopError when i == j.
  void set_edge(std::size_t i, std::size_t j, bool present);

  /// Toggle the off-diagonal cell (i,j); an involution.
  void flip_edge_in_place(std::size_t i, std::size_t j);

  /// Value-returning flip, leaving *this untouched.
  DirectedGraph flipped(std::size_t i, std::size_t j) const;

  bool operator==(const DirectedGraph& other) const = default;

 private:
  void check_cell(std::size_t i, std::size_t j) const;

  std::size_t n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint8_t> adj_;
};

/// Hop counts from `source` along edge direction; kUnreachable when no path.
std::vector<std::int32_t> bfs_distances_from(const DirectedGraph& g, std::size_t source);

DistanceMatrix all_pairs_distances(const DirectedGraph& g);

/// In-place variant reusing an existing matrix (scratch-buffer pattern for
/// proposal evaluation). `out` is resized as needed.
void all_pairs_distances_into(const DirectedGraph& g, DistanceMatrix& out);

/// Adjacency serialized in the dense-text matrix format. The diagonal is
/// written as 1 (nodes are connected to themselves); it is ignored on load.
BinaryMatrix graph_to_matrix(const DirectedGraph& g);
DirectedGraph graph_from_matrix(const BinaryMatrix& m);

}  // namespace spinfer

#endif  // SPINFER_DIGRAPH_HPP
