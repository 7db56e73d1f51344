#include "spinfer/digraph.hpp"

namespace spinfer {

void DirectedGraph::check_cell(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_)
    throw IndexError("graph cell (" + std::to_string(i) + "," + std::to_string(j) +
                     ") out of range for n=" + std::to_string(n_));
  if (i == j) throw SelfLoopError("diagonal cell (" + std::to_string(i) + "," +
                                  std::to_string(i) + ") is immutable");
}

void DirectedGraph::set_edge(std::size_t i, std::size_t j, bool present) {
  check_cell(i, j);
  std::uint8_t& cell = adj_[i * n_ + j];
  if (cell && !present) --edges_;
  if (!cell && present) ++edges_;
  cell = present ? 1 : 0;
}

void DirectedGraph::flip_edge_in_place(std::size_t i, std::size_t j) {
  check_cell(i, j);
  std::uint8_t& cell = adj_[i * n_ + j];
  if (cell) {
    cell = 0;
    --edges_;
  } else {
    cell = 1;
    ++edges_;
  }
}

DirectedGraph DirectedGraph::flipped(std::size_t i, std::size_t j) const {
  DirectedGraph g = *this;
  g.flip_edge_in_place(i, j);
  return g;
}

std::vector<std::int32_t> bfs_distances_from(const DirectedGraph& g, std::size_t source) {
  const std::size_t n = g.size();
  if (source >= n) throw IndexError("bfs source " + std::to_string(source) +
                                    " out of range for n=" + std::to_string(n));
  std::vector<std::int32_t> dist(n, kUnreachable);
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(static_cast<std::uint32_t>(source));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    const std::uint8_t* row = g.adjacency_row(u);
    const std::int32_t next = dist[u] + 1;
    for (std::size_t v = 0; v < n; ++v) {
      if (row[v] && dist[v] == kUnreachable) {
        dist[v] = next;
        queue.push_back(static_cast<std::uint32_t>(v));
      }
    }
  }
  return dist;
}

void all_pairs_distances_into(const DirectedGraph& g, DistanceMatrix& out) {
  const std::size_t n = g.size();
  if (out.size() != n) out = DistanceMatrix(n);
  // n BFS sweeps, reusing one queue. O(n (n + |E|)) total on the dense
  // adjacency representation.
  std::vector<std::uint32_t> queue;
  queue.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t v = 0; v < n; ++v) out.at(s, v) = kUnreachable;
    out.at(s, s) = 0;
    queue.clear();
    queue.push_back(static_cast<std::uint32_t>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      const std::uint8_t* row = g.adjacency_row(u);
      const std::int32_t next = out(s, u) + 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (row[v] && out(s, v) == kUnreachable) {
          out.at(s, v) = next;
          queue.push_back(static_cast<std::uint32_t>(v));
        }
      }
    }
  }
}

DistanceMatrix all_pairs_distances(const DirectedGraph& g) {
  DistanceMatrix d(g.size());
  all_pairs_distances_into(g, d);
  return d;
}

BinaryMatrix graph_to_matrix(const DirectedGraph& g) {
  const std::size_t n = g.size();
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i, true);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && g.has_edge(i, j)) m.set(i, j, true);
  }
  return m;
}

DirectedGraph graph_from_matrix(const BinaryMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("adjacency matrix must be square, got " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()));
  DirectedGraph g(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j)) g.set_edge(i, j, true);
  return g;
}

}  // namespace spinfer
