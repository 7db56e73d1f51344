#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinfer/digraph.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

using namespace spinfer;

TEST_CASE("bfs on the worked example graph") {
  const auto ex = oracles::worked_example();
  const auto from_r1 = bfs_distances_from(ex.graph, 0);
  CHECK(from_r1 == std::vector<std::int32_t>{0, 1, kUnreachable});
  const auto from_r2 = bfs_distances_from(ex.graph, 1);
  CHECK(from_r2 == std::vector<std::int32_t>{kUnreachable, 0, kUnreachable});
  const auto from_r3 = bfs_distances_from(ex.graph, 2);
  CHECK(from_r3 == std::vector<std::int32_t>{kUnreachable, 1, 0});
}

TEST_CASE("bfs on empty and complete graphs") {
  const DirectedGraph empty(3);
  CHECK(bfs_distances_from(empty, 1) == std::vector<std::int32_t>{kUnreachable, 0, kUnreachable});

  DirectedGraph complete(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) complete.set_edge(i, j, true);
  CHECK(bfs_distances_from(complete, 0) == std::vector<std::int32_t>{0, 1, 1, 1});

  CHECK_THROWS_AS(bfs_distances_from(empty, 3), IndexError);
}

TEST_CASE("chain distances compose") {
  DirectedGraph chain(3);
  chain.set_edge(0, 1, true);
  chain.set_edge(1, 2, true);
  const DistanceMatrix d = all_pairs_distances(chain);
  CHECK(d(0, 2) == 2);
  CHECK(d(2, 0) == kUnreachable);
}

namespace {

// Naive matrix-power reachability: d(a,b) = smallest k with (A+I)^k(a,b) != 0.
std::vector<std::vector<int>> matrix_power_distances(const DirectedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<std::vector<int>> reach(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = 1;
    dist[i][i] = 0;
  }
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::vector<int>> next(n, std::vector<int>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (reach[a][c] && (c == b || g.has_edge(c, b))) next[a][b] = 1;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (next[a][b] && dist[a][b] < 0) dist[a][b] = static_cast<int>(k);
    reach = next;
  }
  return dist;
}

}  // namespace

TEST_CASE("all_pairs_distances matches independent oracles on random graphs") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 2 + seed % 7;  // up to 8 nodes
    const DirectedGraph g = testsupport::random_graph(n, 0.3, seed);
    const DistanceMatrix d = all_pairs_distances(g);
    const auto fw = oracles::fw_distances(g);
    const auto mp = matrix_power_distances(g);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::int32_t expected =
            fw[a][b] >= oracles::kInf ? kUnreachable : static_cast<std::int32_t>(fw[a][b]);
        CHECK(d(a, b) == expected);
        CHECK(d(a, b) == static_cast<std::int32_t>(mp[a][b] < 0 ? kUnreachable : mp[a][b]));
      }
  }
}

TEST_CASE("distances satisfy the triangle inequality") {
  for (std::uint64_t seed = 50; seed < 70; ++seed) {
    const std::size_t n = 3 + seed % 5;
    const DistanceMatrix d = all_pairs_distances(testsupport::random_graph(n, 0.3, seed));
    for (std::size_t a = 0; a < n; ++a) {
      CHECK(d(a, a) == 0);
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b) CHECK((d(a, b) == 1) == testsupport::random_graph(n, 0.3, seed).has_edge(a, b));
        for (std::size_t c = 0; c < n; ++c) {
          if (d(a, b) == kUnreachable || d(b, c) == kUnreachable) continue;
          REQUIRE(d(a, c) != kUnreachable);
          CHECK(d(a, c) <= d(a, b) + d(b, c));
        }
      }
    }
  }
}

TEST_CASE("flip_edge is an involution and keeps edge_count consistent") {
  DirectedGraph g(2);
  const DirectedGraph with_edge = g.flipped(0, 1);
  CHECK(with_edge.edge_count() == 1);
  CHECK(with_edge.has_edge(0, 1));
  CHECK(with_edge.flipped(0, 1) == g);
  CHECK_THROWS_AS(g.flipped(0, 0), SelfLoopError);
  CHECK_THROWS_AS(g.flipped(0, 5), IndexError);

  DirectedGraph walk = testsupport::random_graph(6, 0.3, 11);
  std::mt19937_64 eng(99);
  for (int step = 0; step < 200; ++step) {
    const std::size_t i = eng() % 6;
    const std::size_t j = eng() % 6;
    if (i == j) continue;
    walk.flip_edge_in_place(i, j);
    std::size_t popcount = 0;
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) popcount += walk.has_edge(a, b) ? 1 : 0;
    CHECK(walk.edge_count() == popcount);
  }
}

TEST_CASE("adding an edge never lengthens a path, removing never shortens") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    DirectedGraph g = testsupport::random_graph(6, 0.25, seed);
    std::mt19937_64 eng(seed);
    const std::size_t i = eng() % 6;
    std::size_t j = eng() % 6;
    if (i == j) j = (j + 1) % 6;

    const DistanceMatrix before = all_pairs_distances(g);
    const bool adding = !g.has_edge(i, j);
    g.flip_edge_in_place(i, j);
    const DistanceMatrix after = all_pairs_distances(g);
    for (std::size_t a = 0; a < 6; ++a) {
      for (std::size_t b = 0; b < 6; ++b) {
        const double d0 = before(a, b) == kUnreachable ? 1e18 : before(a, b);
        const double d1 = after(a, b) == kUnreachable ? 1e18 : after(a, b);
        if (adding)
          CHECK(d1 <= d0);
        else
          CHECK(d1 >= d0);
      }
    }
  }
}

TEST_CASE("adjacency serialization writes a unit diagonal") {
  const auto ex = oracles::worked_example();
  const BinaryMatrix m = graph_to_matrix(ex.graph);
  CHECK(format_matrix(m) == "1,1,0\n0,1,0\n0,1,1\n");
  const DirectedGraph back = graph_from_matrix(m);
  CHECK(back == ex.graph);
  CHECK_THROWS_AS(graph_from_matrix(BinaryMatrix(2, 3)), DimensionError);
}
