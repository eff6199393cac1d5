#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "homocut/oracles.hpp"

using namespace homocut;
using namespace fixtures;

namespace {

std::vector<Edge> random_graph(std::mt19937_64& rng, int n, int extra) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back({static_cast<int>(rng() % v), v, static_cast<Weight>(1 + rng() % 20)});
  for (int i = 0; i < extra; ++i) {
    const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
    if (a != b) edges.push_back({a, b, static_cast<Weight>(1 + rng() % 20)});
  }
  return edges;
}

}  // namespace

TEST_CASE("max flow oracle") {
  const std::vector<Edge> one{{0, 1, 7}};
  CHECK(oracle_max_flow_min_cut(2, one, 0, 1).value == 7);
  const std::vector<Edge> apart{{0, 1, 3}, {2, 3, 4}};
  const FlowCut none = oracle_max_flow_min_cut(4, apart, 0, 3);
  CHECK(none.value == 0);
  CHECK(none.edges.empty());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 9;
    const auto edges = random_graph(rng, n, n);
    const int s = static_cast<int>(rng() % n);
    const int t = (s + 1 + static_cast<int>(rng() % (n - 1))) % n;
    const FlowCut f = oracle_max_flow_min_cut(n, edges, s, t);
    CHECK(f.value == oracle_exhaustive_st_cut(n, edges, s, t));
    Weight total = 0;
    for (int e : f.edges) total += edges[e].weight;
    CHECK(total == f.value);
  }
}

TEST_CASE("Stoer-Wagner oracle") {
  const std::vector<Edge> square{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}};
  CHECK(oracle_global_min_cut(4, square).value == 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 11;
    const auto edges = random_graph(rng, n, n / 2 + 1);
    const PartitionCut c = oracle_global_min_cut(n, edges);
    CHECK(c.value == oracle_exhaustive_global_cut(n, edges));
    CHECK_FALSE(c.side.empty());
    CHECK(c.side.size() < static_cast<std::size_t>(n));
  }
}

TEST_CASE("shortest cycle oracle") {
  const std::vector<Edge> triangle{{0, 1, 1}, {1, 2, 2}, {2, 0, 3}};
  CHECK(oracle_shortest_cycle(3, triangle) == 6);
  const std::vector<Edge> path{{0, 1, 1}, {1, 2, 1}};
  CHECK(oracle_shortest_cycle(3, path) == -1);
  const std::vector<Edge> loop{{0, 1, 5}, {1, 1, 2}};
  CHECK(oracle_shortest_cycle(2, loop) == 2);
}

TEST_CASE("even class oracle") {
  SUBCASE("torus schema") {
    const Surface s = homology_surface(torus_schema());
    const EvenClassOracle oracle(oracle_instance(s));
    CHECK(oracle.num_classes() == 4);
    const int a[] = {0}, b[] = {1}, ab[] = {0, 1};
    CHECK(oracle.minimum(std::span<const int>()).weight == 0);
    CHECK(oracle.minimum(a).weight == 1);
    CHECK(oracle.minimum(b).weight == 1);
    CHECK(oracle.minimum(ab).weight == 2);
    CHECK_FALSE(oracle.null_homologous(a));
  }
  SUBCASE("faces split by boundary darts") {
    const Surface s = pants();
    const OracleInstance inst = oracle_instance(s);
    const OracleFaces faces = oracle_faces(inst);
    CHECK(faces.boundary.size() == 3);
    CHECK(faces.interior.size() == static_cast<std::size_t>(s.num_faces() - 3));
  }
  SUBCASE("too many edges") {
    CHECK_THROWS_AS(EvenClassOracle(oracle_instance(grid(GenKind::torus_grid, 4, 4))), std::invalid_argument);
  }
}

TEST_CASE("crossing diagnostic and reports") {
  const Surface s = pants();
  const CrossingDiagnostic d = crossing_diagnostic(s, EvenSubgraph{}, forest_cotree_greedy(s));
  CHECK(d.max_crossings == 0);
  CHECK(d.reference == 12 * 0 + 4 * 3 - 5);
  const OracleReport r = make_report("x", "st", 3, 3);
  CHECK(r.match);
  CHECK_FALSE(make_report("x", "st", 3, 4).match);
}
