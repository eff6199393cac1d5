#include "doctest.h"
#include "fixtures.hpp"
#include "homocut/cuts.hpp"
#include "homocut/homology.hpp"
#include "homocut/oracles.hpp"

using namespace homocut;
using namespace fixtures;

namespace {

Surface dumbbell() {
  return parse_crs(
      "surface 6 7\n"
      "edge 0 0 1 10\nedge 1 1 2 10\nedge 2 2 0 10\n"
      "edge 3 3 4 10\nedge 4 4 5 10\nedge 5 5 3 10\n"
      "edge 6 2 3 1\n"
      "rot 0 : 0+ 2-\nrot 1 : 1+ 0-\nrot 2 : 2+ 1- 6+\n"
      "rot 3 : 3+ 5- 6-\nrot 4 : 4+ 3-\nrot 5 : 5+ 4-\n");
}

Surface random_instance(std::uint64_t seed) {
  GenSpec spec;
  spec.seed = seed;
  spec.weights = WeightKind::uniform;
  spec.weight_lo = 1;
  spec.weight_hi = 30;
  switch (seed % 3) {
    case 0:
      spec.kind = GenKind::planar_grid;
      spec.rows = 3;
      spec.cols = 3 + static_cast<int>(seed % 2);
      break;
    case 1:
      spec.kind = GenKind::torus_grid;
      spec.rows = 3;
      spec.cols = 3;
      break;
    default:
      spec.kind = GenKind::genus_schema;
      spec.genus = 1 + static_cast<int>(seed % 2);
      spec.subdivisions = 1;
      spec.chords = 2;
      break;
  }
  return generate(spec);
}

void check_partition(const Surface& s, const CutResult& r) {
  CHECK(r.side_s.size() + r.side_t.size() == static_cast<std::size_t>(s.num_vertices()));
  CHECK_FALSE(r.side_s.empty());
  CHECK_FALSE(r.side_t.empty());
  std::vector<char> in_s(s.num_vertices(), 0);
  for (int v : r.side_s) in_s[v] = 1;
  Weight crossing = 0;
  for (int e = 0; e < s.num_edges(); ++e)
    if (in_s[s.edge(e).u] != in_s[s.edge(e).v]) crossing += s.weight(e);
  CHECK(crossing <= r.weight);
}

}  // namespace

TEST_CASE("minimum st-cuts") {
  SUBCASE("single edge") {
    const Surface s = parse_crs("surface 2 1\nedge 0 0 1 5\nrot 0 : 0+\nrot 1 : 0-\n");
    const CutResult r = min_st_cut(s, 0, 1);
    CHECK(r.weight == 5);
    CHECK(r.edges == std::vector<int>{0});
    CHECK(r.provenance == "st-duality");
  }
  SUBCASE("planar grid corners") {
    const Surface s = grid(GenKind::planar_grid, 3, 3);
    CHECK(min_st_cut(s, 0, 8).weight == 2);
  }
  SUBCASE("toroidal grid") {
    const Surface s = grid(GenKind::torus_grid, 3, 3);
    for (int t = 1; t < 9; ++t) CHECK(min_st_cut(s, 0, t).weight == 4);
  }
  SUBCASE("invalid terminals") {
    const Surface s = grid(GenKind::planar_grid, 3, 3);
    CHECK_THROWS_AS(min_st_cut(s, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(min_st_cut(s, 0, 9), std::invalid_argument);
  }
  SUBCASE("random instances match max flow") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      const Surface s = random_instance(seed);
      const int n = s.num_vertices();
      const int a = static_cast<int>(seed % n), b = static_cast<int>((seed * 7 + 3) % n);
      if (a == b) continue;
      const CutOptions opt{seed % 2 ? SearchMode::sliced : SearchMode::naive};
      const CutResult r = min_st_cut(s, a, b, opt);
      CHECK(r.weight == oracle_max_flow_min_cut(n, s.edges(), a, b).value);
      check_partition(s, r);
    }
  }
}

TEST_CASE("shortest weighted cycle") {
  const std::vector<Edge> triangle{{0, 1, 1}, {1, 2, 2}, {2, 0, 3}};
  const auto c = shortest_weighted_cycle(3, triangle);
  REQUIRE(c.has_value());
  CHECK(c->weight == 6);
  CHECK(c->edges == std::vector<int>{0, 1, 2});
  const std::vector<Edge> path{{0, 1, 1}, {1, 2, 1}};
  CHECK_FALSE(shortest_weighted_cycle(3, path).has_value());
  const std::vector<char> usable{1, 1, 0};
  CHECK_FALSE(shortest_weighted_cycle(3, triangle, usable).has_value());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Surface s = random_instance(seed);
    if (s.num_edges() > 24) continue;
    const auto got = shortest_weighted_cycle(s.num_vertices(), s.edges());
    const Weight want = oracle_shortest_cycle(s.num_vertices(), s.edges());
    REQUIRE(got.has_value());
    CHECK(got->weight == want);
    CHECK(is_even(s, got->edges));
  }
}

TEST_CASE("global minimum cuts") {
  SUBCASE("four-cycle") {
    const Surface s = parse_crs(
        "surface 4 4\nedge 0 0 1 1\nedge 1 1 2 1\nedge 2 2 3 1\nedge 3 3 0 1\n"
        "rot 0 : 0+ 3-\nrot 1 : 1+ 0-\nrot 2 : 2+ 1-\nrot 3 : 3+ 2-\n");
    CHECK(global_min_cut(s).weight == 2);
  }
  SUBCASE("toroidal grid") { CHECK(global_min_cut(grid(GenKind::torus_grid, 3, 3)).weight == 4); }
  SUBCASE("dumbbell cuts the bridge") {
    const Surface s = dumbbell();
    const CutResult r = global_min_cut(s);
    CHECK(r.weight == 1);
    CHECK(r.edges == std::vector<int>{6});
    check_partition(s, r);
  }
  SUBCASE("random instances match Stoer-Wagner") {
    for (std::uint64_t seed = 0; seed < 24; ++seed) {
      const Surface s = random_instance(seed);
      const CutOptions opt{seed % 2 ? SearchMode::sliced : SearchMode::naive};
      const CutResult r = global_min_cut(s, static_cast<int>(seed % s.num_vertices()), opt);
      CHECK(r.weight == oracle_global_min_cut(s.num_vertices(), s.edges()).value);
      check_partition(s, r);
      const bool known = r.provenance == "global-contractible" || r.provenance.rfind("global-class ", 0) == 0;
      CHECK(known);
    }
  }
}

TEST_CASE("global cut building blocks") {
  const auto punctured_dual = [](const Surface& s) {
    const DualResult d = build_dual(s);
    const int hole = d.map.vertex_to_dual_face[0];
    return remove_faces(d.dual, std::span<const int>(&hole, 1));
  };
  SUBCASE("contractible separator is null-homologous") {
    for (std::uint64_t seed = 0; seed < 9; ++seed) {
      const Surface s1 = punctured_dual(random_instance(seed));
      const auto x = global_separating_contractible(s1);
      if (!x) continue;
      CHECK(is_even(s1, x->edges));
      CHECK(signature_of(edge_signatures(s1), *x).is_zero());
    }
  }
  SUBCASE("noncontractible is empty on the sphere") {
    CHECK_FALSE(global_separating_noncontractible(punctured_dual(grid(GenKind::planar_grid, 3, 3))).has_value());
  }
  SUBCASE("candidate count is bounded") {
    for (int g = 1; g <= 2; ++g) {
      const Surface s1 = punctured_dual(schema(g, 1, 2, 5, WeightKind::uniform));
      const auto r = global_separating_noncontractible(s1);
      REQUIRE(r.has_value());
      CHECK(r->candidates <= 2 * ((1 << (2 * g)) - 1));
      CHECK(r->cls != 0);
    }
  }
  SUBCASE("face separator arguments") {
    const Surface s = grid(GenKind::torus_grid, 3, 3);
    CHECK_THROWS_AS(min_face_separator(s, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(min_face_separator(s, 0, 99), std::invalid_argument);
    CHECK(weight_of(s, min_face_separator(s, 0, 4)) == 4);
  }
}
