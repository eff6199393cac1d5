#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "homocut/homology.hpp"

using namespace homocut;
using namespace fixtures;

namespace {

Surface disk() {
  const Surface g = grid(GenKind::planar_grid, 3, 3);
  const int inner = cell_face(g, 3, 3, 0, 0);
  return remove_faces(g, std::span<const int>(&inner, 1));
}

Surface torus_minus_face(int rows, int cols) {
  const Surface t = grid(GenKind::torus_grid, rows, cols);
  const int f = cell_face(t, rows, cols, 0, 0);
  return remove_faces(t, std::span<const int>(&f, 1));
}

Surface annulus() {
  const Surface g = grid(GenKind::planar_grid, 2, 4);
  std::vector<int> faces{cell_face(g, 2, 4, 0, 0), cell_face(g, 2, 4, 0, 2)};
  std::sort(faces.begin(), faces.end());
  return remove_faces(g, faces);
}

Surface well_formed_version(const Surface& s) {
  const Surface h = homology_surface(s);
  return boundary_well_formed(h) ? h : collar_boundaries(h, h.total_weight() + 1).surface;
}

}  // namespace

TEST_CASE("signature hex round trip") {
  const auto h = HomologySignature::from_mask(10, 0x2b5);
  CHECK(h.to_hex() == "2b5");
  CHECK(HomologySignature::from_hex(10, "2B5") == h);
  CHECK(HomologySignature(0).to_hex() == "0");
  CHECK_THROWS_AS(HomologySignature::from_hex(3, "f"), std::invalid_argument);
  CHECK_THROWS_AS(HomologySignature::from_hex(8, "zz"), std::invalid_argument);
  HomologySignature wide(130);
  wide.flip(129);
  CHECK(wide.to_hex().size() == 33);
  CHECK(HomologySignature::from_hex(130, wide.to_hex()) == wide);
}

TEST_CASE("tree-coforest leftover counts equal beta") {
  CHECK(tree_coforest(disk()).leftover.empty());
  CHECK(tree_coforest(pants()).leftover.size() == 2);
  CHECK(tree_coforest(torus_minus_face(3, 3)).leftover.size() == 2);
  CHECK(tree_coforest(homology_surface(schema(3, 1, 2, 9))).leftover.size() == 6);
}

TEST_CASE("edge signatures") {
  for (const Surface& s : {pants(), torus_minus_face(3, 4), homology_surface(schema(2, 1, 3, 4))}) {
    const TreeCoforest tc = tree_coforest(s);
    const auto sigs = edge_signatures(s, tc);
    for (std::size_t i = 0; i < tc.leftover.size(); ++i) CHECK(sigs[tc.leftover[i]].test(static_cast<int>(i)));
    for (int f = 0; f < s.num_faces(); ++f) {
      if (s.is_boundary_face(f)) continue;
      CHECK(signature_of(sigs, odd_edges(s.face_darts(f))).is_zero());
    }
    CHECK(signature_of(sigs, EvenSubgraph{}).is_zero());
    const auto evens = all_even_subgraphs(s);
    for (std::size_t i = 0; i + 1 < evens.size() && i < 40; ++i) {
      const auto& a = evens[i];
      const auto& b = evens[evens.size() - 1 - i];
      CHECK(signature_of(sigs, symmetric_difference(a, b)) == (signature_of(sigs, a) ^ signature_of(sigs, b)));
    }
  }
}

TEST_CASE("torus schema loops have independent classes") {
  const Surface s = homology_surface(torus_schema());
  const auto sigs = edge_signatures(s);
  const auto a = signature_of(sigs, ClosedWalk{{0}});
  const auto b = signature_of(sigs, ClosedWalk{{2}});
  CHECK_FALSE(a.is_zero());
  CHECK_FALSE(b.is_zero());
  CHECK_FALSE((a ^ b).is_zero());
}

TEST_CASE("representatives realize every class") {
  for (const Surface& s : {pants(), torus_minus_face(3, 3), homology_surface(schema(2, 2, 1, 3))}) {
    const auto sigs = edge_signatures(s);
    const int beta = surface_stats(s).betti;
    for (std::uint64_t h = 0; h < (std::uint64_t{1} << beta); ++h) {
      const auto cls = HomologySignature::from_mask(beta, h);
      const EvenSubgraph rep = representative_of_class(s, sigs, cls);
      CHECK(is_even(s, rep.edges));
      CHECK(signature_of(sigs, rep) == cls);
    }
  }
}

TEST_CASE("greedy arcs") {
  SUBCASE("disk has none") { CHECK(forest_cotree_greedy(disk()).arcs.empty()); }
  SUBCASE("pants arcs join boundary vertices") {
    const Surface s = pants();
    const ForestCotree fc = forest_cotree_greedy(s);
    REQUIRE(fc.arcs.size() == 2);
    for (const auto& arc : fc.arcs) {
      CHECK(s.is_boundary_vertex(s.tail(arc.front())));
      CHECK(s.is_boundary_vertex(s.head(arc.back())));
    }
    CHECK(fc.shortest_paths().size() == 4);
  }
  SUBCASE("pinched boundaries are rejected") {
    CHECK_THROWS_AS(forest_cotree_greedy(homology_surface(schema(2, 1))), std::invalid_argument);
  }
  SUBCASE("slicing along the arcs leaves a disk") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      GenSpec spec;
      spec.seed = seed;
      spec.weights = WeightKind::uniform;
      spec.weight_lo = 1;
      spec.weight_hi = 20;
      switch (seed % 3) {
        case 0:
          spec.kind = GenKind::random_rotation;
          spec.vertices = 6 + static_cast<int>(seed % 5);
          spec.edges = spec.vertices + 4;
          break;
        case 1:
          spec.kind = GenKind::genus_schema;
          spec.genus = 1 + static_cast<int>(seed % 3);
          spec.subdivisions = 1;
          spec.chords = 2;
          break;
        default:
          spec.kind = GenKind::torus_grid;
          spec.rows = 3;
          spec.cols = 4;
          spec.boundary = 1 + static_cast<int>(seed % 2);
          break;
      }
      const Surface s = well_formed_version(generate(spec));
      const ForestCotree fc = forest_cotree_greedy(s);
      CHECK(static_cast<int>(fc.arcs.size()) == surface_stats(s).betti);
      std::vector<int> cut;
      for (const auto& arc : fc.arcs)
        for (Dart d : arc) cut.push_back(edge_of(d));
      std::sort(cut.begin(), cut.end());
      cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
      const SurfaceStats st = surface_stats(slice_along_edges(s, cut).surface);
      CHECK(st.euler_characteristic == 1);
      CHECK(st.boundaries == 1);
    }
  }
}

TEST_CASE("crossing parity vectors") {
  const Surface s = torus_minus_face(2, 2);
  const ForestCotree fc = forest_cotree_greedy(s);
  CHECK(crossing_parity_vector(s, EvenSubgraph{}, fc).is_zero());
  for (int f = 0; f < s.num_faces(); ++f)
    if (!s.is_boundary_face(f)) CHECK(crossing_parity_vector(s, odd_edges(s.face_darts(f)), fc).is_zero());
}

TEST_CASE("crossing parity determines the signature and back") {
  for (const Surface& s : {torus_minus_face(2, 2), annulus(), pants(), well_formed_version(schema(2, 1))}) {
    const auto sigs = edge_signatures(s);
    const ForestCotree fc = forest_cotree_greedy(s);
    std::map<std::string, std::string> forward, backward;
    for (const auto& h : all_even_subgraphs(s)) {
      const std::string sig = signature_of(sigs, h).to_hex();
      const std::string par = crossing_parity_vector(s, h, fc).to_hex();
      auto [f, fnew] = forward.try_emplace(sig, par);
      auto [b, bnew] = backward.try_emplace(par, sig);
      CHECK(f->second == par);
      CHECK(b->second == sig);
    }
    CHECK(forward.size() == (std::size_t{1} << surface_stats(s).betti));
  }
}
