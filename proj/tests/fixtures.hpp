#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "homocut/generators.hpp"
#include "homocut/surface.hpp"

namespace fixtures {

using namespace homocut;

inline Surface torus_schema() {
  return parse_crs(
      "surface 1 2\n"
      "edge 0 0 0 1\n"
      "edge 1 0 0 1\n"
      "rot 0 : 0+ 1+ 0- 1-\n");
}

inline Surface grid(GenKind kind, int rows, int cols, WeightKind w = WeightKind::unit, std::uint64_t seed = 0) {
  GenSpec spec;
  spec.kind = kind;
  spec.rows = rows;
  spec.cols = cols;
  spec.weights = w;
  spec.weight_lo = 1;
  spec.weight_hi = 100;
  spec.seed = seed;
  return generate(spec);
}

inline Surface schema(int genus, int subdivisions, int chords = 0, std::uint64_t seed = 0,
                      WeightKind w = WeightKind::unit) {
  GenSpec spec;
  spec.kind = GenKind::genus_schema;
  spec.genus = genus;
  spec.subdivisions = subdivisions;
  spec.chords = chords;
  spec.seed = seed;
  spec.weights = w;
  spec.weight_lo = 1;
  spec.weight_hi = 100;
  return generate(spec);
}

/// Face of a planar or toroidal grid spanned by cell (i, j).
inline int cell_face(const Surface& s, int rows, int cols, int i, int j) {
  const std::set<int> want{i * cols + j, i * cols + (j + 1) % cols, ((i + 1) % rows) * cols + j,
                           ((i + 1) % rows) * cols + (j + 1) % cols};
  for (int f = 0; f < s.num_faces(); ++f) {
    if (s.face_darts(f).size() != 4) continue;
    std::set<int> got;
    for (Dart d : s.face_darts(f)) got.insert(s.tail(d));
    if (got == want) return f;
  }
  throw std::logic_error("no such cell");
}

/// Pair of pants: a 4x4 planar grid with three vertex-disjoint cells removed.
inline Surface pants() {
  const Surface g = grid(GenKind::planar_grid, 4, 4);
  std::vector<int> faces{cell_face(g, 4, 4, 0, 0), cell_face(g, 4, 4, 0, 2), cell_face(g, 4, 4, 2, 0)};
  std::sort(faces.begin(), faces.end());
  return remove_faces(g, faces);
}

/// Dart from u to v, or -1.
inline Dart dart_between(const Surface& s, int u, int v) {
  for (Dart d : s.rotation(u))
    if (s.head(d) == v) return d;
  return -1;
}

/// Every even subgraph, enumerated through fundamental cycles of a BFS tree.
inline std::vector<EvenSubgraph> all_even_subgraphs(const Surface& s) {
  std::vector<int> parent(s.num_vertices(), -2), depth(s.num_vertices(), 0);
  std::vector<char> tree(s.num_edges(), 0);
  std::vector<int> queue{0};
  parent[0] = -1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Dart d : s.rotation(queue[i])) {
      const int w = s.head(d);
      if (parent[w] != -2) continue;
      parent[w] = d;
      depth[w] = depth[queue[i]] + 1;
      tree[edge_of(d)] = 1;
      queue.push_back(w);
    }
  }
  std::vector<EvenSubgraph> basis;
  for (int e = 0; e < s.num_edges(); ++e) {
    if (tree[e]) continue;
    EvenSubgraph c{{e}};
    int a = s.edge(e).u, b = s.edge(e).v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      c = symmetric_difference(c, EvenSubgraph{{edge_of(parent[a])}});
      a = s.tail(parent[a]);
    }
    basis.push_back(c);
  }
  if (basis.size() > 20) throw std::invalid_argument("cycle space too large to enumerate");
  std::vector<EvenSubgraph> out{EvenSubgraph{}};
  for (const auto& c : basis) {
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(symmetric_difference(out[i], c));
  }
  return out;
}

}  // namespace fixtures
