#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace homocut {

using Weight = std::int64_t;

/// Darts 2e and 2e+1 are the two sides of edge e; dart 2e leaves edge.u.
using Dart = int;

constexpr Dart rev(Dart d) { return d ^ 1; }
constexpr int edge_of(Dart d) { return d >> 1; }

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;
  int v = 0;
  Weight weight = 0;
};

/// Cellular embedding of a graph on an orientable surface, given by a
/// rotation system. Boundary cycles are faces marked as removed.
///
/// Faces are traced with next(d) = succ(rev(d)), where succ is the
/// rotation successor at the tail of a dart. Face ids are assigned in
/// increasing order of the smallest dart on each face.
class Surface {
 public:
  Surface() = default;

  /// Validates the rotation system. `boundary_darts` marks the face
  /// containing each listed dart. Throws ParseError on invalid input.
  Surface(int num_vertices, std::vector<Edge> edges,
          std::vector<std::vector<Dart>> rotation,
          std::span<const Dart> boundary_darts = {},
          bool require_connected = true);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }
  int num_faces() const { return static_cast<int>(face_offsets_.size()) - 1; }
  int num_boundary() const { return static_cast<int>(boundary_faces_.size()); }
  int num_components() const { return components_; }

  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  Weight weight(int e) const { return edges_[e].weight; }
  Weight total_weight() const;

  int tail(Dart d) const { return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u; }
  int head(Dart d) const { return tail(rev(d)); }

  std::span<const Dart> rotation(int v) const {
    return {rot_.data() + rot_offsets_[v], rot_.data() + rot_offsets_[v + 1]};
  }
  int degree(int v) const { return rot_offsets_[v + 1] - rot_offsets_[v]; }
  /// Index of d within rotation(tail(d)).
  int rotation_index(Dart d) const { return rot_index_[d]; }
  Dart succ(Dart d) const;
  Dart pred(Dart d) const;
  Dart face_next(Dart d) const { return succ(rev(d)); }

  int face_of(Dart d) const { return face_of_[d]; }
  std::span<const Dart> face_darts(int f) const {
    return {face_.data() + face_offsets_[f], face_.data() + face_offsets_[f + 1]};
  }
  bool is_boundary_face(int f) const { return face_boundary_[f]; }
  const std::vector<int>& boundary_faces() const { return boundary_faces_; }
  /// True if edge e lies on a marked face.
  bool is_boundary_edge(int e) const;
  /// True if v is incident to a marked face.
  bool is_boundary_vertex(int v) const;

  /// Raw rotation system, in the layout accepted by the constructor.
  std::vector<std::vector<Dart>> rotation_system() const;
  /// Smallest dart of each marked face.
  std::vector<Dart> boundary_representatives() const;

  /// Copy with the given faces additionally marked as boundary.
  Surface with_marked_faces(std::span<const int> faces) const;
  /// Copy with every boundary unmarked (boundaries filled with disks).
  Surface filled() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> rot_offsets_;
  std::vector<Dart> rot_;
  std::vector<int> rot_index_;
  std::vector<int> face_offsets_;
  std::vector<Dart> face_;
  std::vector<int> face_of_;
  std::vector<char> face_boundary_;
  std::vector<int> boundary_faces_;
  int components_ = 0;
};

struct SurfaceStats {
  int euler_characteristic = 0;  // n - m + f - b
  int genus = 0;
  int boundaries = 0;
  int betti = 0;
};

SurfaceStats surface_stats(const Surface& s);

/// Subset of edges in which every vertex has even degree.
struct EvenSubgraph {
  std::vector<int> edges;  // sorted, distinct
};

struct ClosedWalk {
  std::vector<Dart> darts;
};

Weight weight_of(const Surface& s, const EvenSubgraph& h);
Weight weight_of(const Surface& s, const ClosedWalk& w);
bool is_even(const Surface& s, std::span<const int> edges);
bool is_closed_walk(const Surface& s, const ClosedWalk& w);
/// Edges traversed an odd number of times, sorted.
EvenSubgraph odd_edges(std::span<const Dart> darts);
EvenSubgraph symmetric_difference(const EvenSubgraph& a, const EvenSubgraph& b);
/// Number of connected components spanned by the edge set.
int count_components(const Surface& s, std::span<const int> edges);

/// Closed walks pairing consecutive subgraph darts in rotation order at each
/// vertex, so the walks are pairwise non-crossing. Throws if not even.
std::vector<ClosedWalk> cycle_decomposition(const Surface& s, const EvenSubgraph& h);

struct DualMap {
  std::vector<int> edge_to_dual;          // identity on edge ids
  std::vector<int> face_to_dual_vertex;   // identity on face ids
  std::vector<int> vertex_to_dual_face;
  std::vector<int> dual_boundary_vertices;
};

struct DualResult {
  Surface dual;
  DualMap map;
};

/// Dual graph on the surface with every boundary filled. Dual dart d has
/// tail face_of(d); the rotation at a dual vertex is the face walk order.
DualResult build_dual(const Surface& s);

/// True if the surfaces coincide up to relabelling vertices (edge and dart
/// ids must match).
bool same_embedding(const Surface& a, const Surface& b);

/// Marks additional faces as boundary. Throws std::invalid_argument on
/// duplicates, already-marked faces, or when no unmarked face would remain.
Surface remove_faces(const Surface& s, std::span<const int> faces);

/// True when every boundary walk visits distinct vertices and edges and no
/// vertex touches the boundary at more than one corner.
bool boundary_well_formed(const Surface& s);

struct CollarResult {
  Surface surface;
  /// New face id -> collared original face, or -1 for ordinary faces.
  std::vector<int> collar_of_face;
  /// New face id -> original face id (quads map to the face they collar).
  std::vector<int> face_origin;
};

/// Replaces each marked face by an annulus of quads around a new simple
/// boundary cycle. New edges get `collar_weight`; original vertex, edge and
/// dart ids are preserved. The result always satisfies
/// boundary_well_formed().
CollarResult collar_boundaries(const Surface& s, Weight collar_weight);

struct SliceResult {
  Surface surface;
  std::vector<int> vertex_origin;
  std::vector<int> edge_origin;
  std::vector<std::vector<int>> edge_copies;  // original edge -> new edges
};

/// Cuts the surface open along every edge in `cut`. Vertices are split at
/// cut darts (and, where a vertex has cut darts, at boundary corners). The
/// result may be disconnected.
SliceResult slice_along_edges(const Surface& s, std::span<const int> cut);

/// Walk given by its darts; an empty dart list is not allowed here.
struct Walk {
  std::vector<Dart> darts;
};

/// Validates that each walk is simple (closed, or boundary-to-boundary) and
/// that no two walks cross, then slices along their union. Throws
/// std::invalid_argument otherwise.
SliceResult slice_along(const Surface& s, std::span<const Walk> walks);

// .crs text format
Surface parse_crs(const std::string& text);
std::string emit_crs(const Surface& s);

}  // namespace homocut
