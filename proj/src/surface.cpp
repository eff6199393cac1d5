#include "homocut/surface.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homocut {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Surface::Surface(int num_vertices, std::vector<Edge> edges,
                 std::vector<std::vector<Dart>> rotation,
                 std::span<const Dart> boundary_darts, bool require_connected)
    : n_(num_vertices), edges_(std::move(edges)) {
  const int m = num_edges();
  if (n_ <= 0) throw ParseError("surface needs at least one vertex");
  if (m == 0) throw ParseError("surface needs at least one edge");
  if (static_cast<int>(rotation.size()) != n_)
    throw ParseError("rotation system must list every vertex");
  for (int e = 0; e < m; ++e) {
    const Edge& ed = edges_[e];
    if (ed.u < 0 || ed.u >= n_ || ed.v < 0 || ed.v >= n_)
      throw ParseError("edge " + std::to_string(e) + " has an endpoint out of range");
    if (ed.weight < 0) throw ParseError("edge " + std::to_string(e) + " has negative weight");
  }

  rot_offsets_.assign(n_ + 1, 0);
  rot_.reserve(2 * m);
  rot_index_.assign(2 * m, -1);
  for (int v = 0; v < n_; ++v) {
    rot_offsets_[v] = static_cast<int>(rot_.size());
    int idx = 0;
    for (Dart d : rotation[v]) {
      if (d < 0 || d >= 2 * m) throw ParseError("dart " + std::to_string(d) + " out of range");
      if (rot_index_[d] != -1) throw ParseError("dart " + std::to_string(d) + " appears twice");
      if (tail(d) != v)
        throw ParseError("dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) +
                         " but its tail is " + std::to_string(tail(d)));
      rot_index_[d] = idx++;
      rot_.push_back(d);
    }
  }
  rot_offsets_[n_] = static_cast<int>(rot_.size());
  if (static_cast<int>(rot_.size()) != 2 * m)
    throw ParseError("some darts are missing from the rotation system");

  // Faces, numbered by smallest dart.
  face_of_.assign(2 * m, -1);
  face_offsets_.push_back(0);
  for (Dart start = 0; start < 2 * m; ++start) {
    if (face_of_[start] != -1) continue;
    const int f = num_faces();
    Dart d = start;
    do {
      face_of_[d] = f;
      face_.push_back(d);
      d = face_next(d);
    } while (d != start);
    face_offsets_.push_back(static_cast<int>(face_.size()));
  }

  face_boundary_.assign(num_faces(), 0);
  for (Dart d : boundary_darts) {
    if (d < 0 || d >= 2 * m) throw ParseError("boundary dart " + std::to_string(d) + " out of range");
    face_boundary_[face_of_[d]] = 1;
  }
  for (int f = 0; f < num_faces(); ++f)
    if (face_boundary_[f]) boundary_faces_.push_back(f);

  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& ed : edges_) parent[find_root(parent, ed.u)] = find_root(parent, ed.v);
  components_ = 0;
  for (int v = 0; v < n_; ++v) {
    if (degree(v) == 0) throw ParseError("vertex " + std::to_string(v) + " has no edges");
    if (find_root(parent, v) == v) ++components_;
  }
  if (require_connected && components_ != 1) throw ParseError("graph is disconnected");
}

Weight Surface::total_weight() const {
  Weight total = 0;
  for (const Edge& e : edges_) total += e.weight;
  return total;
}

Dart Surface::succ(Dart d) const {
  const int v = tail(d);
  int i = rot_index_[d] + 1;
  if (i == degree(v)) i = 0;
  return rot_[rot_offsets_[v] + i];
}

Dart Surface::pred(Dart d) const {
  const int v = tail(d);
  int i = rot_index_[d] - 1;
  if (i < 0) i = degree(v) - 1;
  return rot_[rot_offsets_[v] + i];
}

bool Surface::is_boundary_edge(int e) const {
  return face_boundary_[face_of_[2 * e]] || face_boundary_[face_of_[2 * e + 1]];
}

bool Surface::is_boundary_vertex(int v) const {
  for (Dart d : rotation(v))
    if (face_boundary_[face_of_[d]]) return true;
  return false;
}

std::vector<std::vector<Dart>> Surface::rotation_system() const {
  std::vector<std::vector<Dart>> out(n_);
  for (int v = 0; v < n_; ++v) out[v].assign(rotation(v).begin(), rotation(v).end());
  return out;
}

std::vector<Dart> Surface::boundary_representatives() const {
  std::vector<Dart> out;
  for (int f : boundary_faces_) out.push_back(face_darts(f)[0]);
  return out;
}

Surface Surface::with_marked_faces(std::span<const int> faces) const {
  std::vector<Dart> marks = boundary_representatives();
  for (int f : faces) marks.push_back(face_darts(f)[0]);
  return Surface(n_, edges_, rotation_system(), marks, components_ == 1);
}

Surface Surface::filled() const {
  return Surface(n_, edges_, rotation_system(), {}, components_ == 1);
}

SurfaceStats surface_stats(const Surface& s) {
  SurfaceStats st;
  const int closed_chi = s.num_vertices() - s.num_edges() + s.num_faces();
  st.boundaries = s.num_boundary();
  st.euler_characteristic = closed_chi - st.boundaries;
  st.genus = (2 * s.num_components() - closed_chi) / 2;
  st.betti = st.boundaries >= 1 ? 2 * st.genus + st.boundaries - 1 : 2 * st.genus;
  return st;
}

Weight weight_of(const Surface& s, const EvenSubgraph& h) {
  Weight total = 0;
  for (int e : h.edges) total += s.weight(e);
  return total;
}

Weight weight_of(const Surface& s, const ClosedWalk& w) {
  Weight total = 0;
  for (Dart d : w.darts) total += s.weight(edge_of(d));
  return total;
}

bool is_even(const Surface& s, std::span<const int> edges) {
  std::vector<char> parity(s.num_vertices(), 0);
  for (int e : edges) {
    parity[s.edge(e).u] ^= 1;
    parity[s.edge(e).v] ^= 1;
  }
  return std::none_of(parity.begin(), parity.end(), [](char p) { return p != 0; });
}

bool is_closed_walk(const Surface& s, const ClosedWalk& w) {
  const auto& d = w.darts;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (s.head(d[i]) != s.tail(d[(i + 1) % d.size()])) return false;
  return true;
}

EvenSubgraph odd_edges(std::span<const Dart> darts) {
  std::vector<int> es;
  es.reserve(darts.size());
  for (Dart d : darts) es.push_back(edge_of(d));
  std::sort(es.begin(), es.end());
  EvenSubgraph out;
  for (std::size_t i = 0; i < es.size();) {
    std::size_t j = i;
    while (j < es.size() && es[j] == es[i]) ++j;
    if ((j - i) % 2 == 1) out.edges.push_back(es[i]);
    i = j;
  }
  return out;
}

EvenSubgraph symmetric_difference(const EvenSubgraph& a, const EvenSubgraph& b) {
  EvenSubgraph out;
  std::set_symmetric_difference(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                                std::back_inserter(out.edges));
  return out;
}

int count_components(const Surface& s, std::span<const int> edges) {
  std::vector<int> parent(s.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> used(s.num_vertices(), 0);
  for (int e : edges) {
    used[s.edge(e).u] = used[s.edge(e).v] = 1;
    parent[find_root(parent, s.edge(e).u)] = find_root(parent, s.edge(e).v);
  }
  int count = 0;
  for (int v = 0; v < s.num_vertices(); ++v)
    if (used[v] && find_root(parent, v) == v) ++count;
  return count;
}

std::vector<ClosedWalk> cycle_decomposition(const Surface& s, const EvenSubgraph& h) {
  if (!is_even(s, h.edges)) throw std::invalid_argument("subgraph is not even");
  std::vector<char> in_h(s.num_edges(), 0);
  for (int e : h.edges) in_h[e] = 1;

  // Pair the subgraph darts at each vertex: 1st with 2nd, 3rd with 4th, ...
  std::vector<Dart> partner(s.num_darts(), -1);
  for (int v = 0; v < s.num_vertices(); ++v) {
    Dart pending = -1;
    for (Dart d : s.rotation(v)) {
      if (!in_h[edge_of(d)]) continue;
      if (pending < 0) {
        pending = d;
      } else {
        partner[pending] = d;
        partner[d] = pending;
        pending = -1;
      }
    }
  }

  std::vector<ClosedWalk> walks;
  std::vector<char> used(s.num_edges(), 0);
  for (int e : h.edges) {
    if (used[e]) continue;
    ClosedWalk w;
    const Dart start = 2 * e;
    Dart d = start;
    do {
      w.darts.push_back(d);
      used[edge_of(d)] = 1;
      d = partner[rev(d)];
    } while (d != start);
    walks.push_back(std::move(w));
  }
  return walks;
}

DualResult build_dual(const Surface& s) {
  const int m = s.num_edges();
  std::vector<Edge> edges(m);
  for (int e = 0; e < m; ++e)
    edges[e] = Edge{s.face_of(2 * e), s.face_of(2 * e + 1), s.weight(e)};
  std::vector<std::vector<Dart>> rot(s.num_faces());
  for (int f = 0; f < s.num_faces(); ++f) {
    auto fd = s.face_darts(f);
    rot[f].assign(fd.begin(), fd.end());
  }
  DualResult out{Surface(s.num_faces(), std::move(edges), std::move(rot)), {}};
  out.map.edge_to_dual.resize(m);
  std::iota(out.map.edge_to_dual.begin(), out.map.edge_to_dual.end(), 0);
  out.map.face_to_dual_vertex.resize(s.num_faces());
  std::iota(out.map.face_to_dual_vertex.begin(), out.map.face_to_dual_vertex.end(), 0);
  out.map.vertex_to_dual_face.resize(s.num_vertices());
  for (int v = 0; v < s.num_vertices(); ++v)
    out.map.vertex_to_dual_face[v] = out.dual.face_of(s.rotation(v)[0]);
  out.map.dual_boundary_vertices = s.boundary_faces();
  return out;
}

bool same_embedding(const Surface& a, const Surface& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> phi(a.num_vertices(), -1);
  for (Dart d = 0; d < a.num_darts(); ++d) {
    int& slot = phi[a.tail(d)];
    if (slot == -1) slot = b.tail(d);
    if (slot != b.tail(d)) return false;
    if (a.succ(d) != b.succ(d)) return false;
  }
  for (int e = 0; e < a.num_edges(); ++e)
    if (a.weight(e) != b.weight(e)) return false;
  return true;
}

Surface remove_faces(const Surface& s, std::span<const int> faces) {
  std::vector<int> sorted(faces.begin(), faces.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate face id");
  for (int f : sorted) {
    if (f < 0 || f >= s.num_faces()) throw std::invalid_argument("face id out of range");
    if (s.is_boundary_face(f)) throw std::invalid_argument("face is already a boundary");
  }
  if (s.num_boundary() + static_cast<int>(sorted.size()) >= s.num_faces())
    throw std::invalid_argument("cannot remove every face");
  return s.with_marked_faces(sorted);
}

bool boundary_well_formed(const Surface& s) {
  std::vector<int> corners(s.num_vertices(), 0);
  std::vector<int> seen_edge(s.num_edges(), -1);
  for (int f : s.boundary_faces()) {
    for (Dart d : s.face_darts(f)) {
      if (++corners[s.tail(d)] > 1) return false;
      if (seen_edge[edge_of(d)] != -1) return false;
      seen_edge[edge_of(d)] = f;
    }
  }
  return true;
}

CollarResult collar_boundaries(const Surface& s, Weight collar_weight) {
  const int n = s.num_vertices();
  std::vector<Edge> edges = s.edges();
  // Spoke dart inserted right after dart x in x's rotation.
  std::vector<Dart> insert_after(s.num_darts(), -1);
  std::vector<std::vector<Dart>> new_rot;
  int next_vertex = n;
  std::vector<Dart> inner_marks;

  for (int f : s.boundary_faces()) {
    auto fd = s.face_darts(f);
    const int k = static_cast<int>(fd.size());
    const int first_x = next_vertex;
    next_vertex += k;
    const int first_spoke = static_cast<int>(edges.size());
    for (int j = 0; j < k; ++j)
      edges.push_back(Edge{s.tail(fd[j]), first_x + j, collar_weight});
    const int first_rim = static_cast<int>(edges.size());
    for (int j = 0; j < k; ++j)
      edges.push_back(Edge{first_x + j, first_x + (j + 1) % k, collar_weight});
    for (int j = 0; j < k; ++j) {
      const Dart prev = fd[(j + k - 1) % k];
      insert_after[rev(prev)] = 2 * (first_spoke + j);
      // Rotation at x_j: spoke back to the corner, rim to x_{j-1}, rim to x_{j+1}.
      const Dart to_corner = 2 * (first_spoke + j) + 1;
      const Dart to_prev = 2 * (first_rim + (j + k - 1) % k) + 1;
      const Dart to_next = 2 * (first_rim + j);
      new_rot.push_back({to_corner, to_prev, to_next});
    }
    inner_marks.push_back(2 * first_rim);
  }

  std::vector<std::vector<Dart>> rot(next_vertex);
  for (int v = 0; v < n; ++v) {
    for (Dart d : s.rotation(v)) {
      rot[v].push_back(d);
      if (insert_after[d] >= 0) rot[v].push_back(insert_after[d]);
    }
  }
  for (std::size_t i = 0; i < new_rot.size(); ++i) rot[n + i] = std::move(new_rot[i]);

  CollarResult out{Surface(next_vertex, std::move(edges), std::move(rot), inner_marks,
                           s.num_components() == 1),
                   {}, {}};
  const Surface& t = out.surface;
  out.collar_of_face.assign(t.num_faces(), -1);
  out.face_origin.assign(t.num_faces(), -1);
  for (int f = 0; f < t.num_faces(); ++f) {
    for (Dart d : t.face_darts(f)) {
      if (d < s.num_darts()) {
        const int orig = s.face_of(d);
        out.face_origin[f] = orig;
        if (s.is_boundary_face(orig)) out.collar_of_face[f] = orig;
        break;
      }
    }
  }
  return out;
}

}  // namespace homocut
