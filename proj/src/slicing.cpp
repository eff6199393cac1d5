#include <algorithm>
#include <stdexcept>

#include "homocut/surface.hpp"

namespace homocut {

namespace {

constexpr Dart kCut = -1;

struct NewDart {
  Dart dart;
  bool inner;  // borders the face opened by the cut
};

}  // namespace

SliceResult slice_along_edges(const Surface& s, std::span<const int> cut_edges) {
  const int m = s.num_edges();
  std::vector<char> cut(m, 0);
  for (int e : cut_edges) cut[e] = 1;

  SliceResult out;
  out.edge_copies.resize(m);
  // copy a keeps the face of dart 2e, copy b keeps the face of dart 2e+1.
  std::vector<int> copy_a(m), copy_b(m, -1);
  int next_edge = 0;
  for (int e = 0; e < m; ++e) {
    copy_a[e] = next_edge++;
    out.edge_origin.push_back(e);
    out.edge_copies[e].push_back(copy_a[e]);
    if (cut[e]) {
      copy_b[e] = next_edge++;
      out.edge_origin.push_back(e);
      out.edge_copies[e].push_back(copy_b[e]);
    }
  }

  std::vector<int> new_tail(2 * next_edge, -1);
  std::vector<char> inner(2 * next_edge, 0);
  std::vector<std::vector<Dart>> rot;
  std::vector<NewDart> seq;
  for (int v = 0; v < s.num_vertices(); ++v) {
    seq.clear();
    bool has_cut_dart = false;
    for (Dart d : s.rotation(v))
      if (cut[edge_of(d)]) has_cut_dart = true;
    for (Dart d : s.rotation(v)) {
      const int e = edge_of(d);
      const bool plus = (d & 1) == 0;
      if (!cut[e]) {
        seq.push_back({2 * copy_a[e] + (plus ? 0 : 1), false});
      } else if (plus) {
        seq.push_back({2 * copy_a[e], false});
        seq.push_back({kCut, false});
        seq.push_back({2 * copy_b[e], true});
      } else {
        seq.push_back({2 * copy_b[e] + 1, false});
        seq.push_back({kCut, false});
        seq.push_back({2 * copy_a[e] + 1, true});
      }
      if (has_cut_dart && s.is_boundary_face(s.face_of(rev(d)))) seq.push_back({kCut, false});
    }
    auto first_cut = std::find_if(seq.begin(), seq.end(), [](const NewDart& x) { return x.dart == kCut; });
    if (first_cut == seq.end()) {
      const int id = static_cast<int>(rot.size());
      rot.emplace_back();
      for (const NewDart& x : seq) {
        rot.back().push_back(x.dart);
        new_tail[x.dart] = id;
        inner[x.dart] = x.inner;
      }
      out.vertex_origin.push_back(v);
      continue;
    }
    std::rotate(seq.begin(), first_cut + 1, seq.end());
    // seq now ends with a cut marker; every segment between markers is a vertex.
    std::vector<Dart> segment;
    for (const NewDart& x : seq) {
      if (x.dart == kCut) {
        if (segment.empty()) continue;
        const int id = static_cast<int>(rot.size());
        for (Dart d : segment) new_tail[d] = id;
        rot.push_back(std::move(segment));
        segment.clear();
        out.vertex_origin.push_back(v);
      } else {
        segment.push_back(x.dart);
        inner[x.dart] = x.inner;
      }
    }
  }

  std::vector<Edge> edges(next_edge);
  for (int ne = 0; ne < next_edge; ++ne)
    edges[ne] = Edge{new_tail[2 * ne], new_tail[2 * ne + 1], s.weight(out.edge_origin[ne])};

  const int nv = static_cast<int>(rot.size());
  Surface open(nv, edges, rot, {}, false);
  std::vector<Dart> marks;
  for (int f = 0; f < open.num_faces(); ++f) {
    for (Dart nd : open.face_darts(f)) {
      const Dart orig = 2 * out.edge_origin[edge_of(nd)] + (nd & 1);
      if (inner[nd] || s.is_boundary_face(s.face_of(orig))) {
        marks.push_back(nd);
        break;
      }
    }
  }
  out.surface = Surface(nv, std::move(edges), std::move(rot), marks, false);
  return out;
}

namespace {

bool cyclic_between(int a, int x, int b) {
  // x strictly inside the cyclic interval (a, b)
  if (a < b) return a < x && x < b;
  return x > a || x < b;
}

}  // namespace

SliceResult slice_along(const Surface& s, std::span<const Walk> walks) {
  struct Visit {
    int walk;
    Dart in;   // dart at the vertex pointing back along the walk, or -1
    Dart out;  // dart leaving the vertex, or -1
  };
  std::vector<std::vector<Visit>> visits(s.num_vertices());
  std::vector<int> cut;

  for (int w = 0; w < static_cast<int>(walks.size()); ++w) {
    const auto& darts = walks[w].darts;
    if (darts.empty()) throw std::invalid_argument("empty walk");
    for (std::size_t i = 0; i + 1 < darts.size(); ++i)
      if (s.head(darts[i]) != s.tail(darts[i + 1]))
        throw std::invalid_argument("walk darts are not consecutive");
    const int first = s.tail(darts.front());
    const int last = s.head(darts.back());
    const bool closed = first == last;
    if (!closed && !(s.is_boundary_vertex(first) && s.is_boundary_vertex(last)))
      throw std::invalid_argument("open walk must run between boundary vertices");

    std::vector<char> seen(s.num_vertices(), 0);
    for (std::size_t i = 0; i < darts.size(); ++i) {
      const int v = s.tail(darts[i]);
      if (seen[v]) throw std::invalid_argument("walk is not simple");
      seen[v] = 1;
      const Dart in = (i > 0) ? rev(darts[i - 1]) : (closed ? rev(darts.back()) : -1);
      visits[v].push_back({w, in, darts[i]});
      cut.push_back(edge_of(darts[i]));
    }
    if (!closed) {
      if (seen[last]) throw std::invalid_argument("walk is not simple");
      visits[last].push_back({w, rev(darts.back()), -1});
    }
  }

  for (int v = 0; v < s.num_vertices(); ++v) {
    const auto& vs = visits[v];
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        const Visit& a = vs[i];
        const Visit& b = vs[j];
        if (a.in < 0 || a.out < 0 || b.in < 0 || b.out < 0) continue;
        if (a.in == b.in || a.in == b.out || a.out == b.in || a.out == b.out) continue;
        const int ai = s.rotation_index(a.in), ao = s.rotation_index(a.out);
        const int bi = s.rotation_index(b.in), bo = s.rotation_index(b.out);
        if (cyclic_between(ai, bi, ao) != cyclic_between(ai, bo, ao))
          throw std::invalid_argument("walks cross");
      }
    }
  }

  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
  return slice_along_edges(s, cut);
}

}  // namespace homocut
