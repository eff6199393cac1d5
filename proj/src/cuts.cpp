#include "homocut/cuts.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <queue>

namespace homocut {

namespace {

Weight collar_weight(const Surface& s) { return s.total_weight() + 1; }

/// Faces reachable from f without crossing the given edges.
std::vector<char> face_side(const Surface& s, int f, std::span<const int> cut) {
  std::vector<char> blocked(s.num_edges(), 0), seen(s.num_faces(), 0);
  for (int e : cut) blocked[e] = 1;
  std::deque<int> queue{f};
  seen[f] = 1;
  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (Dart d : s.face_darts(g)) {
      if (blocked[edge_of(d)]) continue;
      const int h = s.face_of(rev(d));
      if (!seen[h]) {
        seen[h] = 1;
        queue.push_back(h);
      }
    }
  }
  return seen;
}

Weight edge_weight_sum(const Surface& s, std::span<const int> edges) {
  Weight total = 0;
  for (int e : edges) total += s.weight(e);
  return total;
}

}  // namespace

std::vector<char> reachable_without(const Surface& s, int source, std::span<const int> removed) {
  std::vector<char> blocked(s.num_edges(), 0), seen(s.num_vertices(), 0);
  for (int e : removed) blocked[e] = 1;
  std::deque<int> queue{source};
  seen[source] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (Dart d : s.rotation(v)) {
      if (blocked[edge_of(d)]) continue;
      const int w = s.head(d);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

std::optional<EvenSubgraph> min_face_separator(const Surface& s, int fA, int fB, Weight cap, const CutOptions& opt) {
  if (fA < 0 || fB < 0 || fA >= s.num_faces() || fB >= s.num_faces()) throw std::invalid_argument("face out of range");
  if (fA == fB) throw std::invalid_argument("faces to separate must differ");
  if (s.is_boundary_face(fA) || s.is_boundary_face(fB)) throw std::invalid_argument("faces to separate must not be boundary");

  // The boundary of fA: edges with fA on exactly one side.
  std::vector<int> around;
  for (Dart d : s.face_darts(fA))
    if (s.face_of(rev(d)) != fA) around.push_back(edge_of(d));
  std::sort(around.begin(), around.end());
  const Weight trivial = edge_weight_sum(s, around);

  // Marked directly so that a surface with only these two faces still works.
  const int removed[] = {fA, fB};
  const Surface holed = s.with_marked_faces(removed);
  const CollarResult col = collar_boundaries(holed, collar_weight(s));
  const CoverGraph cover(col.surface, edge_signatures(col.surface));
  const HomologySignature target = signature_of(cover.signatures(), EvenSubgraph{around});

  // Every component of an optimum weighs at most the boundary of fA itself.
  CycleSearchOptions search;
  search.mode = opt.mode;
  search.bound = std::min(trivial, cap);
  const ClassTable table = all_classes(cover, search);
  auto found = even_subgraph_from_table(cover, table, target.to_mask());
  if (!found || weight_of(col.surface, *found) > cap) return std::nullopt;
  for (int e : found->edges)
    if (e >= s.num_edges()) throw std::logic_error("separator uses a collar edge");
  if (face_side(s, fA, found->edges)[fB]) throw std::logic_error("separator does not separate the faces");
  return found;
}

EvenSubgraph min_face_separator(const Surface& s, int fA, int fB, const CutOptions& opt) {
  auto out = min_face_separator(s, fA, fB, kNoCycle, opt);
  if (!out) throw std::logic_error("no separator found");
  return *out;
}

CutResult min_st_cut(const Surface& s, int source, int sink, const CutOptions& opt) {
  const int n = s.num_vertices();
  if (source < 0 || sink < 0 || source >= n || sink >= n) throw std::invalid_argument("terminal out of range");
  if (source == sink) throw std::invalid_argument("terminals must differ");
  const Surface g = s.filled();
  const DualResult dual = build_dual(g);
  const EvenSubgraph x = min_face_separator(dual.dual, dual.map.vertex_to_dual_face[source],
                                            dual.map.vertex_to_dual_face[sink], opt);
  CutResult out;
  out.edges = x.edges;
  out.weight = weight_of(g, x);
  out.provenance = "st-duality";
  const auto side = reachable_without(g, source, out.edges);
  if (side[sink]) throw std::logic_error("cut does not separate the terminals");
  for (int v = 0; v < n; ++v) (side[v] ? out.side_s : out.side_t).push_back(v);
  return out;
}

std::optional<WeightedCycle> shortest_weighted_cycle(int n, std::span<const Edge> edges, std::span<const char> usable) {
  const int m = static_cast<int>(edges.size());
  auto ok = [&](int e) { return usable.empty() || usable[e]; };
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge)
  std::vector<int> order;
  for (int e = 0; e < m; ++e) {
    if (!ok(e)) continue;
    if (edges[e].weight < 0) throw std::invalid_argument("negative edge weight");
    adj[edges[e].u].push_back({edges[e].v, e});
    if (edges[e].u != edges[e].v) adj[edges[e].v].push_back({edges[e].u, e});
    order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return edges[a].weight < edges[b].weight; });

  constexpr Weight kFar = kNoCycle;
  std::vector<Weight> dist(n, kFar);
  std::vector<int> pred_edge(n, -1);
  std::vector<char> done(n, 0);
  std::vector<int> touched;
  using Item = std::pair<Weight, int>;

  std::optional<WeightedCycle> best;
  for (int e : order) {
    const Weight w = edges[e].weight;
    if (best && w >= best->weight) break;
    const int u = edges[e].u, v = edges[e].v;
    if (u == v) {
      best = WeightedCycle{w, {e}};
      continue;
    }
    const Weight limit = best ? best->weight - w : kFar;
    for (int x : touched) {
      dist[x] = kFar;
      pred_edge[x] = -1;
      done[x] = 0;
    }
    touched.clear();
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[u] = 0;
    touched.push_back(u);
    heap.push({0, u});
    while (!heap.empty()) {
      const auto [d, x] = heap.top();
      heap.pop();
      if (done[x] || d != dist[x]) continue;
      if (d >= limit) break;
      done[x] = 1;
      if (x == v) break;
      for (auto [y, f] : adj[x]) {
        if (f == e || done[y]) continue;
        const Weight nd = d + edges[f].weight;
        if (nd < dist[y]) {
          if (dist[y] == kFar) touched.push_back(y);
          dist[y] = nd;
          pred_edge[y] = f;
          heap.push({nd, y});
        }
      }
    }
    if (!done[v]) continue;
    WeightedCycle cyc{dist[v] + w, {e}};
    for (int x = v; x != u;) {
      const int f = pred_edge[x];
      cyc.edges.push_back(f);
      x = edges[f].u == x ? edges[f].v : edges[f].u;
    }
    std::sort(cyc.edges.begin(), cyc.edges.end());
    best = std::move(cyc);
  }
  return best;
}

std::optional<EvenSubgraph> global_separating_contractible(const Surface& s1) {
  if (s1.num_boundary() != 1) throw std::invalid_argument("expected exactly one boundary face");
  const int m = s1.num_edges();
  const CollarResult col = collar_boundaries(s1, collar_weight(s1));
  const Surface& c = col.surface;
  const ForestCotree fc = forest_cotree_greedy(c);

  std::vector<int> arc_edges;
  for (const auto& arc : fc.arcs)
    for (Dart d : arc) arc_edges.push_back(edge_of(d));
  std::sort(arc_edges.begin(), arc_edges.end());
  arc_edges.erase(std::unique(arc_edges.begin(), arc_edges.end()), arc_edges.end());
  const SliceResult sliced = slice_along_edges(c, arc_edges);
  const Surface& disk = sliced.surface;

  // Copies of one arc edge; without arcs the disk is the collared surface
  // and one rim edge of its boundary is forbidden instead.
  std::vector<int> forbidden;
  if (!arc_edges.empty()) {
    forbidden = sliced.edge_copies[arc_edges.front()];
  } else {
    for (int e = 0; e < c.num_edges(); ++e) {
      if (c.is_boundary_edge(e)) {
        forbidden = sliced.edge_copies[e];
        break;
      }
    }
  }

  std::optional<WeightedCycle> best;
  for (int banned : forbidden) {
    std::vector<char> usable(disk.num_edges(), 1);
    usable[banned] = 0;
    auto cyc = shortest_weighted_cycle(disk.num_vertices(), disk.edges(), usable);
    if (cyc && (!best || cyc->weight < best->weight)) best = std::move(cyc);
  }
  if (!best) return std::nullopt;

  std::vector<Dart> projected;
  for (int e : best->edges) {
    const int orig = sliced.edge_origin[e];
    if (orig >= m) return std::nullopt;
    projected.push_back(2 * orig);
  }
  EvenSubgraph out = odd_edges(projected);
  if (out.edges.empty()) return std::nullopt;
  return out;
}

std::optional<ClassSeparator> global_separating_noncontractible(const Surface& s1, const CutOptions& opt) {
  if (s1.num_boundary() != 1) throw std::invalid_argument("expected exactly one boundary face");
  const SurfaceStats st = surface_stats(s1);
  if (st.genus == 0) return std::nullopt;
  const int hole = s1.boundary_faces().front();
  const Surface closed = s1.filled();

  const CoverGraph cover(s1);
  CycleSearchOptions search;
  search.mode = opt.mode;
  const ClassTable table = all_classes(cover, search);

  std::optional<ClassSeparator> best;
  std::vector<char> tried(s1.num_faces(), 0);
  int candidates = 0;
  for (std::uint64_t h = 1; h < cover.sheets(); ++h) {
    const auto hh = even_subgraph_from_table(cover, table, h);
    if (!hh || hh->edges.empty()) throw std::logic_error("missing minimum even subgraph for a class");
    const int e = hh->edges.front();
    for (int f : {closed.face_of(2 * e), closed.face_of(2 * e + 1)}) {
      if (f == hole || tried[f]) continue;
      tried[f] = 1;
      ++candidates;
      const Weight cap = best ? weight_of(closed, best->subgraph) - 1 : kNoCycle;
      if (cap < 0) continue;
      auto sep = min_face_separator(closed, hole, f, cap, opt);
      if (sep) best = ClassSeparator{std::move(*sep), h, 0};
    }
  }
  if (best) best->candidates = candidates;
  return best;
}

CutResult global_min_cut(const Surface& s, int source, const CutOptions& opt) {
  const Surface g = s.filled();
  if (g.num_vertices() < 2) throw std::invalid_argument("global cut needs at least two vertices");
  if (source < 0 || source >= g.num_vertices()) throw std::invalid_argument("source out of range");
  const DualResult dual = build_dual(g);
  const int hole = dual.map.vertex_to_dual_face[source];
  const Surface s1 = remove_faces(dual.dual, std::span<const int>(&hole, 1));

  auto contractible = global_separating_contractible(s1);
  auto noncontractible = global_separating_noncontractible(s1, opt);

  CutResult out;
  if (contractible &&
      (!noncontractible || weight_of(g, *contractible) <= weight_of(g, noncontractible->subgraph))) {
    out.edges = contractible->edges;
    out.provenance = "global-contractible";
  } else if (noncontractible) {
    out.edges = noncontractible->subgraph.edges;
    out.provenance = "global-class " +
                     HomologySignature::from_mask(2 * surface_stats(s1).genus, noncontractible->cls).to_hex();
  } else {
    throw std::logic_error("neither global subroutine produced a cut");
  }
  out.weight = weight_of(g, EvenSubgraph{out.edges});
  const auto side = reachable_without(g, source, out.edges);
  for (int v = 0; v < g.num_vertices(); ++v) (side[v] ? out.side_s : out.side_t).push_back(v);
  if (out.side_t.empty()) throw std::logic_error("global cut does not disconnect the graph");
  return out;
}

}  // namespace homocut
