#include "homocut/homology.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace homocut {

// ---------------------------------------------------------------------------
// HomologySignature

HomologySignature HomologySignature::from_mask(int bits, std::uint64_t mask) {
  HomologySignature h(bits);
  for (int i = 0; i < bits && i < 64; ++i)
    if ((mask >> i) & 1U) h.flip(i);
  return h;
}

HomologySignature HomologySignature::from_hex(int bits, const std::string& hex) {
  HomologySignature h(bits);
  int bit = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
    const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
    int nibble;
    if (c >= '0' && c <= '9') nibble = c - '0';
    else if (c >= 'a' && c <= 'f') nibble = c - 'a' + 10;
    else throw std::invalid_argument("bad hex digit in class '" + hex + "'");
    for (int k = 0; k < 4; ++k, ++bit) {
      if (!((nibble >> k) & 1)) continue;
      if (bit >= bits) throw std::invalid_argument("class '" + hex + "' has more than beta bits");
      h.flip(bit);
    }
  }
  return h;
}

bool HomologySignature::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::uint64_t HomologySignature::to_mask() const {
  if (bits_ > 64) throw std::length_error("signature wider than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::string HomologySignature::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const int digits = std::max(1, (bits_ + 3) / 4);
  std::string out;
  for (int k = digits - 1; k >= 0; --k) {
    int nibble = 0;
    for (int b = 0; b < 4; ++b) {
      const int i = 4 * k + b;
      if (i < bits_ && test(i)) nibble |= 1 << b;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

HomologySignature& HomologySignature::operator^=(const HomologySignature& o) {
  if (o.bits_ != bits_) throw std::invalid_argument("signature length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// Tree-coforest decomposition and edge signatures

TreeCoforest tree_coforest(const Surface& s) {
  if (s.num_boundary() == 0) throw std::invalid_argument("tree_coforest needs a boundary face");
  const int m = s.num_edges();
  TreeCoforest tc;

  // Dual search from all dual boundary vertices at once.
  std::vector<Dart> parent_dart(s.num_faces(), -1);
  std::vector<char> reached(s.num_faces(), 0);
  std::deque<int> queue;
  for (int f : s.boundary_faces()) {
    reached[f] = 1;
    queue.push_back(f);
  }
  std::vector<char> in_coforest(m, 0);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (Dart d : s.face_darts(f)) {
      const int g = s.face_of(rev(d));
      if (reached[g]) continue;
      reached[g] = 1;
      parent_dart[g] = d;
      in_coforest[edge_of(d)] = 1;
      queue.push_back(g);
    }
  }

  // Primal spanning tree avoiding the coforest.
  std::vector<char> in_tree(m, 0), seen(s.num_vertices(), 0);
  queue.push_back(0);
  seen[0] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (Dart d : s.rotation(v)) {
      if (in_coforest[edge_of(d)]) continue;
      const int w = s.head(d);
      if (seen[w]) continue;
      seen[w] = 1;
      in_tree[edge_of(d)] = 1;
      queue.push_back(w);
    }
  }

  for (int e = 0; e < m; ++e) {
    if (in_tree[e]) tc.tree.push_back(e);
    else if (in_coforest[e]) tc.coforest.push_back(e);
    else tc.leftover.push_back(e);
  }

  for (int e : tc.leftover) {
    std::vector<Dart> down;  // root -> face_of(2e)
    for (int f = s.face_of(2 * e); parent_dart[f] >= 0; f = s.face_of(parent_dart[f]))
      down.push_back(parent_dart[f]);
    std::reverse(down.begin(), down.end());
    down.push_back(2 * e);
    for (int f = s.face_of(2 * e + 1); parent_dart[f] >= 0; f = s.face_of(parent_dart[f]))
      down.push_back(rev(parent_dart[f]));
    tc.dual_arcs.push_back(std::move(down));
  }
  return tc;
}

std::vector<HomologySignature> edge_signatures(const Surface& s, const TreeCoforest& tc) {
  const int beta = static_cast<int>(tc.leftover.size());
  std::vector<HomologySignature> sigs(s.num_edges(), HomologySignature(beta));
  for (int i = 0; i < beta; ++i)
    for (Dart d : tc.dual_arcs[i]) sigs[edge_of(d)].flip(i);
  return sigs;
}

std::vector<HomologySignature> edge_signatures(const Surface& s) {
  return edge_signatures(s, tree_coforest(s));
}

HomologySignature signature_of(std::span<const HomologySignature> sigs, const EvenSubgraph& h) {
  HomologySignature out(sigs.empty() ? 0 : sigs[0].size());
  for (int e : h.edges) out ^= sigs[e];
  return out;
}

HomologySignature signature_of(std::span<const HomologySignature> sigs, const ClosedWalk& w) {
  return signature_of(sigs, odd_edges(w.darts));
}

Surface homology_surface(const Surface& s) {
  if (s.num_boundary() > 0) return s;
  // Marked directly: a one-face surface keeps its homology as a ribbon graph.
  const int face0 = 0;
  return s.with_marked_faces(std::span<const int>(&face0, 1));
}

EvenSubgraph representative_of_class(const Surface& s, std::span<const HomologySignature> sigs,
                                     const HomologySignature& h) {
  const int n = s.num_vertices();
  const int beta = h.size();
  // BFS tree with prefix signatures.
  std::vector<Dart> parent(n, -1);
  std::vector<int> order;
  std::vector<HomologySignature> prefix(n, HomologySignature(beta));
  std::vector<char> seen(n, 0), tree_edge(s.num_edges(), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (Dart d : s.rotation(v)) {
      const int w = s.head(d);
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = d;
      tree_edge[edge_of(d)] = 1;
      prefix[w] = prefix[v] ^ sigs[edge_of(d)];
      queue.push_back(w);
    }
  }

  // Gaussian elimination over fundamental-cycle signatures.
  struct Row {
    HomologySignature sig;
    std::vector<int> combo;  // non-tree edges
    int pivot;
  };
  std::vector<Row> basis;
  for (int e = 0; e < s.num_edges() && static_cast<int>(basis.size()) < beta; ++e) {
    if (tree_edge[e]) continue;
    Row r{sigs[e] ^ prefix[s.edge(e).u] ^ prefix[s.edge(e).v], {e}, -1};
    for (const Row& b : basis) {
      if (r.sig.test(b.pivot)) {
        r.sig ^= b.sig;
        r.combo.insert(r.combo.end(), b.combo.begin(), b.combo.end());
      }
    }
    for (int i = 0; i < beta; ++i)
      if (r.sig.test(i)) { r.pivot = i; break; }
    if (r.pivot < 0) continue;
    for (Row& b : basis) {
      if (b.sig.test(r.pivot)) {
        b.sig ^= r.sig;
        b.combo.insert(b.combo.end(), r.combo.begin(), r.combo.end());
      }
    }
    basis.push_back(std::move(r));
  }

  HomologySignature rest = h;
  std::vector<int> chosen;
  for (const Row& b : basis) {
    if (rest.test(b.pivot)) {
      rest ^= b.sig;
      chosen.insert(chosen.end(), b.combo.begin(), b.combo.end());
    }
  }
  if (!rest.is_zero()) throw std::logic_error("class is not realized by any cycle");

  std::sort(chosen.begin(), chosen.end());
  std::vector<int> odd;
  for (std::size_t i = 0; i < chosen.size();) {
    std::size_t j = i;
    while (j < chosen.size() && chosen[j] == chosen[i]) ++j;
    if ((j - i) % 2) odd.push_back(chosen[i]);
    i = j;
  }
  // Tree edge above w is used iff w's subtree holds an odd number of endpoints.
  std::vector<char> parity(n, 0);
  for (int e : odd) {
    parity[s.edge(e).u] ^= 1;
    parity[s.edge(e).v] ^= 1;
  }
  EvenSubgraph out;
  out.edges = odd;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int w = *it;
    if (parent[w] < 0 || !parity[w]) continue;
    out.edges.push_back(edge_of(parent[w]));
    parity[s.tail(parent[w])] ^= 1;
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// ---------------------------------------------------------------------------
// Forest-cotree decomposition and the greedy system of arcs

std::vector<ForestPath> ForestCotree::shortest_paths() const {
  std::vector<ForestPath> out(sigma);
  out.insert(out.end(), tau.begin(), tau.end());
  return out;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

ForestPath forest_path(const Surface& s, const std::vector<Dart>& parent, int v) {
  ForestPath p;
  while (parent[v] >= 0) {
    p.darts.push_back(parent[v]);
    v = s.tail(parent[v]);
  }
  p.root = v;
  std::reverse(p.darts.begin(), p.darts.end());
  return p;
}

}  // namespace

ForestCotree forest_cotree_greedy(const Surface& s) {
  if (s.num_boundary() == 0) throw std::invalid_argument("forest_cotree_greedy needs a boundary face");
  if (!boundary_well_formed(s))
    throw std::invalid_argument("boundary cycles must be simple and vertex-disjoint; collar them first");
  const int n = s.num_vertices();
  const int m = s.num_edges();
  ForestCotree fc;

  std::vector<char> boundary_edge(m, 0);
  for (int e = 0; e < m; ++e) {
    if (s.is_boundary_edge(e)) {
      boundary_edge[e] = 1;
      fc.boundary_edges.push_back(e);
    }
  }

  constexpr Weight kUnset = -1;
  std::vector<Weight>& dist = fc.boundary_distance;
  dist.assign(n, kUnset);
  std::vector<Dart> parent(n, -1);
  std::vector<char> settled(n, 0);
  using Item = std::pair<Weight, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (int v = 0; v < n; ++v) {
    if (s.is_boundary_vertex(v)) {
      dist[v] = 0;
      heap.push({0, v});
    }
  }
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (settled[v] || d != dist[v]) continue;
    settled[v] = 1;
    for (Dart a : s.rotation(v)) {
      if (boundary_edge[edge_of(a)]) continue;
      const int w = s.head(a);
      if (settled[w]) continue;
      const Weight nd = d + s.weight(edge_of(a));
      if (dist[w] == kUnset || nd < dist[w]) {
        dist[w] = nd;
        parent[w] = a;
        heap.push({nd, w});
      } else if (nd == dist[w] && a < parent[w]) {
        parent[w] = a;
      }
    }
  }

  std::vector<char> in_forest(m, 0);
  for (int v = 0; v < n; ++v)
    if (parent[v] >= 0) in_forest[edge_of(parent[v])] = 1;
  for (int e = 0; e < m; ++e)
    if (in_forest[e]) fc.forest.push_back(e);

  fc.arc_length.assign(m, -1);
  std::vector<int> candidates;
  for (int e = 0; e < m; ++e) {
    if (in_forest[e] || boundary_edge[e]) continue;
    fc.arc_length[e] = dist[s.edge(e).u] + s.weight(e) + dist[s.edge(e).v];
    candidates.push_back(e);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](int a, int b) { return fc.arc_length[a] > fc.arc_length[b]; });

  std::vector<int> uf(s.num_faces());
  std::iota(uf.begin(), uf.end(), 0);
  for (int e : candidates) {
    const int a = find_root(uf, s.face_of(2 * e));
    const int b = find_root(uf, s.face_of(2 * e + 1));
    if (a != b) {
      uf[a] = b;
      fc.cotree.push_back(e);
    } else {
      fc.leftover.push_back(e);
    }
  }
  std::sort(fc.cotree.begin(), fc.cotree.end());
  std::sort(fc.leftover.begin(), fc.leftover.end());

  const int beta = surface_stats(s).betti;
  if (static_cast<int>(fc.leftover.size()) != beta)
    throw std::logic_error("forest-cotree decomposition left " + std::to_string(fc.leftover.size()) +
                           " edges, expected " + std::to_string(beta));

  for (int e : fc.leftover) {
    ForestPath sg = forest_path(s, parent, s.edge(e).u);
    ForestPath ta = forest_path(s, parent, s.edge(e).v);
    std::vector<Dart> arc = sg.darts;
    arc.push_back(2 * e);
    for (auto it = ta.darts.rbegin(); it != ta.darts.rend(); ++it) arc.push_back(rev(*it));
    fc.arcs.push_back(std::move(arc));
    fc.sigma.push_back(std::move(sg));
    fc.tau.push_back(std::move(ta));
  }
  return fc;
}

// ---------------------------------------------------------------------------
// Crossing parity vectors

namespace {

Dart boundary_corner(const Surface& s, int v) {
  for (Dart d : s.rotation(v))
    if (s.is_boundary_face(s.face_of(rev(d)))) return d;
  throw std::logic_error("arc endpoint is not a boundary vertex");
}

/// Darts crossed by the arc pushed off itself into the faces on the side
/// of its darts, with its endpoints kept inside the boundary corners.
std::vector<Dart> displaced_crossings(const Surface& s, const std::vector<Dart>& arc) {
  std::vector<Dart> crossed;
  const Dart first = arc.front();
  for (Dart d = s.succ(boundary_corner(s, s.tail(first))); d != first; d = s.succ(d))
    crossed.push_back(d);
  for (std::size_t j = 0; j + 1 < arc.size(); ++j)
    for (Dart d = s.succ(rev(arc[j])); d != arc[j + 1]; d = s.succ(d)) crossed.push_back(d);
  const Dart last_in = rev(arc.back());
  const Dart corner = boundary_corner(s, s.tail(last_in));
  for (Dart d = last_in; d != corner;) {
    d = s.succ(d);
    crossed.push_back(d);
  }
  return crossed;
}

}  // namespace

std::vector<std::vector<int>> crossing_counts(const Surface& s, const EvenSubgraph& h,
                                              const ForestCotree& fc) {
  const auto cycles = cycle_decomposition(s, h);
  std::vector<int> cycle_of_edge(s.num_edges(), -1);
  for (int c = 0; c < static_cast<int>(cycles.size()); ++c)
    for (Dart d : cycles[c].darts) cycle_of_edge[edge_of(d)] = c;
  const int beta = static_cast<int>(fc.arcs.size());
  std::vector<std::vector<int>> counts(cycles.size(), std::vector<int>(beta, 0));
  for (int i = 0; i < beta; ++i)
    for (Dart d : displaced_crossings(s, fc.arcs[i]))
      if (const int c = cycle_of_edge[edge_of(d)]; c >= 0) ++counts[c][i];
  return counts;
}

HomologySignature crossing_parity_vector(const Surface& s, const EvenSubgraph& h,
                                         const ForestCotree& fc) {
  const int beta = static_cast<int>(fc.arcs.size());
  HomologySignature out(beta);
  for (const auto& row : crossing_counts(s, h, fc))
    for (int i = 0; i < beta; ++i)
      if (row[i] % 2) out.flip(i);
  return out;
}

}  // namespace homocut
