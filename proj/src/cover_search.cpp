#include <algorithm>
#include <queue>

#include "homocut/cover.hpp"

namespace homocut {

namespace {

/// Dijkstra state over an implicit node set, reset in time proportional to
/// the number of nodes touched.
class Workspace {
 public:
  explicit Workspace(std::int64_t universe)
      : dist_(universe, kNoCycle), pred_dart_(universe, -1), pred_node_(universe, -1), done_(universe, 0) {}

  Weight dist(std::int64_t x) const { return dist_[x]; }
  Dart pred_dart(std::int64_t x) const { return pred_dart_[x]; }
  std::int64_t pred_node(std::int64_t x) const { return pred_node_[x]; }

  /// neighbors(x, emit) calls emit(dart, node) for each outgoing dart;
  /// settle(x, d) returns false to stop the search.
  template <class Neighbors, class Settle>
  void run(const Surface& s, std::int64_t source, Neighbors&& neighbors, Settle&& settle) {
    reset();
    touch(source);
    dist_[source] = 0;
    heap_.push({0, source});
    while (!heap_.empty()) {
      const auto [d, x] = heap_.top();
      heap_.pop();
      if (done_[x] || d != dist_[x]) continue;
      done_[x] = 1;
      if (!settle(x, d)) break;
      neighbors(x, [&](Dart a, std::int64_t y) {
        if (done_[y]) return;
        const Weight nd = d + s.weight(edge_of(a));
        if (nd < dist_[y]) {
          if (dist_[y] == kNoCycle) touch(y);
          dist_[y] = nd;
          pred_dart_[y] = a;
          pred_node_[y] = x;
          heap_.push({nd, y});
        }
      });
    }
  }

  /// Base darts of the shortest path found to x.
  std::vector<Dart> path_to(std::int64_t x) const {
    std::vector<Dart> out;
    for (; pred_node_[x] >= 0; x = pred_node_[x]) out.push_back(pred_dart_[x]);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  void touch(std::int64_t x) { touched_.push_back(x); }
  void reset() {
    for (std::int64_t x : touched_) {
      dist_[x] = kNoCycle;
      pred_dart_[x] = -1;
      pred_node_[x] = -1;
      done_[x] = 0;
    }
    touched_.clear();
    heap_ = {};
  }

  using Item = std::pair<Weight, std::int64_t>;
  std::vector<Weight> dist_;
  std::vector<Dart> pred_dart_;
  std::vector<std::int64_t> pred_node_;
  std::vector<char> done_;
  std::vector<std::int64_t> touched_;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap_;
};

/// Best candidate per class and where it came from.
struct Tally {
  std::vector<Weight> best;
  std::vector<std::int64_t> source;  // node the winning search started from
  std::vector<std::int64_t> target;
  std::vector<int> context;          // engine-specific (path index for sliced)

  explicit Tally(std::uint64_t classes)
      : best(classes, kNoCycle), source(classes, -1), target(classes, -1), context(classes, -1) {}

  /// Distance at which a search can no longer improve any wanted class.
  Weight horizon(const std::vector<std::uint64_t>& wanted, Weight bound) const {
    Weight worst = 0;
    for (std::uint64_t h : wanted) worst = std::max(worst, best[h]);
    return std::min(worst, bound == kNoCycle ? kNoCycle : bound + 1);
  }
};

std::vector<std::uint64_t> all_nonzero(std::uint64_t sheets) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t h = 1; h < sheets; ++h) out.push_back(h);
  return out;
}

void naive_search(const CoverGraph& c, const std::vector<std::uint64_t>& wanted, Weight bound, Tally& tally) {
  const Surface& s = c.base();
  Workspace ws(c.num_vertices());
  std::vector<char> is_wanted(c.sheets(), 0);
  for (std::uint64_t h : wanted) is_wanted[h] = 1;
  auto neighbors = [&](std::int64_t x, auto&& emit) {
    for (Dart a : s.rotation(c.project(x))) emit(a, c.head(x, a));
  };
  for (int v = 0; v < s.num_vertices(); ++v) {
    const Weight horizon = tally.horizon(wanted, bound);
    std::size_t remaining = wanted.size();
    const std::int64_t src = c.vertex(v, 0);
    ws.run(s, src, neighbors, [&](std::int64_t x, Weight d) {
      if (d >= horizon) return false;
      if (c.project(x) == v && is_wanted[c.sheet(x)]) {
        const std::uint64_t h = c.sheet(x);
        if (d < tally.best[h]) {
          tally.best[h] = d;
          tally.source[h] = src;
          tally.target[h] = x;
        }
        if (--remaining == 0) return false;
      }
      return true;
    });
  }
}

/// The cover cut open along the sheet-0 lift of one path starting on the
/// boundary. Interior path vertices get a second copy with id universe + i - 1.
class SlicedView {
 public:
  SlicedView(const CoverGraph& c, const ForestPath& path) : c_(c), s_(c.base()) {
    int v = path.root;
    std::uint64_t h = 0;
    verts_.push_back(v);
    sheets_.push_back(0);
    for (Dart d : path.darts) {
      h ^= c.mask(edge_of(d));
      v = s_.head(d);
      verts_.push_back(v);
      sheets_.push_back(h);
    }
    darts_ = path.darts;
    for (std::size_t i = 0; i < verts_.size(); ++i) index_.push_back({c.vertex(verts_[i], sheets_[i]), static_cast<int>(i)});
    std::sort(index_.begin(), index_.end());
  }

  int length() const { return static_cast<int>(darts_.size()); }
  int vertex_at(int i) const { return verts_[i]; }
  std::uint64_t sheet_at(int i) const { return sheets_[i]; }
  bool interior(int i) const { return i > 0 && i < length(); }
  std::int64_t plus(int i) const { return c_.vertex(verts_[i], sheets_[i]); }
  std::int64_t minus(int i) const { return c_.num_vertices() + i - 1; }
  std::int64_t universe() const { return c_.num_vertices() + std::max(0, length() - 1); }

  /// Path index of a cover vertex, or -1.
  int path_index(std::int64_t x) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<std::int64_t, int>{x, -1});
    return (it != index_.end() && it->first == x) ? it->second : -1;
  }

  template <class Emit>
  void neighbors(std::int64_t x, Emit&& emit) const {
    int i;
    bool minus_side = false;
    if (x >= c_.num_vertices()) {
      i = static_cast<int>(x - c_.num_vertices()) + 1;
      minus_side = true;
    } else {
      i = path_index(x);
    }
    if (i < 0) {
      for (Dart a : s_.rotation(c_.project(x))) emit(a, resolve(c_.head(x, a), rev(a)));
      return;
    }
    const Dart out = i < length() ? darts_[i] : -1;
    const Dart in = i > 0 ? rev(darts_[i - 1]) : -1;
    for (Dart a : s_.rotation(verts_[i])) {
      if (a == out || a == in) {
        const int j = a == out ? i + 1 : i - 1;
        if (!interior(j)) {
          emit(a, plus(j));
        } else if (interior(i)) {
          emit(a, minus_side ? minus(j) : plus(j));
        } else {
          emit(a, plus(j));
          emit(a, minus(j));
        }
        continue;
      }
      if (interior(i) && on_plus_side(i, a) == minus_side) continue;
      emit(a, resolve(c_.head(plus(i), a), rev(a)));
    }
  }

 private:
  bool on_plus_side(int i, Dart a) const {
    const int lo = s_.rotation_index(rev(darts_[i - 1]));
    const int hi = s_.rotation_index(darts_[i]);
    const int x = s_.rotation_index(a);
    return lo < hi ? (lo < x && x < hi) : (x > lo || x < hi);
  }

  std::int64_t resolve(std::int64_t y, Dart arriving) const {
    const int j = path_index(y);
    if (j < 0 || !interior(j) || on_plus_side(j, arriving)) return y;
    return minus(j);
  }

  const CoverGraph& c_;
  const Surface& s_;
  std::vector<int> verts_;
  std::vector<std::uint64_t> sheets_;
  std::vector<Dart> darts_;
  std::vector<std::pair<std::int64_t, int>> index_;
};

void sliced_search_well_formed(const CoverGraph& c, const std::vector<ForestPath>& paths,
                               const std::vector<std::uint64_t>& wanted, Weight bound, Tally& tally) {
  const Surface& s = c.base();
  std::vector<char> is_wanted(c.sheets(), 0);
  for (std::uint64_t h : wanted) is_wanted[h] = 1;
  std::int64_t universe = c.num_vertices();
  for (const auto& p : paths) universe = std::max<std::int64_t>(universe, c.num_vertices() + p.darts.size());
  Workspace ws(universe);

  for (int p = 0; p < static_cast<int>(paths.size()); ++p) {
    const SlicedView view(c, paths[p]);
    auto neighbors = [&](std::int64_t x, auto&& emit) { view.neighbors(x, emit); };
    for (int i = 0; i <= view.length(); ++i) {
      std::vector<std::int64_t> sources{view.plus(i)};
      if (view.interior(i)) sources.push_back(view.minus(i));
      const int v = view.vertex_at(i);
      const std::uint64_t h0 = view.sheet_at(i);
      for (std::int64_t src : sources) {
        const Weight horizon = tally.horizon(wanted, bound);
        std::size_t remaining = wanted.size();
        ws.run(s, src, neighbors, [&](std::int64_t x, Weight d) {
          if (d >= horizon) return false;
          if (x < c.num_vertices() && c.project(x) == v && view.path_index(x) < 0) {
            const std::uint64_t h = c.sheet(x) ^ h0;
            if (is_wanted[h]) {
              if (d < tally.best[h]) {
                tally.best[h] = d;
                tally.source[h] = src;
                tally.target[h] = x;
                tally.context[h] = p;
              }
              if (--remaining == 0) return false;
            }
          }
          return true;
        });
      }
    }
  }
}

ClosedWalk rebuild_naive(const CoverGraph& c, std::int64_t source, std::int64_t target) {
  const Surface& s = c.base();
  Workspace ws(c.num_vertices());
  auto neighbors = [&](std::int64_t x, auto&& emit) {
    for (Dart a : s.rotation(c.project(x))) emit(a, c.head(x, a));
  };
  ws.run(s, source, neighbors, [&](std::int64_t x, Weight) { return x != target; });
  return ClosedWalk{ws.path_to(target)};
}

ClosedWalk rebuild_sliced(const CoverGraph& c, const ForestPath& path, std::int64_t source, std::int64_t target) {
  const Surface& s = c.base();
  const SlicedView view(c, path);
  Workspace ws(view.universe());
  auto neighbors = [&](std::int64_t x, auto&& emit) { view.neighbors(x, emit); };
  ws.run(s, source, neighbors, [&](std::int64_t x, Weight) { return x != target; });
  return ClosedWalk{ws.path_to(target)};
}

ClassCycles search_well_formed(const CoverGraph& c, const std::vector<std::uint64_t>& wanted,
                               const CycleSearchOptions& opt) {
  ClassCycles out;
  out.weight.assign(c.sheets(), kNoCycle);
  out.walk.resize(c.sheets());
  out.weight[0] = 0;
  Tally tally(c.sheets());
  if (opt.mode == SearchMode::naive) {
    naive_search(c, wanted, opt.bound, tally);
    for (std::uint64_t h : wanted) {
      if (tally.best[h] == kNoCycle || tally.best[h] > opt.bound) continue;
      out.weight[h] = tally.best[h];
      out.walk[h] = rebuild_naive(c, tally.source[h], tally.target[h]);
    }
    return out;
  }
  const auto paths = c.beta() == 0 ? std::vector<ForestPath>{} : forest_cotree_greedy(c.base()).shortest_paths();
  sliced_search_well_formed(c, paths, wanted, opt.bound, tally);
  for (std::uint64_t h : wanted) {
    if (tally.best[h] == kNoCycle || tally.best[h] > opt.bound) continue;
    out.weight[h] = tally.best[h];
    out.walk[h] = rebuild_sliced(c, paths[tally.context[h]], tally.source[h], tally.target[h]);
  }
  return out;
}

ClassCycles search(const CoverGraph& c, const std::vector<std::uint64_t>& wanted, const CycleSearchOptions& opt) {
  if (opt.mode == SearchMode::naive || c.beta() == 0 || boundary_well_formed(c.base()))
    return search_well_formed(c, wanted, opt);

  // Sliced search needs simple disjoint boundary cycles: search a collared
  // copy and translate classes through its signature basis.
  const Surface& s = c.base();
  const CollarResult col = collar_boundaries(s, s.total_weight() + 1);
  const CoverGraph inner(col.surface, edge_signatures(col.surface));
  std::vector<std::uint64_t> image(c.beta());
  for (int i = 0; i < c.beta(); ++i) {
    const auto unit = HomologySignature::from_mask(c.beta(), std::uint64_t{1} << i);
    const EvenSubgraph rep = representative_of_class(s, c.signatures(), unit);
    image[i] = signature_of(inner.signatures(), rep).to_mask();
  }
  auto translate = [&](std::uint64_t h) {
    std::uint64_t out = 0;
    for (int i = 0; i < c.beta(); ++i)
      if ((h >> i) & 1U) out ^= image[i];
    return out;
  };
  std::vector<std::uint64_t> inner_wanted;
  for (std::uint64_t h : wanted) inner_wanted.push_back(translate(h));
  const ClassCycles found = search_well_formed(inner, inner_wanted, opt);

  ClassCycles out;
  out.weight.assign(c.sheets(), kNoCycle);
  out.walk.resize(c.sheets());
  out.weight[0] = 0;
  for (std::uint64_t h : wanted) {
    const std::uint64_t t = translate(h);
    if (found.weight[t] == kNoCycle) continue;
    for (Dart d : found.walk[t].darts)
      if (edge_of(d) >= s.num_edges()) throw std::logic_error("shortest cycle left the original graph");
    out.weight[h] = found.weight[t];
    out.walk[h] = found.walk[t];
  }
  return out;
}

}  // namespace

ClassCycles min_cycles_all_classes(const CoverGraph& c, const CycleSearchOptions& opt) {
  return search(c, all_nonzero(c.sheets()), opt);
}

ClosedWalk min_cycle_in_class(const CoverGraph& c, const HomologySignature& h, SearchMode mode) {
  if (h.size() != c.beta()) throw std::invalid_argument("class has the wrong number of bits");
  if (h.is_zero()) return {};
  const std::uint64_t mask = h.to_mask();
  CycleSearchOptions opt;
  opt.mode = mode;
  const ClassCycles found = search(c, {mask}, opt);
  if (found.weight[mask] == kNoCycle) throw std::logic_error("class has no closed walk");
  return found.walk[mask];
}

}  // namespace homocut
