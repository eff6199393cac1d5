#include "homocut/oracles.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace homocut {

FlowCut oracle_max_flow_min_cut(int n, std::span<const Edge> edges, int s, int t) {
  if (s == t) throw std::invalid_argument("source and sink must differ");
  if (s < 0 || t < 0 || s >= n || t >= n) throw std::invalid_argument("terminal out of range");
  // Arc 2e runs u -> v, arc 2e+1 runs v -> u; each is the other's residual twin.
  const int m = static_cast<int>(edges.size());
  std::vector<Weight> cap(2 * m);
  std::vector<std::vector<int>> out(n);
  for (int e = 0; e < m; ++e) {
    cap[2 * e] = cap[2 * e + 1] = edges[e].weight;
    if (edges[e].u == edges[e].v) continue;
    out[edges[e].u].push_back(2 * e);
    out[edges[e].v].push_back(2 * e + 1);
  }
  auto head = [&](int a) { return (a & 1) ? edges[a >> 1].u : edges[a >> 1].v; };

  FlowCut result;
  std::vector<int> via(n);
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::vector<char> seen(n, 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      const int x = queue.front();
      queue.pop_front();
      for (int a : out[x]) {
        const int y = head(a);
        if (seen[y] || cap[a] == 0) continue;
        seen[y] = 1;
        via[y] = a;
        queue.push_back(y);
      }
    }
    if (!seen[t]) {
      for (int v = 0; v < n; ++v)
        if (seen[v]) result.source_side.push_back(v);
      for (int e = 0; e < m; ++e)
        if (seen[edges[e].u] != seen[edges[e].v]) result.edges.push_back(e);
      return result;
    }
    Weight push = std::numeric_limits<Weight>::max();
    for (int y = t; y != s; y = head(via[y] ^ 1)) push = std::min(push, cap[via[y]]);
    for (int y = t; y != s; y = head(via[y] ^ 1)) {
      cap[via[y]] -= push;
      cap[via[y] ^ 1] += push;
    }
    result.value += push;
  }
}

PartitionCut oracle_global_min_cut(int n, std::span<const Edge> edges) {
  if (n < 2) throw std::invalid_argument("global cut needs at least two vertices");
  std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    w[e.u][e.v] += e.weight;
    w[e.v][e.u] += e.weight;
  }
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) members[v] = {v};
  std::vector<int> alive(n);
  std::iota(alive.begin(), alive.end(), 0);

  PartitionCut best;
  best.value = std::numeric_limits<Weight>::max();
  while (alive.size() > 1) {
    std::vector<Weight> key(n, 0);
    std::vector<char> added(n, 0);
    int prev = -1, last = -1;
    for (std::size_t step = 0; step < alive.size(); ++step) {
      int pick = -1;
      for (int v : alive)
        if (!added[v] && (pick < 0 || key[v] > key[pick])) pick = v;
      if (pick < 0) break;
      added[pick] = 1;
      prev = last;
      last = pick;
      for (int v : alive)
        if (!added[v]) key[v] += w[pick][v];
    }
    if (key[last] < best.value) {
      best.value = key[last];
      best.side = members[last];
    }
    for (int v : alive) {
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  std::sort(best.side.begin(), best.side.end());
  return best;
}

namespace {

Weight partition_weight(std::span<const Edge> edges, std::uint32_t side) {
  Weight total = 0;
  for (const Edge& e : edges)
    if (((side >> e.u) & 1U) != ((side >> e.v) & 1U)) total += e.weight;
  return total;
}

}  // namespace

Weight oracle_exhaustive_global_cut(int n, std::span<const Edge> edges) {
  if (n < 2 || n > 12) throw std::invalid_argument("exhaustive cut needs 2 <= n <= 12");
  Weight best = std::numeric_limits<Weight>::max();
  // Vertex n-1 stays on side 0; the other side must be non-empty.
  for (std::uint32_t side = 1; side < (1U << (n - 1)); ++side) best = std::min(best, partition_weight(edges, side));
  return best;
}

Weight oracle_exhaustive_st_cut(int n, std::span<const Edge> edges, int s, int t) {
  if (n < 2 || n > 12) throw std::invalid_argument("exhaustive cut needs 2 <= n <= 12");
  if (s == t) throw std::invalid_argument("source and sink must differ");
  Weight best = std::numeric_limits<Weight>::max();
  for (std::uint32_t side = 0; side < (1U << n); ++side)
    if (((side >> s) & 1U) && !((side >> t) & 1U)) best = std::min(best, partition_weight(edges, side));
  return best;
}

Weight oracle_shortest_cycle(int n, std::span<const Edge> edges) {
  const int m = static_cast<int>(edges.size());
  if (m > 24) throw std::invalid_argument("exhaustive cycle search needs m <= 24");
  Weight best = -1;
  std::vector<int> degree(n), parent(n);
  for (std::uint32_t set = 1; set < (1U << m); ++set) {
    std::fill(degree.begin(), degree.end(), 0);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    Weight total = 0;
    for (int e = 0; e < m; ++e) {
      if (!((set >> e) & 1U)) continue;
      degree[edges[e].u] += 1;
      degree[edges[e].v] += 1;
      parent[find(edges[e].u)] = find(edges[e].v);
      total += edges[e].weight;
    }
    if (best >= 0 && total >= best) continue;
    int root = -1;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (degree[v] == 0) continue;
      if (degree[v] != 2) ok = false;
      else if (root < 0) root = find(v);
      else if (find(v) != root) ok = false;
    }
    if (ok) best = total;
  }
  return best;
}

OracleInstance oracle_instance(const Surface& s) {
  return OracleInstance{s.num_vertices(), s.edges(), s.rotation_system(), s.boundary_representatives()};
}

OracleFaces oracle_faces(const OracleInstance& inst) {
  const int m = static_cast<int>(inst.edges.size());
  if (m > 64) throw std::invalid_argument("face masks need m <= 64");
  std::vector<int> pos(2 * m, -1);
  std::vector<int> tail(2 * m);
  for (int e = 0; e < m; ++e) {
    tail[2 * e] = inst.edges[e].u;
    tail[2 * e + 1] = inst.edges[e].v;
  }
  for (const auto& rot : inst.rotation)
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) pos[rot[i]] = i;
  auto succ = [&](Dart d) {
    const auto& rot = inst.rotation[tail[d]];
    return rot[(pos[d] + 1) % rot.size()];
  };
  std::vector<char> marked(2 * m, 0);
  for (Dart d : inst.boundary_darts) marked[d] = 1;

  OracleFaces out;
  std::vector<char> seen(2 * m, 0);
  for (Dart d0 = 0; d0 < 2 * m; ++d0) {
    if (seen[d0]) continue;
    std::uint64_t mask = 0;
    bool boundary = false;
    for (Dart d = d0; !seen[d]; d = succ(d ^ 1)) {
      seen[d] = 1;
      mask ^= std::uint64_t{1} << (d >> 1);
      boundary = boundary || marked[d];
    }
    (boundary ? out.boundary : out.interior).push_back(mask);
  }
  return out;
}

EvenClassOracle::EvenClassOracle(const OracleInstance& inst) : span_rows_(64, 0) {
  const int m = static_cast<int>(inst.edges.size());
  if (m > kMaxEdges) throw std::invalid_argument("exhaustive class oracle needs m <= 22");
  for (const Edge& e : inst.edges) weights_.push_back(e.weight);

  for (std::uint64_t row : oracle_faces(inst).interior) {
    row = reduce(row);
    if (row != 0) span_rows_[63 - std::countl_zero(row)] = row;
  }

  // Fundamental cycles of a BFS tree span the cycle space.
  std::vector<std::vector<std::pair<int, int>>> adj(inst.n);
  for (int e = 0; e < m; ++e) {
    adj[inst.edges[e].u].push_back({inst.edges[e].v, e});
    adj[inst.edges[e].v].push_back({inst.edges[e].u, e});
  }
  std::vector<int> parent_edge(inst.n, -1), depth(inst.n, -1);
  std::vector<char> tree(m, 0);
  for (int r = 0; r < inst.n; ++r) {
    if (depth[r] >= 0) continue;
    depth[r] = 0;
    std::deque<int> queue{r};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (auto [y, e] : adj[x]) {
        if (depth[y] >= 0) continue;
        depth[y] = depth[x] + 1;
        parent_edge[y] = e;
        tree[e] = 1;
        queue.push_back(y);
      }
    }
  }
  auto up = [&](int x) {
    const Edge& e = inst.edges[parent_edge[x]];
    return e.u == x ? e.v : e.u;
  };
  std::vector<std::uint64_t> basis;
  for (int e = 0; e < m; ++e) {
    if (tree[e]) continue;
    std::uint64_t mask = std::uint64_t{1} << e;
    int a = inst.edges[e].u, b = inst.edges[e].v;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      mask ^= std::uint64_t{1} << parent_edge[a];
      a = up(a);
    }
    basis.push_back(mask);
  }

  auto weight_of_mask = [&](std::uint64_t mask) {
    Weight total = 0;
    for (; mask; mask &= mask - 1) total += weights_[std::countr_zero(mask)];
    return total;
  };
  auto record = [&](std::uint64_t mask) {
    const std::uint64_t key = reduce(mask);
    const Weight w = weight_of_mask(mask);
    auto [it, inserted] = best_.try_emplace(key, w, mask);
    if (!inserted && (w < it->second.first || (w == it->second.first && mask < it->second.second)))
      it->second = {w, mask};
  };
  std::uint64_t mask = 0;
  record(mask);
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    mask ^= basis[std::countr_zero(i)];
    record(mask);
  }
}

std::uint64_t EvenClassOracle::reduce(std::uint64_t mask) const {
  for (int b = 63; b >= 0; --b)
    if (((mask >> b) & 1U) && span_rows_[b]) mask ^= span_rows_[b];
  return mask;
}

EvenOracleResult EvenClassOracle::minimum(std::span<const int> representative) const {
  std::uint64_t mask = 0;
  for (int e : representative) mask ^= std::uint64_t{1} << e;
  auto it = best_.find(reduce(mask));
  if (it == best_.end()) throw std::invalid_argument("representative is not an even subgraph");
  EvenOracleResult out;
  out.weight = it->second.first;
  for (std::uint64_t x = it->second.second; x; x &= x - 1) out.edges.push_back(std::countr_zero(x));
  return out;
}

bool EvenClassOracle::null_homologous(std::span<const int> edges) const {
  std::uint64_t mask = 0;
  for (int e : edges) mask ^= std::uint64_t{1} << e;
  return reduce(mask) == 0;
}

CrossingDiagnostic crossing_diagnostic(const Surface& s, const EvenSubgraph& h, const ForestCotree& fc) {
  CrossingDiagnostic out;
  const SurfaceStats st = surface_stats(s);
  out.reference = 12 * st.genus + 4 * st.boundaries - 5;
  const auto counts = crossing_counts(s, h, fc);
  for (std::size_t i = 0; i < fc.arcs.size(); ++i) {
    int total = 0;
    for (const auto& row : counts) total += row[i];
    out.max_crossings = std::max(out.max_crossings, total);
  }
  return out;
}

OracleReport make_report(std::string instance, std::string quantity, Weight oracle_value, Weight solver_value) {
  return OracleReport{std::move(instance), std::move(quantity), oracle_value, solver_value,
                      oracle_value == solver_value};
}

}  // namespace homocut
