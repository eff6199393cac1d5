#include <algorithm>
#include <numeric>

#include "homocut/cover.hpp"

namespace homocut {

namespace {

Weight add_saturated(Weight a, Weight b) {
  if (a == kNoCycle || b == kNoCycle || a > kNoCycle - b) return kNoCycle;
  return a + b;
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<std::uint64_t> ClassTable::chosen_classes(std::uint64_t h) const {
  std::vector<std::uint64_t> out;
  for (int k = max_components; k > 0 && h != 0; --k) {
    const std::uint64_t pick = choice[k][h];
    if (pick == 0) continue;
    out.push_back(pick);
    h ^= pick;
  }
  return out;
}

ClassTable all_classes(const CoverGraph& c, const CycleSearchOptions& opt) {
  ClassTable t;
  t.beta = c.beta();
  const SurfaceStats st = surface_stats(c.base());
  t.max_components = std::max(1, st.genus + st.boundaries - 1);
  t.cycles = min_cycles_all_classes(c, opt);

  const std::uint64_t sheets = c.sheets();
  std::vector<std::uint64_t> usable;
  for (std::uint64_t h = 1; h < sheets; ++h)
    if (t.cycles.weight[h] != kNoCycle) usable.push_back(h);

  t.dp.assign(t.max_components + 1, std::vector<Weight>(sheets, kNoCycle));
  t.choice.assign(t.max_components + 1, std::vector<std::uint64_t>(sheets, 0));
  t.dp[0][0] = 0;
  for (int k = 1; k <= t.max_components; ++k) {
    const auto& prev = t.dp[k - 1];
    auto& cur = t.dp[k];
    for (std::uint64_t h = 0; h < sheets; ++h) {
      cur[h] = prev[h];
      for (std::uint64_t h2 : usable) {
        const Weight cand = add_saturated(prev[h ^ h2], t.cycles.weight[h2]);
        if (cand < cur[h]) {
          cur[h] = cand;
          t.choice[k][h] = h2;
        }
      }
    }
  }
  return t;
}

EvenSubgraph prune_dependent_components(const Surface& s, std::span<const HomologySignature> sigs,
                                        const EvenSubgraph& h) {
  const int beta = sigs.empty() ? 0 : sigs[0].size();
  std::vector<int> edges = h.edges;
  while (true) {
    std::vector<int> parent(s.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    for (int e : edges) parent[find_root(parent, s.edge(e).u)] = find_root(parent, s.edge(e).v);
    std::vector<int> root_ids;
    for (int e : edges) root_ids.push_back(find_root(parent, s.edge(e).u));
    std::vector<int> roots = root_ids;
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

    const int k = static_cast<int>(roots.size());
    std::vector<HomologySignature> comp_sig(k, HomologySignature(beta));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int c = static_cast<int>(std::lower_bound(roots.begin(), roots.end(), root_ids[i]) - roots.begin());
      comp_sig[c] ^= sigs[edges[i]];
    }

    // Elimination that remembers which components each row combines.
    struct Row {
      HomologySignature sig;
      std::vector<char> uses;
      int pivot;
    };
    std::vector<Row> basis;
    std::vector<char> drop;
    for (int c = 0; c < k && drop.empty(); ++c) {
      Row r{comp_sig[c], std::vector<char>(k, 0), -1};
      r.uses[c] = 1;
      for (const Row& b : basis) {
        if (r.sig.test(b.pivot)) {
          r.sig ^= b.sig;
          for (int j = 0; j < k; ++j) r.uses[j] ^= b.uses[j];
        }
      }
      for (int i = 0; i < beta; ++i)
        if (r.sig.test(i)) { r.pivot = i; break; }
      if (r.pivot < 0) {
        drop = r.uses;
        break;
      }
      basis.push_back(std::move(r));
    }
    if (drop.empty()) break;
    std::vector<int> kept;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const int c = static_cast<int>(std::lower_bound(roots.begin(), roots.end(), root_ids[i]) - roots.begin());
      if (!drop[c]) kept.push_back(edges[i]);
    }
    edges = std::move(kept);
  }
  return EvenSubgraph{edges};
}

std::optional<EvenSubgraph> even_subgraph_from_table(const CoverGraph& c, const ClassTable& t, std::uint64_t h) {
  if (h >= c.sheets()) throw std::invalid_argument("class out of range");
  if (t.value(h) == kNoCycle) return std::nullopt;
  EvenSubgraph acc;
  for (std::uint64_t pick : t.chosen_classes(h))
    acc = symmetric_difference(acc, odd_edges(t.cycles.walk[pick].darts));
  return prune_dependent_components(c.base(), c.signatures(), acc);
}

EvenSubgraph min_even_in_class(const CoverGraph& c, const HomologySignature& h, const CycleSearchOptions& opt) {
  if (h.size() != c.beta()) throw std::invalid_argument("class has the wrong number of bits");
  if (h.is_zero()) return {};
  const ClassTable t = all_classes(c, opt);
  auto out = even_subgraph_from_table(c, t, h.to_mask());
  if (!out) throw std::logic_error("no even subgraph within the search bound");
  return *out;
}

}  // namespace homocut
