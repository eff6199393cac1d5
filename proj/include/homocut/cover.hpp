#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "homocut/homology.hpp"
#include "homocut/surface.hpp"

namespace homocut {

constexpr Weight kNoCycle = std::numeric_limits<Weight>::max();

/// Thrown when a cover would exceed the configured number of sheets.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest beta for which a cover is built: HOMOCUT_BETA_CAP or 20.
int beta_cap();

enum class SearchMode { naive, sliced };

struct CoverStats {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;       // including boundary faces
  std::int64_t boundaries = 0;
  std::int64_t components = 0;
  std::int64_t euler_characteristic = 0;  // vertices - edges + faces - boundaries
  std::int64_t genus = 0;
};

/// Z2-homology cover with vertices (v, h), stored implicitly as v * 2^beta + h.
class CoverGraph {
 public:
  /// Signatures are computed from tree_coforest(s). s needs a boundary face.
  explicit CoverGraph(const Surface& s);
  CoverGraph(const Surface& s, std::vector<HomologySignature> sigs);

  const Surface& base() const { return base_; }
  const std::vector<HomologySignature>& signatures() const { return sigs_; }
  int beta() const { return beta_; }
  std::uint64_t sheets() const { return std::uint64_t{1} << beta_; }
  std::int64_t num_vertices() const { return static_cast<std::int64_t>(sheets()) * base_.num_vertices(); }

  std::int64_t vertex(int v, std::uint64_t h) const { return (static_cast<std::int64_t>(v) << beta_) | h; }
  int project(std::int64_t x) const { return static_cast<int>(x >> beta_); }
  std::uint64_t sheet(std::int64_t x) const { return static_cast<std::uint64_t>(x) & (sheets() - 1); }
  std::uint64_t mask(int e) const { return masks_[e]; }
  /// Head of the lift of dart d that starts at cover vertex x.
  std::int64_t head(std::int64_t x, Dart d) const {
    return vertex(base_.head(d), sheet(x) ^ masks_[edge_of(d)]);
  }

  /// Counts derived from face orbits of the lifted rotation system.
  CoverStats stats() const;

 private:
  Surface base_;
  std::vector<HomologySignature> sigs_;
  std::vector<std::uint64_t> masks_;
  int beta_ = 0;
};

/// Explicitly traces every face orbit of the cover; cost 2^beta * m.
CoverStats trace_cover_stats(const CoverGraph& c);

/// Cover vertices visited by the lift of darts starting at (start, h0).
std::vector<std::int64_t> lift_walk(const CoverGraph& c, int start, std::span<const Dart> darts,
                                    std::uint64_t h0);

struct CycleSearchOptions {
  SearchMode mode = SearchMode::naive;
  /// Cycles heavier than this are not needed by the caller.
  Weight bound = kNoCycle;
};

/// Shortest closed walk per class, indexed by class mask.
struct ClassCycles {
  std::vector<Weight> weight;  // kNoCycle when absent or beyond the bound
  std::vector<ClosedWalk> walk;
};

ClassCycles min_cycles_all_classes(const CoverGraph& c, const CycleSearchOptions& opt = {});

/// Minimum-weight closed walk with signature h; empty for h = 0.
ClosedWalk min_cycle_in_class(const CoverGraph& c, const HomologySignature& h,
                              SearchMode mode = SearchMode::naive);

struct ClassTable {
  int beta = 0;
  int max_components = 1;  // max(1, g + b - 1)
  ClassCycles cycles;
  /// dp[k][h] = C(h, k), best total weight of at most k cycles.
  std::vector<std::vector<Weight>> dp;
  /// choice[k][h]: class of the cycle added at step k, 0 to reuse C(h, k-1).
  std::vector<std::vector<std::uint64_t>> choice;

  Weight value(std::uint64_t h) const { return dp.back()[h]; }
  /// Classes of the chosen cycles for h, in reconstruction order.
  std::vector<std::uint64_t> chosen_classes(std::uint64_t h) const;
};

ClassTable all_classes(const CoverGraph& c, const CycleSearchOptions& opt = {});

/// Minimum-weight even subgraph in class h, built from a table of all_classes.
/// Returns nullopt when the table holds no solution (possible with a bound).
std::optional<EvenSubgraph> even_subgraph_from_table(const CoverGraph& c, const ClassTable& t,
                                                     std::uint64_t h);

EvenSubgraph min_even_in_class(const CoverGraph& c, const HomologySignature& h,
                               const CycleSearchOptions& opt = {});

/// Drops null-homologous groups of components until the remaining
/// component signatures are linearly independent.
EvenSubgraph prune_dependent_components(const Surface& s, std::span<const HomologySignature> sigs,
                                        const EvenSubgraph& h);

}  // namespace homocut
