#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homocut/cover.hpp"
#include "homocut/surface.hpp"

namespace homocut {

struct CutResult {
  std::vector<int> edges;  // sorted
  Weight weight = 0;
  std::vector<int> side_s;
  std::vector<int> side_t;
  /// "st-duality", "global-contractible" or "global-class <hex>".
  std::string provenance;
};

struct CutOptions {
  SearchMode mode = SearchMode::naive;
};

/// Minimum-weight even subgraph homologous to the boundary of fA in the
/// surface with fA and fB removed. Such a subgraph separates fA from fB.
EvenSubgraph min_face_separator(const Surface& s, int fA, int fB, const CutOptions& opt = {});

/// As above, but gives up with nullopt when every separator weighs more than cap.
std::optional<EvenSubgraph> min_face_separator(const Surface& s, int fA, int fB, Weight cap,
                                               const CutOptions& opt = {});

/// Boundaries of s are filled first; they cannot change a cut.
CutResult min_st_cut(const Surface& s, int source, int sink, const CutOptions& opt = {});

struct WeightedCycle {
  Weight weight = 0;
  std::vector<int> edges;  // edge ids of a simple cycle
};

/// Minimum-weight simple cycle using only edges with usable[e] != 0
/// (all edges when usable is empty). Weights must be non-negative.
std::optional<WeightedCycle> shortest_weighted_cycle(int n, std::span<const Edge> edges,
                                                     std::span<const char> usable = {});

/// s1 has exactly one boundary face. Returns a separating subgraph that is
/// minimum whenever some minimum separating subgraph is a simple contractible
/// cycle, or nullopt when the sliced graph has no usable cycle.
std::optional<EvenSubgraph> global_separating_contractible(const Surface& s1);

struct ClassSeparator {
  EvenSubgraph subgraph;
  std::uint64_t cls = 0;
  int candidates = 0;  // separator searches performed
};

/// s1 has exactly one boundary face. Returns the lightest separator between
/// the boundary and a face next to a minimum even subgraph of some nonzero
/// class; nullopt for genus 0.
std::optional<ClassSeparator> global_separating_noncontractible(const Surface& s1, const CutOptions& opt = {});

/// Global minimum cut of the filled surface; source picks the dual face that
/// is removed and defaults to vertex 0.
CutResult global_min_cut(const Surface& s, int source = 0, const CutOptions& opt = {});

/// Vertices reachable from source without using the given edges.
std::vector<char> reachable_without(const Surface& s, int source, std::span<const int> removed);

}  // namespace homocut
