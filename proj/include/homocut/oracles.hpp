#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "homocut/homology.hpp"
#include "homocut/surface.hpp"

namespace homocut {

// Brute-force references. They work on raw edge lists and rotation lists
// and share no code with the solvers.

struct FlowCut {
  Weight value = 0;
  std::vector<int> source_side;  // vertices reachable in the residual graph
  std::vector<int> edges;        // saturated edges leaving source_side
};

/// Shortest-augmenting-path maximum flow on the undirected graph.
FlowCut oracle_max_flow_min_cut(int n, std::span<const Edge> edges, int s, int t);

struct PartitionCut {
  Weight value = 0;
  std::vector<int> side;  // one side of a minimum cut
};

/// Stoer-Wagner. Requires n >= 2.
PartitionCut oracle_global_min_cut(int n, std::span<const Edge> edges);

/// Minimum over all vertex bipartitions; n <= 12.
Weight oracle_exhaustive_global_cut(int n, std::span<const Edge> edges);
/// Minimum over bipartitions separating s and t; n <= 12.
Weight oracle_exhaustive_st_cut(int n, std::span<const Edge> edges, int s, int t);

/// Lightest simple cycle by subset enumeration; m <= 24. Returns -1 if acyclic.
Weight oracle_shortest_cycle(int n, std::span<const Edge> edges);

struct OracleInstance {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Dart>> rotation;
  std::vector<Dart> boundary_darts;
};

OracleInstance oracle_instance(const Surface& s);

/// Edge sets (bit e = edge e, odd multiplicity) of the faces traced from the
/// rotation lists, split by whether the face holds a boundary dart. m <= 64.
struct OracleFaces {
  std::vector<std::uint64_t> interior;
  std::vector<std::uint64_t> boundary;
};
OracleFaces oracle_faces(const OracleInstance& inst);

struct EvenOracleResult {
  Weight weight = 0;
  std::vector<int> edges;
};

/// Minimum-weight even subgraph in every homology class, by enumerating the
/// whole cycle space once. Classes are cosets of the span of the interior
/// face boundaries. m <= 22.
class EvenClassOracle {
 public:
  static constexpr int kMaxEdges = 22;
  explicit EvenClassOracle(const OracleInstance& inst);

  /// Minimum over even subgraphs homologous to the given one.
  EvenOracleResult minimum(std::span<const int> representative) const;
  bool null_homologous(std::span<const int> edges) const;
  int num_classes() const { return static_cast<int>(best_.size()); }

 private:
  std::uint64_t reduce(std::uint64_t mask) const;

  std::vector<Weight> weights_;
  std::vector<std::uint64_t> span_rows_;  // echelon rows, distinct leading bits
  std::unordered_map<std::uint64_t, std::pair<Weight, std::uint64_t>> best_;
};

struct CrossingDiagnostic {
  int max_crossings = 0;  // over arcs, crossings of the decomposition of H
  int reference = 0;      // 12g + 4b - 5
};

/// Reported only; the reference bound is not asserted.
CrossingDiagnostic crossing_diagnostic(const Surface& s, const EvenSubgraph& h, const ForestCotree& fc);

struct OracleReport {
  std::string instance;
  std::string quantity;
  Weight oracle_value = 0;
  Weight solver_value = 0;
  bool match = false;
};

OracleReport make_report(std::string instance, std::string quantity, Weight oracle_value, Weight solver_value);

}  // namespace homocut
