#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homocut/surface.hpp"

namespace homocut {

/// Z2-homology class as a bit vector of length beta.
class HomologySignature {
 public:
  HomologySignature() = default;
  explicit HomologySignature(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  static HomologySignature from_mask(int bits, std::uint64_t mask);
  /// Parses the hex form produced by to_hex(). Throws std::invalid_argument.
  static HomologySignature from_hex(int bits, const std::string& hex);

  int size() const { return bits_; }
  bool test(int i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void flip(int i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void set(int i, bool value) {
    if (test(i) != value) flip(i);
  }
  bool is_zero() const;
  /// Bits as an integer; requires size() <= 64.
  std::uint64_t to_mask() const;
  /// Big-endian hex digits of the integer whose bit i is bit i.
  std::string to_hex() const;

  HomologySignature& operator^=(const HomologySignature& o);
  friend HomologySignature operator^(HomologySignature a, const HomologySignature& b) { return a ^= b; }
  friend bool operator==(const HomologySignature&, const HomologySignature&) = default;

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct TreeCoforest {
  std::vector<int> tree;       // spanning tree T
  std::vector<int> coforest;   // edges whose duals form the forest F*
  std::vector<int> leftover;   // e_1 ... e_beta
  /// alpha_i as dual dart walks between dual boundary vertices.
  std::vector<std::vector<Dart>> dual_arcs;
};

/// Requires at least one boundary face.
TreeCoforest tree_coforest(const Surface& s);

/// Per-edge signatures from the dual arcs of tree_coforest(s).
std::vector<HomologySignature> edge_signatures(const Surface& s, const TreeCoforest& tc);
std::vector<HomologySignature> edge_signatures(const Surface& s);

HomologySignature signature_of(std::span<const HomologySignature> sigs, const EvenSubgraph& h);
HomologySignature signature_of(std::span<const HomologySignature> sigs, const ClosedWalk& w);

/// The surface on which homology is measured: s itself when it has
/// boundary, otherwise s with face 0 removed.
Surface homology_surface(const Surface& s);

/// Some even subgraph whose signature is h (built from fundamental cycles).
EvenSubgraph representative_of_class(const Surface& s, std::span<const HomologySignature> sigs,
                                     const HomologySignature& h);

struct ForestPath {
  int root = 0;               // boundary vertex the path starts from
  std::vector<Dart> darts;    // root -> endpoint, possibly empty
};

struct ForestCotree {
  std::vector<int> boundary_edges;
  std::vector<int> forest;
  std::vector<int> cotree;
  std::vector<int> leftover;
  std::vector<Weight> boundary_distance;  // per vertex
  /// arc length l(e) for edges outside forest and boundary, else -1
  std::vector<Weight> arc_length;
  std::vector<std::vector<Dart>> arcs;  // a_i = sigma_i . e_i . rev(tau_i)
  std::vector<ForestPath> sigma;
  std::vector<ForestPath> tau;

  /// sigma_1..sigma_beta followed by tau_1..tau_beta.
  std::vector<ForestPath> shortest_paths() const;
};

/// Greedy system of arcs. Requires boundary and boundary_well_formed(s);
/// throws std::invalid_argument otherwise.
ForestCotree forest_cotree_greedy(const Surface& s);

/// crossings[c][i]: how often cycle c of cycle_decomposition(h) crosses arc
/// a_i, with h kept to the left of any run it shares with the arc.
std::vector<std::vector<int>> crossing_counts(const Surface& s, const EvenSubgraph& h,
                                              const ForestCotree& fc);

HomologySignature crossing_parity_vector(const Surface& s, const EvenSubgraph& h,
                                         const ForestCotree& fc);

}  // namespace homocut
