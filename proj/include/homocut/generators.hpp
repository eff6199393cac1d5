#pragma once

#include <cstdint>
#include <string>

#include "homocut/surface.hpp"

namespace homocut {

enum class GenKind { planar_grid, torus_grid, genus_schema, random_rotation };
enum class WeightKind { unit, uniform, file };

GenKind parse_gen_kind(const std::string& name);
std::string to_string(GenKind kind);

struct GenSpec {
  GenKind kind = GenKind::torus_grid;
  int rows = 3;          // grids
  int cols = 3;          // grids
  int genus = 1;         // genus-schema
  int vertices = 6;      // random-rotation
  int edges = 10;        // random-rotation
  int subdivisions = 0;  // extra vertices inserted on every edge
  int chords = 0;        // random edges splitting a face
  int boundary = 0;      // faces turned into boundary
  WeightKind weights = WeightKind::unit;
  Weight weight_lo = 1;
  Weight weight_hi = 1;
  std::string weight_file;  // whitespace-separated, one weight per edge id
  std::uint64_t seed = 0;
};

/// Deterministic in the spec. Throws std::invalid_argument on bad sizes.
Surface generate(const GenSpec& spec);

}  // namespace homocut
