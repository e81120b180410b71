#pragma once

#include <cstddef>

#include "cubetess/geometry.hpp"

namespace cubetess {

// All generators emit cubes sorted lexicographically by corner and throw
// Error(DomainError) for parameters outside their stated range.

/// m^d cubes of side s tiling [0, m*s]^d. Requires d >= 2, m >= 1, s > 0.
Tessellation perfect_grid(int d, int m, const Rational& s);

/// Near-tight counterexample: in the unit grid of [0,m]^d keep the cells
/// with a zero coordinate in their minimal corner, and refill the hole
/// [1,m]^d with an m-grid of side (m-1)/m. n = 2m^d - (m-1)^d.
/// Requires d >= 2, m >= 2.
Tessellation shell_construction(int d, int m);

/// Unit grid of [0,m]^d with the k-block at the origin merged into one cube
/// of side k. n = m^d - k^d + 1. Requires d >= 2, 1 <= k <= m.
Tessellation merged_block_grid(int d, int m, int k);

/// Replaces cube `index` of t by `inner`, scaled to that cube's side and
/// moved to its corner. Throws Error(DimensionMismatch) or
/// Error(IndexOutOfRange).
Tessellation refine(const Tessellation& t, std::size_t index, const Tessellation& inner);

}  // namespace cubetess
