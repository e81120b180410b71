#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubetess/rational.hpp"

namespace cubetess {

/// Axis-aligned cube given by its minimal corner and side length.
struct Cube {
  std::vector<Rational> corner;
  Rational side;

  int dim() const noexcept { return static_cast<int>(corner.size()); }
  Rational upper(int axis) const { return corner[axis] + side; }

  friend bool operator==(const Cube&, const Cube&) = default;
};

/// Lexicographic by corner, then by side.
bool corner_less(const Cube& a, const Cube& b);

/// A decomposition candidate of [0,z]^d into cubes. The constructor enforces
/// the structural invariants (d >= 2, z > 0, n >= 1, matching dimensions,
/// positive sides); containment, disjointness and coverage are the
/// validator's business.
class Tessellation {
 public:
  Tessellation(int d, Rational z, std::vector<Cube> cubes);

  int dim() const noexcept { return d_; }
  const Rational& target() const noexcept { return z_; }
  std::size_t size() const noexcept { return cubes_.size(); }
  std::span<const Cube> cubes() const noexcept { return cubes_; }
  const Cube& operator[](std::size_t i) const { return cubes_[i]; }

  friend bool operator==(const Tessellation&, const Tessellation&) = default;

 private:
  int d_;
  Rational z_;
  std::vector<Cube> cubes_;
};

/// side^d, exact.
Rational cube_volume(const Cube& c, int d);

/// True iff the open cubes intersect. Shared facets do not count.
/// Throws Error(DimensionMismatch) if either cube is not d-dimensional.
bool interiors_overlap(const Cube& a, const Cube& b, int d);

Rational max_side(const Tessellation& t);
Rational min_side(const Tessellation& t);

/// Every coordinate and side multiplied by factor (> 0).
Tessellation scaled(const Tessellation& t, const Rational& factor);
/// Scaled so that the largest side is exactly 1.
Tessellation normalized(const Tessellation& t);

/// Sorted distinct facet coordinates on one axis, always including 0 and z.
std::vector<Rational> facet_coordinates(const Tessellation& t, int axis);

}  // namespace cubetess
