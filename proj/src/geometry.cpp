#include "cubetess/geometry.hpp"

#include <algorithm>
#include <string>

#include "cubetess/error.hpp"

namespace cubetess {

bool corner_less(const Cube& a, const Cube& b) {
  if (a.corner != b.corner) return a.corner < b.corner;
  return a.side < b.side;
}

Tessellation::Tessellation(int d, Rational z, std::vector<Cube> cubes)
    : d_(d), z_(std::move(z)), cubes_(std::move(cubes)) {
  if (d_ < 2) throw Error(Errc::InvalidInput, "dimension must be >= 2, got " + std::to_string(d_));
  if (z_.sign() <= 0) throw Error(Errc::InvalidInput, "target side must be positive");
  if (cubes_.empty()) throw Error(Errc::InvalidInput, "a tessellation needs at least one cube");
  for (std::size_t i = 0; i < cubes_.size(); ++i) {
    if (cubes_[i].dim() != d_) {
      throw Error(Errc::DimensionMismatch, "cube " + std::to_string(i) + " has dimension " +
                                               std::to_string(cubes_[i].dim()));
    }
    if (cubes_[i].side.sign() <= 0) {
      throw Error(Errc::InvalidInput, "cube " + std::to_string(i) + " has non-positive side");
    }
  }
}

Rational cube_volume(const Cube& c, int d) {
  if (d < 2) throw Error(Errc::DomainError, "dimension must be >= 2");
  if (c.side.sign() <= 0) throw Error(Errc::DomainError, "side must be positive");
  return pow(c.side, static_cast<unsigned>(d));
}

bool interiors_overlap(const Cube& a, const Cube& b, int d) {
  if (a.dim() != d || b.dim() != d) throw Error(Errc::DimensionMismatch, "cube dimension differs from d");
  for (int k = 0; k < d; ++k) {
    const Rational& lo = std::max(a.corner[k], b.corner[k]);
    if (!(lo < std::min(a.upper(k), b.upper(k)))) return false;
  }
  return true;
}

Rational max_side(const Tessellation& t) {
  auto cubes = t.cubes();
  return std::max_element(cubes.begin(), cubes.end(),
                          [](const Cube& a, const Cube& b) { return a.side < b.side; })
      ->side;
}

Rational min_side(const Tessellation& t) {
  auto cubes = t.cubes();
  return std::min_element(cubes.begin(), cubes.end(),
                          [](const Cube& a, const Cube& b) { return a.side < b.side; })
      ->side;
}

Tessellation scaled(const Tessellation& t, const Rational& factor) {
  if (factor.sign() <= 0) throw Error(Errc::DomainError, "scale factor must be positive");
  std::vector<Cube> cubes(t.cubes().begin(), t.cubes().end());
  for (Cube& c : cubes) {
    for (Rational& x : c.corner) x *= factor;
    c.side *= factor;
  }
  return Tessellation(t.dim(), t.target() * factor, std::move(cubes));
}

Tessellation normalized(const Tessellation& t) {
  Rational s = max_side(t);
  if (s == Rational(1)) return t;
  return scaled(t, Rational(1) / s);
}

std::vector<Rational> facet_coordinates(const Tessellation& t, int axis) {
  if (axis < 0 || axis >= t.dim()) throw Error(Errc::IndexOutOfRange, "axis out of range");
  std::vector<Rational> coords{Rational(0), t.target()};
  coords.reserve(2 * t.size() + 2);
  for (const Cube& c : t.cubes()) {
    coords.push_back(c.corner[axis]);
    coords.push_back(c.upper(axis));
  }
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  return coords;
}

}  // namespace cubetess
