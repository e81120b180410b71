#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cubetess/geometry.hpp"

namespace cubetess {

enum class ViolationKind { OutOfBounds, Overlap, VolumeMismatch };

struct Violation {
  ViolationKind kind;
  /// One index for OutOfBounds, an ascending pair for Overlap, empty for VolumeMismatch.
  std::vector<std::size_t> cubes;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool is_valid = false;
  Rational volume_target;  // z^d
  Rational volume_sum;     // sum of s_i^d
  /// Canonical order: bounds by index, then overlaps by (i, j), then volume.
  std::vector<Violation> violations;
};

/// Certifies a decomposition: containment in [0,z]^d, pairwise disjoint
/// interiors, and sum s_i^d == z^d. Together these are equivalent to the
/// closed cubes covering the target. Reports every violation found.
ValidationReport validate(const Tessellation& t);

struct HypothesisResult {
  bool holds = false;
  /// Smallest normalized side s/s_max failing the interval test.
  std::optional<Rational> offending_side;
};

/// After scaling the largest side to 1, checks that every side s' satisfies
/// s' == 1 or n < (s'/(1-s'))^d, i.e. s' lies in (1 - 1/(n^(1/d)+1), 1].
HypothesisResult hypothesis_check(const Tessellation& t);

struct ConclusionResult {
  bool n_is_perfect_power = false;
  std::optional<Integer> root_m;
  bool all_sides_equal = false;
};

ConclusionResult conclusion_check(const Tessellation& t);

struct StabilityReport {
  std::size_t n = 0;
  int d = 0;
  Rational s_max;
  bool hypothesis_holds = false;
  bool n_is_perfect_power = false;
  std::optional<Integer> root_m;
  bool all_sides_equal = false;
  std::optional<Rational> offending_side;
};

/// Full verdict. Throws Error(InvalidInput) if t does not validate, and
/// Error(TheoremViolation) if the hypothesis holds but the conclusion does
/// not (which can only be a bug, the statement being a theorem).
StabilityReport stability_oracle(const Tessellation& t);

/// Decides n < (r/(1-r))^d exactly for 0 < r < 1.
bool below_ratio_power(const Integer& n, const Rational& r, int d);

}  // namespace cubetess
