#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubetess/geometry.hpp"

namespace cubetess {

/// An axis-parallel line. Axes are 0-based; fixed_coords holds the
/// coordinates on every other axis in increasing axis order (d-1 values).
struct LineSpec {
  int axis = 0;
  std::vector<Rational> fixed_coords;

  /// Coordinate on `other_axis` (!= axis).
  const Rational& coord_on(int other_axis) const;

  friend bool operator==(const LineSpec&, const LineSpec&) = default;
};

/// Cubes crossed by a generic line, left to right, with the facet
/// coordinates 0 = x_0 < x_1 < ... < x_m = z where the line crosses them.
struct StabProfile {
  std::vector<Rational> breakpoints;
  std::vector<std::size_t> cube_indices;

  std::size_t m() const noexcept { return cube_indices.size(); }

  friend bool operator==(const StabProfile&, const StabProfile&) = default;
};

/// z^d < n exactly, on t as given (no normalization).
bool claim2_check(const Tessellation& t);

/// True iff no fixed coordinate of the line is a facet coordinate of t.
bool is_generic(const Tessellation& t, const LineSpec& line);

/// Generic line along `axis` whose fixed coordinates are the midpoints of
/// the first gap between distinct facet coordinates on each other axis.
/// Throws Error(IndexOutOfRange) for an axis outside [0, d).
LineSpec pick_generic_line(const Tessellation& t, int axis);

/// One generic line per cell of the arrangement of facet hyperplanes
/// projected along `axis` (midpoint of every gap, Cartesian product).
std::vector<LineSpec> arrangement_lines(const Tessellation& t, int axis);
/// Number of such cells, saturating at SIZE_MAX.
std::size_t arrangement_cell_count(const Tessellation& t, int axis);

/// Throws Error(NonGenericLine) if the line touches a facet hyperplane and
/// Error(InvalidInput) if the crossed cubes leave a gap or overlap on the line.
StabProfile stab_profile(const Tessellation& t, const LineSpec& line);

/// For each j in [1, m]: x_j <= j and j(1 - 1/(n^(1/d)+1)) < x_j, decided as
/// x_j >= j or (j - x_j > 0 and n < (x_j/(j - x_j))^d). Expects a profile of
/// a tessellation normalized so the largest side is 1.
bool check_breakpoint_bounds(const StabProfile& p, const Integer& n, int d);

struct Claim3Options {
  /// Above this many cells per axis, fall back to random cell sampling.
  std::size_t max_cells = 1'000'000;
  std::size_t samples = 10'000;
  std::uint64_t seed = 0x5eed;
};

struct Claim3Report {
  bool holds = false;
  Integer expected_m;  // ceil(z) after normalization
  std::size_t lines_checked = 0;
  /// Fraction of arrangement cells visited, 1.0 when exhaustive.
  double coverage = 1.0;
  std::optional<LineSpec> witness_line;  // in normalized coordinates
  std::optional<StabProfile> witness_profile;
};

/// Normalizes t, then checks that every generic axis-parallel line stabs
/// exactly ceil(z) cubes, one line per arrangement cell on every axis.
Claim3Report claim3_report(const Tessellation& t, const Claim3Options& options = {});
bool claim3_check(const Tessellation& t);

struct PepsResult {
  Rational epsilon;
  std::size_t m = 0;
  /// The m^d points of {eps, 1+eps, ..., m-1+eps}^d, lexicographic order.
  std::vector<std::vector<Rational>> points;
  /// Per cube index, the 1-based grid indices (j_1..j_d) of its unique point.
  std::vector<std::vector<std::size_t>> assignment;
};

/// Rational candidates for eps: midpoints between consecutive distinct
/// fractional parts of the facet coordinates of normalized t.
std::vector<Rational> epsilon_candidates(const Tessellation& t);

/// Tries the bijection cubes <-> P_eps for one eps on normalized t;
/// empty if some cube holds zero or several points or a point is uncovered.
std::optional<PepsResult> try_peps(const Tessellation& t, const Rational& epsilon);

/// Normalizes t and returns the first candidate eps giving a bijection.
/// Throws Error(PreconditionFailed) if t is invalid or fails the hypothesis
/// and Error(NoEpsilonFound) if no candidate works.
PepsResult build_peps(const Tessellation& t);

struct MeanIdentityResult {
  Rational sum_sides;  // normalized
  Integer m;
  bool holds_line_identity = false;   // sum s_i == m^(d-1) z
  bool power_mean_inequality = false; // (sum s_i / m^d)^d <= sum s_i^d / m^d
  bool power_mean_equality = false;
  bool all_sides_equal = false;
};

/// Throws Error(PreconditionFailed) when the hypothesis does not hold.
MeanIdentityResult mean_identity_check(const Tessellation& t);

}  // namespace cubetess
