#include "cubetess/stab_analysis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "cubetess/error.hpp"
#include "cubetess/validator.hpp"

namespace cubetess {

namespace {

void check_axis(const Tessellation& t, int axis) {
  if (axis < 0 || axis >= t.dim()) {
    throw Error(Errc::IndexOutOfRange, "axis " + std::to_string(axis) + " outside [0, " +
                                           std::to_string(t.dim()) + ")");
  }
}

std::vector<Rational> gap_midpoints(const std::vector<Rational>& sorted) {
  std::vector<Rational> mids;
  mids.reserve(sorted.size());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) mids.push_back((sorted[i] + sorted[i + 1]) / 2);
  return mids;
}

// Gap midpoints on every axis other than `axis`, in increasing axis order.
std::vector<std::vector<Rational>> cross_section_gaps(const Tessellation& t, int axis) {
  std::vector<std::vector<Rational>> gaps;
  for (int k = 0; k < t.dim(); ++k) {
    if (k != axis) gaps.push_back(gap_midpoints(facet_coordinates(t, k)));
  }
  return gaps;
}

Rational fractional_part(const Rational& x) { return x - Rational(floor(x)); }

}  // namespace

const Rational& LineSpec::coord_on(int other_axis) const {
  return fixed_coords[other_axis < axis ? other_axis : other_axis - 1];
}

bool claim2_check(const Tessellation& t) {
  return pow(t.target(), static_cast<unsigned>(t.dim())) < Rational(Integer(t.size()));
}

bool is_generic(const Tessellation& t, const LineSpec& line) {
  for (int k = 0; k < t.dim(); ++k) {
    if (k == line.axis) continue;
    const Rational& y = line.coord_on(k);
    for (const Cube& c : t.cubes()) {
      if (y == c.corner[k] || y == c.upper(k)) return false;
    }
    if (y.is_zero() || y == t.target()) return false;
  }
  return true;
}

LineSpec pick_generic_line(const Tessellation& t, int axis) {
  check_axis(t, axis);
  LineSpec line{axis, {}};
  for (const auto& mids : cross_section_gaps(t, axis)) line.fixed_coords.push_back(mids.front());
  return line;
}

std::size_t arrangement_cell_count(const Tessellation& t, int axis) {
  check_axis(t, axis);
  std::size_t count = 1;
  for (const auto& mids : cross_section_gaps(t, axis)) {
    if (count > std::numeric_limits<std::size_t>::max() / mids.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    count *= mids.size();
  }
  return count;
}

std::vector<LineSpec> arrangement_lines(const Tessellation& t, int axis) {
  check_axis(t, axis);
  const auto gaps = cross_section_gaps(t, axis);
  std::vector<LineSpec> lines;
  std::vector<std::size_t> idx(gaps.size(), 0);
  while (true) {
    LineSpec line{axis, {}};
    for (std::size_t k = 0; k < gaps.size(); ++k) line.fixed_coords.push_back(gaps[k][idx[k]]);
    lines.push_back(std::move(line));
    // odometer, last axis fastest
    std::size_t k = gaps.size();
    while (k > 0 && ++idx[k - 1] == gaps[k - 1].size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return lines;
}

StabProfile stab_profile(const Tessellation& t, const LineSpec& line) {
  check_axis(t, line.axis);
  if (line.fixed_coords.size() != static_cast<std::size_t>(t.dim() - 1)) {
    throw Error(Errc::DimensionMismatch, "line needs d-1 fixed coordinates");
  }
  if (!is_generic(t, line)) throw Error(Errc::NonGenericLine, "line touches a facet hyperplane");

  const int a = line.axis;
  std::vector<std::size_t> crossed;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Cube& c = t[i];
    bool hit = true;
    for (int k = 0; k < t.dim() && hit; ++k) {
      if (k == a) continue;
      const Rational& y = line.coord_on(k);
      hit = c.corner[k] < y && y < c.upper(k);
    }
    if (hit) crossed.push_back(i);
  }
  std::sort(crossed.begin(), crossed.end(),
            [&](std::size_t i, std::size_t j) { return t[i].corner[a] < t[j].corner[a]; });

  StabProfile profile;
  profile.breakpoints.push_back(Rational(0));
  for (std::size_t i : crossed) {
    if (t[i].corner[a] != profile.breakpoints.back()) {
      throw Error(Errc::InvalidInput, "cubes along the line do not abut at " +
                                          profile.breakpoints.back().to_string());
    }
    profile.breakpoints.push_back(t[i].upper(a));
  }
  if (profile.breakpoints.back() != t.target()) {
    throw Error(Errc::InvalidInput, "cubes along the line stop short of z");
  }
  profile.cube_indices = std::move(crossed);
  return profile;
}

bool check_breakpoint_bounds(const StabProfile& p, const Integer& n, int d) {
  for (std::size_t j = 1; j < p.breakpoints.size(); ++j) {
    const Rational& x = p.breakpoints[j];
    const Rational jj(static_cast<unsigned long long>(j));
    if (x > jj) return false;
    if (x >= jj) continue;
    // j - x > 0 here; j(1 - 1/(r+1)) < x  <=>  r < x/(j-x)  <=>  n < (x/(j-x))^d
    if (x.sign() <= 0) return false;
    if (!(Rational(n) < pow(x / (jj - x), static_cast<unsigned>(d)))) return false;
  }
  return true;
}

Claim3Report claim3_report(const Tessellation& t, const Claim3Options& options) {
  const Tessellation u = normalized(t);
  Claim3Report report;
  report.expected_m = ceil(u.target());
  report.holds = true;

  auto check = [&](const LineSpec& line) {
    ++report.lines_checked;
    StabProfile p = stab_profile(u, line);
    if (Integer(p.m()) != report.expected_m) {
      report.holds = false;
      report.witness_line = line;
      report.witness_profile = std::move(p);
      return false;
    }
    return true;
  };

  std::size_t visited = 0;
  double total = 0;
  for (int axis = 0; axis < u.dim(); ++axis) {
    const std::size_t cells = arrangement_cell_count(u, axis);
    total += static_cast<double>(cells);
    if (cells <= options.max_cells) {
      for (const LineSpec& line : arrangement_lines(u, axis)) {
        if (!check(line)) return report;
      }
      visited += cells;
      continue;
    }
    const auto gaps = cross_section_gaps(u, axis);
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(axis));
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t s = 0; s < options.samples; ++s) {
      std::vector<std::size_t> cell;
      LineSpec line{axis, {}};
      for (const auto& mids : gaps) {
        std::uniform_int_distribution<std::size_t> pick(0, mids.size() - 1);
        cell.push_back(pick(rng));
        line.fixed_coords.push_back(mids[cell.back()]);
      }
      if (!seen.insert(cell).second) continue;
      if (!check(line)) return report;
    }
    visited += seen.size();
  }
  report.coverage = static_cast<double>(visited) / total;
  return report;
}

bool claim3_check(const Tessellation& t) { return claim3_report(t).holds; }

std::vector<Rational> epsilon_candidates(const Tessellation& t) {
  const Tessellation u = normalized(t);
  std::vector<Rational> fracs{Rational(0), Rational(1)};
  for (int k = 0; k < u.dim(); ++k) {
    for (const Rational& x : facet_coordinates(u, k)) fracs.push_back(fractional_part(x));
  }
  std::sort(fracs.begin(), fracs.end());
  fracs.erase(std::unique(fracs.begin(), fracs.end()), fracs.end());
  return gap_midpoints(fracs);
}

std::optional<PepsResult> try_peps(const Tessellation& t, const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) return std::nullopt;
  const Tessellation u = normalized(t);
  const Integer m_big = ceil(u.target());
  const int d = u.dim();
  // m^d must equal n for a bijection
  if (ipow(m_big, static_cast<unsigned>(d)) != Integer(u.size())) return std::nullopt;
  const auto m = static_cast<std::size_t>(m_big);

  PepsResult result;
  result.epsilon = epsilon;
  result.m = m;
  std::set<std::vector<std::size_t>> taken;
  for (const Cube& c : u.cubes()) {
    std::vector<std::size_t> grid;
    for (int k = 0; k < d; ++k) {
      // integers j with corner < j + eps < upper
      Integer lo = floor(c.corner[k] - epsilon) + 1;
      Integer hi = ceil(c.upper(k) - epsilon) - 1;
      lo = std::max(lo, Integer(0));
      hi = std::min(hi, m_big - 1);
      if (lo != hi) return std::nullopt;
      grid.push_back(static_cast<std::size_t>(lo) + 1);
    }
    if (!taken.insert(grid).second) return std::nullopt;
    result.assignment.push_back(std::move(grid));
  }

  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    std::vector<Rational> point;
    for (std::size_t j : idx) point.push_back(Rational(static_cast<unsigned long long>(j)) + epsilon);
    result.points.push_back(std::move(point));
    std::size_t k = idx.size();
    while (k > 0 && ++idx[k - 1] == m) idx[--k] = 0;
    if (k == 0) break;
  }
  return result;
}

PepsResult build_peps(const Tessellation& t) {
  if (!validate(t).is_valid) throw Error(Errc::PreconditionFailed, "not a valid tessellation");
  if (!hypothesis_check(t).holds) throw Error(Errc::PreconditionFailed, "side-length hypothesis fails");
  for (const Rational& eps : epsilon_candidates(t)) {
    if (auto r = try_peps(t, eps)) return std::move(*r);
  }
  throw Error(Errc::NoEpsilonFound, "no epsilon yields a bijection");
}

MeanIdentityResult mean_identity_check(const Tessellation& t) {
  if (!hypothesis_check(t).holds) throw Error(Errc::PreconditionFailed, "side-length hypothesis fails");
  const Tessellation u = normalized(t);
  const auto d = static_cast<unsigned>(u.dim());
  MeanIdentityResult r;
  r.m = ceil(u.target());
  Rational sum_pow;
  for (const Cube& c : u.cubes()) {
    r.sum_sides += c.side;
    sum_pow += pow(c.side, d);
  }
  const Rational md(ipow(r.m, d));
  r.holds_line_identity = r.sum_sides == Rational(ipow(r.m, d - 1)) * u.target();
  const Rational lhs = pow(r.sum_sides / md, d);
  const Rational rhs = sum_pow / md;
  r.power_mean_inequality = lhs <= rhs;
  r.power_mean_equality = lhs == rhs;
  r.all_sides_equal = std::all_of(u.cubes().begin(), u.cubes().end(),
                                  [&](const Cube& c) { return c.side == u[0].side; });
  return r;
}

}  // namespace cubetess
