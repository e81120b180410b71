#include "cubetess/validator.hpp"

#include <algorithm>
#include <numeric>

#include "cubetess/error.hpp"

namespace cubetess {

namespace {

bool inside_target(const Cube& c, const Rational& z) {
  for (int k = 0; k < c.dim(); ++k) {
    if (c.corner[k].sign() < 0 || c.upper(k) > z) return false;
  }
  return true;
}

// Sort-by-first-coordinate sweep: a pair can only overlap if their projections
// on axis 0 overlap, so the inner scan stops at the first cube starting at or
// beyond the current cube's upper face.
std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs(const Tessellation& t) {
  std::vector<std::size_t> order(t.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return t[a].corner[0] < t[b].corner[0];
  });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t p = 0; p < order.size(); ++p) {
    const Cube& a = t[order[p]];
    Rational end = a.upper(0);
    for (std::size_t q = p + 1; q < order.size() && t[order[q]].corner[0] < end; ++q) {
      if (interiors_overlap(a, t[order[q]], t.dim())) {
        pairs.emplace_back(std::min(order[p], order[q]), std::max(order[p], order[q]));
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

ValidationReport validate(const Tessellation& t) {
  ValidationReport report;
  const int d = t.dim();
  report.volume_target = pow(t.target(), static_cast<unsigned>(d));
  for (std::size_t i = 0; i < t.size(); ++i) {
    report.volume_sum += cube_volume(t[i], d);
    if (!inside_target(t[i], t.target())) {
      report.violations.push_back({ViolationKind::OutOfBounds, {i}});
    }
  }
  for (auto [i, j] : overlapping_pairs(t)) {
    report.violations.push_back({ViolationKind::Overlap, {i, j}});
  }
  if (report.volume_sum != report.volume_target) {
    report.violations.push_back({ViolationKind::VolumeMismatch, {}});
  }
  report.is_valid = report.violations.empty();
  return report;
}

bool below_ratio_power(const Integer& n, const Rational& r, int d) {
  Rational q = r / (Rational(1) - r);
  return Rational(n) < pow(q, static_cast<unsigned>(d));
}

HypothesisResult hypothesis_check(const Tessellation& t) {
  const Rational s_max = max_side(t);
  const Integer n = t.size();
  // (s/(1-s))^d is increasing in s, so the smallest side decides.
  const Rational r = min_side(t) / s_max;
  HypothesisResult result;
  result.holds = r == Rational(1) || below_ratio_power(n, r, t.dim());
  if (!result.holds) result.offending_side = r;
  return result;
}

ConclusionResult conclusion_check(const Tessellation& t) {
  ConclusionResult result;
  result.root_m = exact_root(Integer(t.size()), static_cast<unsigned>(t.dim()));
  result.n_is_perfect_power = result.root_m.has_value();
  const Rational& first = t[0].side;
  result.all_sides_equal = std::all_of(t.cubes().begin(), t.cubes().end(),
                                       [&](const Cube& c) { return c.side == first; });
  return result;
}

StabilityReport stability_oracle(const Tessellation& t) {
  if (!validate(t).is_valid) throw Error(Errc::InvalidInput, "not a valid tessellation");
  HypothesisResult hyp = hypothesis_check(t);
  ConclusionResult con = conclusion_check(t);
  StabilityReport report;
  report.n = t.size();
  report.d = t.dim();
  report.s_max = max_side(t);
  report.hypothesis_holds = hyp.holds;
  report.offending_side = hyp.offending_side;
  report.n_is_perfect_power = con.n_is_perfect_power;
  report.root_m = con.root_m;
  report.all_sides_equal = con.all_sides_equal;
  if (report.hypothesis_holds && !(report.n_is_perfect_power && report.all_sides_equal)) {
    throw Error(Errc::TheoremViolation, "hypothesis holds but conclusion fails");
  }
  return report;
}

}  // namespace cubetess
