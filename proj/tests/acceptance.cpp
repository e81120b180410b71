// Acceptance suite: one line per criterion, exact checks, wall-clock budgets.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubetess/generators.hpp"
#include "cubetess/search.hpp"
#include "cubetess/stab_analysis.hpp"
#include "cubetess/tess_io.hpp"
#include "cubetess/validator.hpp"
#include "support/corpus.hpp"

using namespace cubetess;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

using Check = std::function<void(Outcome&)>;

struct Criterion {
  std::string id;
  std::string title;
  double budget_seconds;
  Check check;
  /// Criterion whose elapsed time also counts against this budget.
  std::string shares_budget_with;
};

void shell_counts(Outcome& out) {
  int checked = 0;
  for (int d = 2; d <= 3; ++d) {
    for (int m = 2; m <= 6; ++m) {
      const std::string tag = "shell(" + std::to_string(d) + "," + std::to_string(m) + ")";
      Tessellation t = shell_construction(d, m);
      const Integer n = 2 * ipow(Integer(m), d) - ipow(Integer(m - 1), d);
      if (Integer(t.size()) != n) out.fail(tag + ": wrong count");
      if (!validate(t).is_valid) out.fail(tag + ": invalid");
      std::set<Rational> sides;
      for (const Cube& c : t.cubes()) sides.insert(c.side);
      const Rational small(m - 1, m);
      if (sides != std::set<Rational>{small, Rational(1)}) out.fail(tag + ": side multiset");
      if (min_side(t) / max_side(t) != Rational(1) - Rational(1, m)) out.fail(tag + ": ratio");
      HypothesisResult h = hypothesis_check(t);
      if (h.holds || h.offending_side != small) out.fail(tag + ": hypothesis verdict");
      ++checked;
    }
  }
  out.detail = std::to_string(checked) + " shells";
}

void convexity(Outcome& out) {
  int checked = 0;
  for (int d = 2; d <= 4; ++d) {
    for (int m = 2; m <= 10; ++m) {
      if (!(2 * ipow(Integer(m), d) - ipow(Integer(m - 1), d) < ipow(Integer(m + 1), d))) {
        out.fail("d=" + std::to_string(d) + " m=" + std::to_string(m));
      }
      ++checked;
    }
  }
  if (out.ok) out.detail = std::to_string(checked) + " (d,m) pairs";
}

void theorem_property(Outcome& out) {
  auto corpus = testing::full_corpus();
  if (corpus.size() < 50) out.fail("corpus too small");
  int hyp = 0;
  for (const auto& [name, t] : corpus) {
    if (!validate(t).is_valid) {
      out.fail(name + ": invalid");
      continue;
    }
    StabilityReport r = stability_oracle(t);  // throws on a counterexample
    if (r.hypothesis_holds) {
      ++hyp;
      if (!(r.n_is_perfect_power && r.all_sides_equal)) out.fail(name + ": counterexample");
    }
  }
  if (out.ok) {
    out.detail = std::to_string(corpus.size()) + " tessellations, " + std::to_string(hyp) +
                 " satisfy the hypothesis, 0 exceptions";
  }
}

void claims_suite(Outcome& out) {
  int instances = 0, profiles = 0;
  for (int d = 2; d <= 3; ++d) {
    for (int m = 1; m <= 4; ++m) {
      const std::string tag = "grid(" + std::to_string(d) + "," + std::to_string(m) + ")";
      Tessellation u = normalized(perfect_grid(d, m, Rational(2, 5)));
      if (!hypothesis_check(u).holds) {
        out.fail(tag + ": hypothesis");
        continue;
      }
      const Integer n(u.size());
      const Rational zd = pow(u.target(), static_cast<unsigned>(d));
      // equality branch of z^d = sum s_i^d <= n
      if (claim2_check(u) || zd != Rational(n)) out.fail(tag + ": claim 2 / volume identity");
      Claim3Report c3 = claim3_report(u);
      if (!c3.holds || c3.coverage != 1.0 || c3.expected_m != ceil(u.target())) out.fail(tag + ": claim 3");
      for (int axis = 0; axis < d; ++axis) {
        for (const LineSpec& line : arrangement_lines(u, axis)) {
          ++profiles;
          if (!check_breakpoint_bounds(stab_profile(u, line), n, d)) out.fail(tag + ": breakpoint bounds");
        }
      }
      PepsResult p = build_peps(u);
      std::set<std::vector<std::size_t>> image(p.assignment.begin(), p.assignment.end());
      if (Integer(p.points.size()) != n || image.size() != u.size()) out.fail(tag + ": P_eps bijection");
      MeanIdentityResult mi = mean_identity_check(u);
      if (mi.sum_sides != Rational(ipow(mi.m, d - 1)) * u.target() || !mi.holds_line_identity ||
          !mi.power_mean_equality || !mi.all_sides_equal) {
        out.fail(tag + ": mean identity");
      }
      ++instances;
    }
  }
  if (out.ok) out.detail = std::to_string(instances) + " grids, " + std::to_string(profiles) + " profiles";
}

void counterexample(Outcome& out) {
  Tessellation t = shell_construction(2, 2);
  StabProfile p = stab_profile(t, LineSpec{0, {Rational(5, 4)}});
  const Integer expected = ceil(t.target());
  if (p.m() != 3 || Integer(p.m()) <= expected) out.fail("line y=5/4 stabs " + std::to_string(p.m()));
  if (claim3_check(t)) out.fail("claim 3 unexpectedly holds");
  if (out.ok) out.detail = "y=5/4 stabs 3 > ceil(z) = 2";
}

void hadwiger_gaps(Outcome& out) {
  for (int L = 1; L <= 4; ++L) {
    for (int n : {2, 3, 5}) {
      SearchConfig cfg;
      cfg.d = 2;
      cfg.L = L;
      cfg.n = n;
      SearchOutcome s = search_tilings(cfg);
      if (!s.exhausted || !s.tilings.empty()) {
        out.fail("L=" + std::to_string(L) + " n=" + std::to_string(n) + " not an exhausted empty search");
      }
    }
  }
  FeasibleCounts fc = feasible_counts(2, 4, 9);
  if (!fc.exhausted) out.fail("feasible_counts truncated");
  auto certifies = [&](int L, std::set<int> want) {
    const auto& got = fc.by_scale.at(L);
    for (int n : want) {
      if (!got.contains(n)) out.fail("scale " + std::to_string(L) + " misses n=" + std::to_string(n));
    }
  };
  certifies(2, {1, 4});
  certifies(3, {6, 9});
  certifies(4, {7, 8});
  for (int n : {2, 3, 5}) {
    if (fc.counts.contains(n)) out.fail("gap value " + std::to_string(n) + " realized");
  }
  if (out.ok) {
    std::ostringstream os;
    os << "gaps {2,3,5} empty at L<=4; feasible<=9:";
    for (int n : fc.counts) os << " " << n;
    out.detail = os.str();
  }
}

void ratio_bound(Outcome& out) {
  int checked = 0;
  for (const auto& [name, t] : testing::search_corpus()) {
    if (exact_root(Integer(t.size()), 2)) continue;
    const Rational r = min_side(t) / max_side(t);
    if (!(r < Rational(1)) || pow(r / (Rational(1) - r), 2) > Rational(Integer(t.size()))) {
      out.fail(name + ": ratio " + r.to_string());
    }
    ++checked;
  }
  if (out.ok) out.detail = std::to_string(checked) + " non-square tilings";
}

void round_trip_and_render(Outcome& out) {
  auto corpus = testing::full_corpus();
  int rendered = 0;
  for (const auto& [name, t] : corpus) {
    if (!(parse(serialize(t)) == t)) out.fail(name + ": round trip");
    if (t.dim() != 2) continue;
    const std::string svg = render_svg(t);
    std::size_t rects = 0;
    for (auto pos = svg.find("<rect "); pos != std::string::npos; pos = svg.find("<rect ", pos + 1)) ++rects;
    if (rects != t.size()) out.fail(name + ": rectangle count");
    Rational area;
    for (const Cube& c : t.cubes()) area += c.side * c.side;
    if (area != t.target() * t.target()) out.fail(name + ": area sum");
    ++rendered;
  }
  if (out.ok) out.detail = std::to_string(corpus.size()) + " round trips, " + std::to_string(rendered) + " SVGs";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "shell construction counts", 1.0, shell_counts},
      {"AC2", "convexity inequality", 1.0, convexity},
      {"AC3", "theorem property over corpus", 60.0, theorem_property},
      {"AC4", "claims suite on perfect grids", 60.0, claims_suite},
      {"AC5", "counterexample stab count", 1.0, counterexample},
      {"AC6", "Hadwiger gaps at desk scale", 300.0, hadwiger_gaps},
      {"AC7", "contrapositive ratio bound", 300.0, ratio_bound, "AC6"},
      {"AC8", "round trip and rendering", 10.0, round_trip_and_render},
  };

  int failures = 0;
  std::map<std::string, double> elapsed;
  for (const Criterion& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.check(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    elapsed[c.id] = secs;
    double charged = secs;
    if (!c.shares_budget_with.empty()) charged += elapsed[c.shares_budget_with];
    if (charged >= c.budget_seconds) out.fail("over time budget");
    failures += !out.ok;
    std::cout << (out.ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << std::fixed
              << std::setprecision(3) << secs << " s, budget " << std::setprecision(0) << c.budget_seconds
              << " s): " << out.detail << std::endl;
  }
  std::cout << (failures ? "acceptance FAILED: " : "acceptance passed: ") << criteria.size() - failures << "/"
            << criteria.size() << " criteria" << std::endl;
  return failures ? 1 : 0;
}
