#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "cubetess/geometry.hpp"

namespace cubetess {

/// Exhaustive search for tilings of the unit d-cube whose coordinates are
/// multiples of 1/L. Sides are counted in lattice units. A run at one scale
/// is a bounded oracle: finding nothing does not prove n is impossible at
/// finer scales.
struct SearchConfig {
  int d = 2;
  int L = 1;
  std::optional<int> n;      // exact piece count
  std::optional<int> n_max;  // piece count cap
  int side_min = 1;
  std::optional<int> side_max;  // defaults to L
  std::size_t tiling_limit = std::numeric_limits<std::size_t>::max();
  std::uint64_t node_limit = 100'000'000;
  unsigned threads = 1;
};

struct SearchOutcome {
  std::vector<Tessellation> tilings;  // target 1, canonical placement order
  bool exhausted = false;
  std::uint64_t nodes_visited = 0;
};

/// Corner-filling backtracking: always fill the lexicographically least
/// uncovered cell, trying sides in increasing order. Every geometric tiling
/// appears exactly once; symmetric copies are not merged. Throws
/// Error(DomainError) on an inconsistent config.
SearchOutcome search_tilings(const SearchConfig& cfg);

struct FeasibleCounts {
  /// Union over all scales 1..L.
  std::set<int> counts;
  std::map<int, std::set<int>> by_scale;
  /// False if any underlying run was cut short by a limit.
  bool exhausted = true;
};

/// Piece counts n <= n_max realized by some tiling at a scale L' <= L.
/// Positive certificates only.
FeasibleCounts feasible_counts(int d, int L, int n_max,
                               std::uint64_t node_limit = 100'000'000, unsigned threads = 1);

struct ExtremalRatio {
  std::optional<Rational> ratio;  // max over tilings of min side / max side
  std::size_t tilings = 0;
  bool exhausted = false;
};

ExtremalRatio extremal_ratio(int d, int L, int n, std::uint64_t node_limit = 100'000'000,
                             unsigned threads = 1);

}  // namespace cubetess
