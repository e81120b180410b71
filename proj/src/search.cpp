#include "cubetess/search.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "cubetess/error.hpp"

namespace cubetess {

namespace {

struct Placement {
  std::size_t cell;
  int side;
};

using Layout = std::vector<Placement>;

constexpr std::uint64_t kMaxCells = std::uint64_t{1} << 26;

std::uint64_t upow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> node_limit_hit{false};
};

// Depth-first corner-filling search over one occupancy grid.
class Searcher {
 public:
  Searcher(const SearchConfig& cfg, SharedState& shared, std::size_t tiling_limit)
      : cfg_(cfg),
        shared_(shared),
        d_(cfg.d),
        L_(cfg.L),
        side_min_(cfg.side_min),
        side_max_(cfg.side_max.value_or(cfg.L)),
        tiling_limit_(tiling_limit),
        occupied_(upow(static_cast<std::uint64_t>(L_), d_), 0),
        stride_(static_cast<std::size_t>(d_)) {
    for (int k = d_ - 1; k >= 0; --k) {
      stride_[k] = k == d_ - 1 ? 1 : stride_[k + 1] * static_cast<std::size_t>(L_);
    }
    max_piece_volume_ = upow(static_cast<std::uint64_t>(side_max_), d_);
    min_piece_volume_ = upow(static_cast<std::uint64_t>(side_min_), d_);
  }

  std::uint64_t total_volume() const { return occupied_.size(); }

  // Counts the node, records complete tilings and applies the volume bounds.
  // Returns true if the node should be expanded.
  bool enter(std::uint64_t remaining) {
    if (stopped()) return false;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > cfg_.node_limit) {
      shared_.node_limit_hit = true;
      return false;
    }
    const std::uint64_t placed = layout_.size();
    if (remaining == 0) {
      if (!cfg_.n || placed == static_cast<std::uint64_t>(*cfg_.n)) {
        found_.push_back(layout_);
        if (found_.size() >= tiling_limit_) limit_hit_ = true;
      }
      return false;
    }
    if (cfg_.n) {
      const auto n = static_cast<std::uint64_t>(*cfg_.n);
      if (placed >= n) return false;
      const std::uint64_t left = n - placed;
      if (remaining < left * min_piece_volume_ || remaining > left * max_piece_volume_) return false;
    }
    if (cfg_.n_max) {
      const std::uint64_t need = (remaining + max_piece_volume_ - 1) / max_piece_volume_;
      if (placed + need > static_cast<std::uint64_t>(*cfg_.n_max)) return false;
    }
    return true;
  }

  std::size_t next_free(std::size_t cursor) const {
    while (occupied_[cursor]) ++cursor;
    return cursor;
  }

  // Sides that fit with minimal corner at `cell`, increasing.
  std::vector<int> child_sides(std::size_t cell) const {
    std::vector<int> sides;
    for (int s = side_min_; s <= side_max_ && fits(cell, s); ++s) sides.push_back(s);
    return sides;
  }

  void place(std::size_t cell, int s) {
    mark(cell, s, 1);
    layout_.push_back({cell, s});
  }

  void unplace() {
    mark(layout_.back().cell, layout_.back().side, 0);
    layout_.pop_back();
  }

  void dfs(std::size_t cursor, std::uint64_t remaining) {
    if (!enter(remaining)) return;
    const std::size_t cell = next_free(cursor);
    for (int s : child_sides(cell)) {
      place(cell, s);
      dfs(cell + 1, remaining - upow(static_cast<std::uint64_t>(s), d_));
      unplace();
      if (stopped()) return;
    }
  }

  std::vector<Layout>& found() { return found_; }
  bool limit_hit() const { return limit_hit_; }

 private:
  bool stopped() const { return limit_hit_ || shared_.node_limit_hit.load(std::memory_order_relaxed); }

  int coord(std::size_t cell, int k) const { return static_cast<int>(cell / stride_[k] % L_); }

  template <typename F>
  bool all_cells(std::size_t base, int s, F&& f) const {
    std::vector<int> off(static_cast<std::size_t>(d_), 0);
    while (true) {
      std::size_t idx = base;
      for (int k = 0; k < d_; ++k) idx += static_cast<std::size_t>(off[k]) * stride_[k];
      if (!f(idx)) return false;
      int k = d_;
      while (k > 0 && ++off[k - 1] == s) off[--k] = 0;
      if (k == 0) return true;
    }
  }

  bool fits(std::size_t cell, int s) const {
    for (int k = 0; k < d_; ++k) {
      if (coord(cell, k) + s > L_) return false;
    }
    return all_cells(cell, s, [this](std::size_t i) { return !occupied_[i]; });
  }

  void mark(std::size_t cell, int s, std::uint8_t value) {
    all_cells(cell, s, [&](std::size_t i) {
      occupied_[i] = value;
      return true;
    });
  }

  const SearchConfig& cfg_;
  SharedState& shared_;
  int d_;
  int L_;
  int side_min_;
  int side_max_;
  std::size_t tiling_limit_;
  std::uint64_t max_piece_volume_ = 1;
  std::uint64_t min_piece_volume_ = 1;
  std::vector<std::uint8_t> occupied_;
  std::vector<std::size_t> stride_;
  Layout layout_;
  std::vector<Layout> found_;
  bool limit_hit_ = false;
};

void check_config(const SearchConfig& cfg) {
  auto fail = [](const std::string& what) { throw Error(Errc::DomainError, "search: " + what); };
  if (cfg.d < 2) fail("d must be >= 2");
  if (cfg.L < 1) fail("L must be >= 1");
  const int side_max = cfg.side_max.value_or(cfg.L);
  if (cfg.side_min < 1 || cfg.side_min > side_max || side_max > cfg.L) {
    fail("need 1 <= side_min <= side_max <= L");
  }
  if (cfg.n && *cfg.n < 1) fail("n must be >= 1");
  if (cfg.n_max && *cfg.n_max < 1) fail("n_max must be >= 1");
  if (cfg.tiling_limit == 0) fail("tiling_limit must be >= 1");
  std::uint64_t cells = 1;
  for (int k = 0; k < cfg.d; ++k) {
    cells *= static_cast<std::uint64_t>(cfg.L);
    if (cells > kMaxCells) fail("lattice too large");
  }
}

Tessellation to_tessellation(const Layout& layout, int d, int L) {
  std::vector<Cube> cubes;
  cubes.reserve(layout.size());
  for (const Placement& p : layout) {
    Cube c{std::vector<Rational>(static_cast<std::size_t>(d)), Rational(p.side, L)};
    std::size_t rest = p.cell;
    for (int k = d - 1; k >= 0; --k) {
      c.corner[k] = Rational(static_cast<int>(rest % static_cast<std::size_t>(L)), L);
      rest /= static_cast<std::size_t>(L);
    }
    cubes.push_back(std::move(c));
  }
  return Tessellation(d, Rational(1), std::move(cubes));
}

}  // namespace

SearchOutcome search_tilings(const SearchConfig& cfg) {
  check_config(cfg);
  SharedState shared;
  Searcher root(cfg, shared, cfg.tiling_limit);
  const std::uint64_t volume = root.total_volume();

  // Split on the first placement (the cube at the origin); subtrees are
  // independent and their results are concatenated in side order.
  std::vector<int> first_sides;
  if (root.enter(volume)) first_sides = root.child_sides(0);
  std::vector<std::vector<Layout>> per_subtree(first_sides.size());
  bool limit_hit = false;

  auto run_subtree = [&](std::size_t i, std::size_t limit) {
    Searcher sub(cfg, shared, limit);
    const int s = first_sides[i];
    sub.place(0, s);
    sub.dfs(1, volume - upow(static_cast<std::uint64_t>(s), cfg.d));
    per_subtree[i] = std::move(sub.found());
    return sub.limit_hit();
  };

  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1 || first_sides.size() < 2) {
    std::size_t collected = 0;
    for (std::size_t i = 0; i < first_sides.size(); ++i) {
      limit_hit = run_subtree(i, cfg.tiling_limit - collected);
      collected += per_subtree[i].size();
      if (limit_hit || shared.node_limit_hit) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < std::min<std::size_t>(threads, first_sides.size()); ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < first_sides.size(); i = next++) run_subtree(i, cfg.tiling_limit);
      });
    }
  }

  SearchOutcome outcome;
  for (auto& layouts : per_subtree) {
    for (const Layout& layout : layouts) {
      if (outcome.tilings.size() == cfg.tiling_limit) break;
      outcome.tilings.push_back(to_tessellation(layout, cfg.d, cfg.L));
    }
  }
  if (outcome.tilings.size() >= cfg.tiling_limit) limit_hit = true;
  outcome.exhausted = !limit_hit && !shared.node_limit_hit;
  outcome.nodes_visited = shared.nodes.load();
  return outcome;
}

FeasibleCounts feasible_counts(int d, int L, int n_max, std::uint64_t node_limit, unsigned threads) {
  if (L < 1 || n_max < 1) throw Error(Errc::DomainError, "feasible_counts: need L >= 1 and n_max >= 1");
  FeasibleCounts result;
  for (int scale = 1; scale <= L; ++scale) {
    auto& at_scale = result.by_scale[scale];
    for (int n = 1; n <= n_max; ++n) {
      SearchConfig cfg;
      cfg.d = d;
      cfg.L = scale;
      cfg.n = n;
      cfg.tiling_limit = 1;
      cfg.node_limit = node_limit;
      cfg.threads = threads;
      SearchOutcome out = search_tilings(cfg);
      if (!out.tilings.empty()) {
        at_scale.insert(n);
        result.counts.insert(n);
      } else if (!out.exhausted) {
        result.exhausted = false;
      }
    }
  }
  return result;
}

ExtremalRatio extremal_ratio(int d, int L, int n, std::uint64_t node_limit, unsigned threads) {
  SearchConfig cfg;
  cfg.d = d;
  cfg.L = L;
  cfg.n = n;
  cfg.node_limit = node_limit;
  cfg.threads = threads;
  SearchOutcome out = search_tilings(cfg);
  ExtremalRatio result;
  result.exhausted = out.exhausted;
  result.tilings = out.tilings.size();
  for (const Tessellation& t : out.tilings) {
    Rational r = min_side(t) / max_side(t);
    if (!result.ratio || r > *result.ratio) result.ratio = r;
  }
  return result;
}

}  // namespace cubetess
