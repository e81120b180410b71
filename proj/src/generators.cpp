#include "cubetess/generators.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "cubetess/error.hpp"

namespace cubetess {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(Errc::DomainError, what);
}

// Calls f on every point of {0..m-1}^d in lexicographic order.
void for_each_cell(int d, int m, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    f(idx);
    std::size_t k = idx.size();
    while (k > 0 && ++idx[k - 1] == m) idx[--k] = 0;
    if (k == 0) return;
  }
}

Tessellation sorted_tessellation(int d, Rational z, std::vector<Cube> cubes) {
  std::sort(cubes.begin(), cubes.end(), corner_less);
  return Tessellation(d, std::move(z), std::move(cubes));
}

}  // namespace

Tessellation perfect_grid(int d, int m, const Rational& s) {
  require(d >= 2, "perfect_grid: d must be >= 2");
  require(m >= 1, "perfect_grid: m must be >= 1");
  require(s.sign() > 0, "perfect_grid: side must be positive");
  std::vector<Cube> cubes;
  for_each_cell(d, m, [&](const std::vector<int>& idx) {
    Cube c{{}, s};
    for (int i : idx) c.corner.push_back(Rational(i) * s);
    cubes.push_back(std::move(c));
  });
  return Tessellation(d, Rational(m) * s, std::move(cubes));
}

Tessellation shell_construction(int d, int m) {
  require(d >= 2, "shell_construction: d must be >= 2");
  require(m >= 2, "shell_construction: m must be >= 2");
  std::vector<Cube> cubes;
  for_each_cell(d, m, [&](const std::vector<int>& idx) {
    if (std::find(idx.begin(), idx.end(), 0) == idx.end()) return;
    Cube c{{}, Rational(1)};
    for (int i : idx) c.corner.push_back(Rational(i));
    cubes.push_back(std::move(c));
  });
  const Rational small(m - 1, m);
  for_each_cell(d, m, [&](const std::vector<int>& idx) {
    Cube c{{}, small};
    for (int i : idx) c.corner.push_back(Rational(1) + Rational(i) * small);
    cubes.push_back(std::move(c));
  });
  return sorted_tessellation(d, Rational(m), std::move(cubes));
}

Tessellation merged_block_grid(int d, int m, int k) {
  require(d >= 2, "merged_block_grid: d must be >= 2");
  require(k >= 1 && k <= m, "merged_block_grid: need 1 <= k <= m");
  std::vector<Cube> cubes;
  cubes.push_back(Cube{std::vector<Rational>(static_cast<std::size_t>(d), Rational(0)), Rational(k)});
  for_each_cell(d, m, [&](const std::vector<int>& idx) {
    if (std::all_of(idx.begin(), idx.end(), [k](int i) { return i < k; })) return;
    Cube c{{}, Rational(1)};
    for (int i : idx) c.corner.push_back(Rational(i));
    cubes.push_back(std::move(c));
  });
  return sorted_tessellation(d, Rational(m), std::move(cubes));
}

Tessellation refine(const Tessellation& t, std::size_t index, const Tessellation& inner) {
  if (t.dim() != inner.dim()) throw Error(Errc::DimensionMismatch, "refine: dimensions differ");
  if (index >= t.size()) {
    throw Error(Errc::IndexOutOfRange, "refine: index " + std::to_string(index) + " >= n = " +
                                           std::to_string(t.size()));
  }
  const Cube& host = t[index];
  const Rational factor = host.side / inner.target();
  std::vector<Cube> cubes;
  cubes.reserve(t.size() + inner.size() - 1);
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i != index) cubes.push_back(t[i]);
  }
  for (const Cube& c : inner.cubes()) {
    Cube placed{{}, c.side * factor};
    for (int k = 0; k < t.dim(); ++k) placed.corner.push_back(host.corner[k] + c.corner[k] * factor);
    cubes.push_back(std::move(placed));
  }
  return sorted_tessellation(t.dim(), t.target(), std::move(cubes));
}

}  // namespace cubetess
