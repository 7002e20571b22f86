#include "scfgrid/grid.hpp"

#include <algorithm>
#include <limits>

#include "scfgrid/error.hpp"

namespace scfgrid {

Grid::Grid(int n) : n_(n) {
  if (n < 0) throw DomainError("grid size must be nonnegative, got " + std::to_string(n));
}

std::size_t Grid::size() const noexcept {
  const auto n = static_cast<std::size_t>(n_);
  return (n + 1) * (n + 2) / 2;
}

void Grid::require(GridPoint p) const {
  if (!contains(p)) {
    throw DomainError("point (" + std::to_string(p.k) + "," + std::to_string(p.m) +
                      ") is outside the grid of size " + std::to_string(n_));
  }
}

std::vector<GridPoint> grid_points(const Grid& g) {
  std::vector<GridPoint> out;
  out.reserve(g.size());
  for (int m = 0; m <= g.n(); ++m)
    for (int k = 0; k + m <= g.n(); ++k) out.push_back({k, m});
  return out;
}

PointSet cone_shift(const PointSet& h, Cone c, const Grid& g) {
  for (const auto& p : h) g.require(p);
  PointSet out;
  if (h.empty()) return out;

  // ConeA: p is reached iff some h has h.k <= p.k and h.m >= p.m, so keep the
  // running max of h.m over columns to the left. ConeB mirrors with a running
  // min over columns to the right.
  const int n = g.n();
  constexpr int none = std::numeric_limits<int>::min();
  std::vector<int> reach(static_cast<std::size_t>(n) + 1, c == Cone::A ? none : std::numeric_limits<int>::max());
  for (const auto& p : h) {
    auto& r = reach[static_cast<std::size_t>(p.k)];
    r = c == Cone::A ? std::max(r, p.m) : std::min(r, p.m);
  }
  if (c == Cone::A) {
    for (int k = 1; k <= n; ++k) reach[k] = std::max(reach[k], reach[k - 1]);
  } else {
    for (int k = n - 1; k >= 0; --k) reach[k] = std::min(reach[k], reach[k + 1]);
  }

  for (const auto& p : grid_points(g)) {
    const int r = reach[static_cast<std::size_t>(p.k)];
    if (c == Cone::A ? p.m <= r : p.m >= r) out.insert(p);
  }
  return out;
}

GridFunction::GridFunction(const Grid& g, std::vector<Alternative> table)
    : grid_(g), table_(std::move(table)) {
  if (table_.size() != grid_.size()) {
    throw DomainError("function table has " + std::to_string(table_.size()) +
                      " cells, grid of size " + std::to_string(grid_.n()) + " needs " +
                      std::to_string(grid_.size()));
  }
}

GridFunction GridFunction::constant(const Grid& g, Alternative value) {
  return GridFunction(g, std::vector<Alternative>(g.size(), value));
}

GridFunction GridFunction::from_bits(const Grid& g, std::uint64_t bits) {
  if (g.size() > 64) throw DomainError("from_bits needs a grid with at most 64 points");
  std::vector<Alternative> table(g.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    table[i] = (bits >> i) & 1U ? Alternative::B : Alternative::A;
  return GridFunction(g, std::move(table));
}

GridFunction GridFunction::from_cells(int n, std::string_view cells) {
  const Grid g(n);
  std::vector<Alternative> table;
  table.reserve(cells.size());
  for (char ch : cells) {
    if (ch == 'a') table.push_back(Alternative::A);
    else if (ch == 'b') table.push_back(Alternative::B);
    else throw DomainError(std::string("invalid cell character '") + ch + "', expected 'a' or 'b'");
  }
  return GridFunction(g, std::move(table));
}

Alternative GridFunction::operator()(GridPoint p) const {
  grid_.require(p);
  return table_[grid_.index(p)];
}

std::string GridFunction::cells() const {
  std::string s;
  s.reserve(table_.size());
  for (auto x : table_) s.push_back(to_char(x));
  return s;
}

PointSet GridFunction::region(Alternative value) const {
  PointSet out;
  for (const auto& p : grid_points(grid_))
    if (at_unchecked(p) == value) out.insert(p);
  return out;
}

GridFunction GridFunction::mirrored() const {
  std::vector<Alternative> table(table_.size());
  for (const auto& p : grid_points(grid_))
    table[grid_.index(p)] = other(at_unchecked({p.m, p.k}));
  return GridFunction(grid_, std::move(table));
}

namespace {

bool a_implication_holds(const GridFunction& f) {
  const Grid& g = f.grid();
  for (const auto& p : grid_points(g)) {
    if (f.at_unchecked(p) != Alternative::A) continue;
    const GridPoint right{p.k + 1, p.m};
    const GridPoint down{p.k, p.m - 1};
    if (g.contains(right) && f.at_unchecked(right) != Alternative::A) return false;
    if (g.contains(down) && f.at_unchecked(down) != Alternative::A) return false;
  }
  return true;
}

bool b_implication_holds(const GridFunction& f) {
  const Grid& g = f.grid();
  for (const auto& p : grid_points(g)) {
    if (f.at_unchecked(p) != Alternative::B) continue;
    const GridPoint left{p.k - 1, p.m};
    const GridPoint up{p.k, p.m + 1};
    if (g.contains(left) && f.at_unchecked(left) != Alternative::B) return false;
    if (g.contains(up) && f.at_unchecked(up) != Alternative::B) return false;
  }
  return true;
}

bool comprehensive(const GridFunction& f, Alternative value, Cone c) {
  const PointSet region = f.region(value);
  const PointSet shifted = cone_shift(region, c, f.grid());
  return std::includes(region.begin(), region.end(), shifted.begin(), shifted.end());
}

}  // namespace

bool is_dually_monotone(const GridFunction& f) { return a_implication_holds(f); }

TfaeReport tfae_check(const GridFunction& f) {
  return {a_implication_holds(f), b_implication_holds(f),
          comprehensive(f, Alternative::A, Cone::A), comprehensive(f, Alternative::B, Cone::B)};
}

}  // namespace scfgrid
