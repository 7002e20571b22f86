#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scfgrid {

enum class Alternative : std::uint8_t { A, B };

constexpr Alternative other(Alternative x) noexcept {
  return x == Alternative::A ? Alternative::B : Alternative::A;
}

constexpr char to_char(Alternative x) noexcept { return x == Alternative::A ? 'a' : 'b'; }

// Tally pair: k voters prefer a, m prefer b. Indifferent count is n - k - m.
struct GridPoint {
  int k = 0;
  int m = 0;

  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

using PointSet = std::set<GridPoint>;

// The integer triangle G = {(k, m) : k, m >= 0, k + m <= n}.
class Grid {
 public:
  explicit Grid(int n);

  int n() const noexcept { return n_; }

  // (n+1)(n+2)/2
  std::size_t size() const noexcept;

  bool contains(GridPoint p) const noexcept {
    return p.k >= 0 && p.m >= 0 && p.k + p.m <= n_;
  }

  int indifferent(GridPoint p) const noexcept { return n_ - p.k - p.m; }

  // Position of p in canonical order (m ascending, then k ascending).
  std::size_t index(GridPoint p) const noexcept {
    const auto m = static_cast<std::size_t>(p.m);
    const auto width = static_cast<std::size_t>(n_) + 1;
    return m * width - m * (m - 1) / 2 + static_cast<std::size_t>(p.k);
  }

  void require(GridPoint p) const;

 private:
  int n_;
};

std::vector<GridPoint> grid_points(const Grid& g);

// Displacement cones. ConeA = {(a, b) : a >= 0, b <= 0}; ConeB is its negation.
enum class Cone : std::uint8_t { A, B };

constexpr bool in_cone(Cone c, int dk, int dm) noexcept {
  return c == Cone::A ? (dk >= 0 && dm <= 0) : (dk <= 0 && dm >= 0);
}

// (H + C) intersected with G. Throws DomainError if H has a point outside G.
PointSet cone_shift(const PointSet& h, Cone c, const Grid& g);

// A total map G -> {a, b}, stored densely in canonical order.
class GridFunction {
 public:
  GridFunction(const Grid& g, std::vector<Alternative> table);

  static GridFunction constant(const Grid& g, Alternative value);

  // Bit i of `bits` set means the i-th point in canonical order maps to b.
  // Requires |G| <= 64.
  static GridFunction from_bits(const Grid& g, std::uint64_t bits);

  // Cells over "ab" in canonical order.
  static GridFunction from_cells(int n, std::string_view cells);

  const Grid& grid() const noexcept { return grid_; }
  int n() const noexcept { return grid_.n(); }

  Alternative operator()(GridPoint p) const;
  Alternative operator()(int k, int m) const { return (*this)(GridPoint{k, m}); }

  // Unchecked access for hot loops; p must lie in G.
  Alternative at_unchecked(GridPoint p) const noexcept { return table_[grid_.index(p)]; }

  const std::vector<Alternative>& table() const noexcept { return table_; }

  std::string cells() const;

  PointSet region(Alternative value) const;

  // (k, m) -> (m, k) with a and b exchanged.
  GridFunction mirrored() const;

  friend bool operator==(const GridFunction& x, const GridFunction& y) {
    return x.n() == y.n() && x.table_ == y.table_;
  }

 private:
  Grid grid_;
  std::vector<Alternative> table_;
};

// f(k,m) = a implies f(k+1,m) = f(k,m-1) = a, wherever those points lie in G.
bool is_dually_monotone(const GridFunction& f);

// The four equivalent characterizations of dual monotonicity, each evaluated
// on its own.
struct TfaeReport {
  bool a_implication = false;      // f=a  =>  f(k+1,m) = f(k,m-1) = a
  bool b_implication = false;      // f=b  =>  f(k-1,m) = f(k,m+1) = b
  bool a_comprehensive = false;    // {f=a} + ConeA  subset of {f=a}
  bool b_comprehensive = false;    // {f=b} + ConeB  subset of {f=b}

  bool consistent() const noexcept {
    return a_implication == b_implication && a_implication == a_comprehensive &&
           a_implication == b_comprehensive;
  }
};

TfaeReport tfae_check(const GridFunction& f);

}  // namespace scfgrid
