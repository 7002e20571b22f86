#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scfgrid/grid.hpp"

namespace scfgrid {

// Segment-group sizes (q_1, ..., q_s): q_1 rows of a, then q_2 columns of b,
// then q_3 rows of a, and so on until the triangle is filled.
//
// Valid iff s >= 1, q_1 >= 0, q_i >= 1 for i >= 2, and the terms sum to n+1.
// The constant rules are (n+1) and (0, n+1).
class ABList {
 public:
  // Throws DomainError when the terms do not form a valid list for n.
  ABList(int n, std::vector<int> terms);

  // Reason the terms are invalid, or nullopt.
  static std::optional<std::string> check(int n, std::span<const int> terms);

  int n() const noexcept { return n_; }
  const std::vector<int>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  int operator[](std::size_t i) const { return terms_.at(i); }

  // Outcome under unanimous indifference.
  Alternative at_origin() const noexcept { return terms_.front() > 0 ? Alternative::A : Alternative::B; }

  friend bool operator==(const ABList&, const ABList&) = default;
  friend std::strong_ordering operator<=>(const ABList& x, const ABList& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.terms_ <=> y.terms_;
  }

 private:
  int n_;
  std::vector<int> terms_;
};

std::string format_terms(std::span<const int> terms);

// Cone vertices: {f=a} = qa + ConeA and {f=b} = qb + ConeB.
struct AnchorSets {
  PointSet qa;
  PointSet qb;
};

AnchorSets anchors(const ABList& q);

GridFunction build_f_from_q(const ABList& q);

// Reads the list back off a dually monotone function by alternately counting
// a-rows up the left edge of the remaining triangle and b-columns along its
// bottom edge. Throws DomainError if f is not dually monotone.
ABList decompose(const GridFunction& f);

// All 2^(n+1) lists for n in lexicographic order.
std::vector<ABList> enumerate_ablists(const Grid& g);

// The maximal segment groups of f_q: group i covers
// rows (odd i) or columns (even i) of the shrinking triangle.
struct SegmentGroup {
  Alternative value;   // a: horizontal rows, b: vertical columns
  int first;           // first row (a) or column (b) index
  int count;           // q_i
  int start;           // column (a) or row (b) where each segment starts
};

std::vector<SegmentGroup> segment_groups(const ABList& q);

}  // namespace scfgrid
