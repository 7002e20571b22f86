#include "scfgrid/ablist.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "scfgrid/error.hpp"

namespace scfgrid {

std::optional<std::string> ABList::check(int n, std::span<const int> terms) {
  if (n < 0) return "grid size must be nonnegative";
  if (terms.empty()) return "list must have at least one term";
  if (terms[0] < 0) return "first term must be nonnegative";
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i] < 1) return "term " + std::to_string(i + 1) + " must be at least 1";
  long long sum = 0;
  for (int t : terms) sum += t;
  if (sum != static_cast<long long>(n) + 1) {
    return "terms sum to " + std::to_string(sum) + ", expected n+1 = " + std::to_string(n + 1);
  }
  return std::nullopt;
}

ABList::ABList(int n, std::vector<int> terms) : n_(n), terms_(std::move(terms)) {
  if (auto why = check(n_, terms_)) throw DomainError("invalid {a,b}-list " + format_terms(terms_) + ": " + *why);
}

std::string format_terms(std::span<const int> terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(terms[i]);
  }
  return s;
}

AnchorSets anchors(const ABList& q) {
  AnchorSets out;
  int k = 0;  // columns consumed by b-groups
  int m = 0;  // rows consumed by a-groups
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i % 2 == 0) {
      m += q[i];
      if (q[i] > 0) out.qa.insert({k, m - 1});
    } else {
      k += q[i];
      out.qb.insert({k - 1, m});
    }
  }
  return out;
}

GridFunction build_f_from_q(const ABList& q) {
  const Grid g(q.n());
  const auto [qa, qb] = anchors(q);
  const PointSet a_region = cone_shift(qa, Cone::A, g);
  const PointSet b_region = cone_shift(qb, Cone::B, g);

  std::vector<Alternative> table(g.size());
  for (const auto& p : grid_points(g)) {
    const bool in_a = a_region.contains(p);
    const bool in_b = b_region.contains(p);
    if (in_a == in_b) {
      throw InternalError("anchor regions of " + format_terms(q.terms()) + (in_a ? " overlap" : " miss") +
                          " at (" + std::to_string(p.k) + "," + std::to_string(p.m) + ")");
    }
    table[g.index(p)] = in_a ? Alternative::A : Alternative::B;
  }
  return GridFunction(g, std::move(table));
}

ABList decompose(const GridFunction& f) {
  if (!is_dually_monotone(f)) throw DomainError("decompose requires a dually monotone function");

  const int n = f.n();
  std::vector<int> terms;
  int k = 0;
  int m = 0;
  while (k + m <= n) {
    int run = 0;
    if (terms.size() % 2 == 0) {
      while (k + m + run <= n && f.at_unchecked({k, m + run}) == Alternative::A) ++run;
      m += run;
    } else {
      while (k + run + m <= n && f.at_unchecked({k + run, m}) == Alternative::B) ++run;
      k += run;
    }
    if (run == 0 && !terms.empty()) throw InternalError("decompose stalled on an empty segment group");
    terms.push_back(run);
  }
  if (k + m != n + 1) throw InternalError("decompose overran the grid");

  ABList q(n, std::move(terms));
  if (build_f_from_q(q) != f) throw InternalError("decomposed list " + format_terms(q.terms()) + " does not rebuild f");
  return q;
}

std::vector<ABList> enumerate_ablists(const Grid& g) {
  const int total = g.n() + 1;
  std::vector<ABList> out;
  std::vector<int> prefix;
  std::function<void(int)> extend = [&](int remaining) {
    if (remaining == 0) {
      out.emplace_back(g.n(), prefix);
      return;
    }
    const int lo = prefix.empty() ? 0 : 1;
    for (int t = lo; t <= remaining; ++t) {
      prefix.push_back(t);
      extend(remaining - t);
      prefix.pop_back();
    }
  };
  extend(total);
  return out;
}

std::vector<SegmentGroup> segment_groups(const ABList& q) {
  std::vector<SegmentGroup> out;
  int k = 0;
  int m = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    if (i % 2 == 0) {
      out.push_back({Alternative::A, m, q[i], k});
      m += q[i];
    } else {
      out.push_back({Alternative::B, k, q[i], m});
      k += q[i];
    }
  }
  return out;
}

}  // namespace scfgrid
