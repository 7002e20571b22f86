#include "scfgrid/quota.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace scfgrid {

int dual_quota(int k, const Grid& g) {
  if (k < 0 || k > g.n() + 1) {
    throw DomainError("quota " + std::to_string(k) + " outside [0, " + std::to_string(g.n() + 1) + "]");
  }
  return g.n() + 1 - k;
}

std::optional<std::string> quota_sequence_error(const QuotaSequence& ks) {
  if (ks.n < 0) return "grid size must be nonnegative";
  if (ks.quotas.empty()) return "quota sequence is empty";
  const int top = ks.n + 1;
  const int r = ks.r();
  const int last = ks.terminal();
  if (last != 0 && last != top) {
    return "terminal quota " + std::to_string(last) + " must be 0 or n+1 = " + std::to_string(top);
  }
  if (r == 0) return std::nullopt;

  const int k0 = ks.quotas[0];
  for (int i = 0; i < r; ++i) {
    const int ki = ks.quotas[static_cast<std::size_t>(i)];
    if (ki < 1 || ki > ks.n) {
      return "quota k_" + std::to_string(i) + " = " + std::to_string(ki) + " must lie in [1, n]";
    }
  }
  for (int i = 1; i <= r; ++i) {
    const int d = ks.quotas[static_cast<std::size_t>(i)] - k0;
    if (d == 0) return "quota k_" + std::to_string(i) + " repeats k_0";
    if (i >= 2) {
      const int prev = ks.quotas[static_cast<std::size_t>(i - 1)] - k0;
      if ((d > 0) == (prev > 0)) return "quotas k_" + std::to_string(i - 1) + ", k_" + std::to_string(i) + " do not alternate around k_0";
    }
    if (i >= 3) {
      const int same_side = ks.quotas[static_cast<std::size_t>(i - 2)] - k0;
      if (std::abs(d) <= std::abs(same_side)) return "quota k_" + std::to_string(i) + " does not fan out past k_" + std::to_string(i - 2);
    }
  }
  return std::nullopt;
}

namespace {

void require_valid(const QuotaSequence& ks) {
  if (auto why = quota_sequence_error(ks)) {
    throw DomainError("invalid quota sequence " + format_terms(ks.quotas) + ": " + *why);
  }
}

// For k_r = 0 the odd positions of y (1-based) carry dual quotas; for
// k_r = n+1 the even ones do.
bool dual_position(int i, bool a_at_origin) { return (i % 2 == 1) == a_at_origin; }

// y_i for i = 1..r, stored 0-based.
std::vector<int> quota_vector(const QuotaSequence& ks) {
  const Grid g(ks.n);
  const int r = ks.r();
  const bool a_at_origin = ks.terminal() == 0;
  std::vector<int> y(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    const int k = ks.quotas[static_cast<std::size_t>(r - i)];
    y[static_cast<std::size_t>(i - 1)] = dual_position(i, a_at_origin) ? dual_quota(k, g) : k;
  }
  return y;
}

QuotaSequence quotas_from_vector(const ABList& q, const std::vector<int>& y) {
  const Grid g(q.n());
  const bool a_at_origin = q.at_origin() == Alternative::A;
  const int r = static_cast<int>(y.size());
  QuotaSequence ks{q.n(), std::vector<int>(static_cast<std::size_t>(r) + 1)};
  for (int i = 1; i <= r; ++i) {
    const int yi = y[static_cast<std::size_t>(i - 1)];
    ks.quotas[static_cast<std::size_t>(r - i)] = dual_position(i, a_at_origin) ? dual_quota(yi, g) : yi;
  }
  ks.quotas.back() = a_at_origin ? 0 : q.n() + 1;
  if (auto why = quota_sequence_error(ks)) {
    throw InternalError("list " + format_terms(q.terms()) + " produced invalid quotas " + format_terms(ks.quotas) + ": " + *why);
  }
  return ks;
}

ABList list_from_differences(const QuotaSequence& ks, const std::vector<int>& x) {
  std::vector<int> terms;
  if (ks.terminal() != 0) terms.push_back(0);
  terms.insert(terms.end(), x.begin(), x.end());
  const int used = std::accumulate(x.begin(), x.end(), 0);
  terms.push_back(ks.n + 1 - used);
  if (auto why = ABList::check(ks.n, terms)) {
    throw InternalError("quotas " + format_terms(ks.quotas) + " produced invalid list " + format_terms(terms) + ": " + *why);
  }
  return ABList(ks.n, std::move(terms));
}

// (q_1..q_r) for k_r = 0, (q_2..q_{r+1}) for k_r = n+1.
std::vector<int> interior_terms(const ABList& q, int& r) {
  const auto& t = q.terms();
  const std::size_t skip = q.at_origin() == Alternative::A ? 0 : 1;
  r = static_cast<int>(t.size()) - 1 - static_cast<int>(skip);
  return {t.begin() + static_cast<std::ptrdiff_t>(skip), t.end() - 1};
}

}  // namespace

ABList q_from_quotas(const QuotaSequence& ks) {
  require_valid(ks);
  const std::vector<int> y = quota_vector(ks);
  std::vector<int> x(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) x[i] = i >= 2 ? y[i] - y[i - 2] : y[i];
  return list_from_differences(ks, x);
}

ABList q_from_quotas_matrix(const QuotaSequence& ks) {
  require_valid(ks);
  const std::vector<int> y = quota_vector(ks);
  if (y.empty()) return list_from_differences(ks, {});
  const auto t = build_T<int>(static_cast<int>(y.size()));
  const Eigen::VectorXi yv = Eigen::Map<const Eigen::VectorXi>(y.data(), static_cast<Eigen::Index>(y.size()));
  const Eigen::VectorXi xv = t.forward * yv;
  return list_from_differences(ks, std::vector<int>(xv.data(), xv.data() + xv.size()));
}

QuotaSequence quotas_from_q(const ABList& q) {
  int r = 0;
  const std::vector<int> x = interior_terms(q, r);
  std::vector<int> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = i >= 2 ? x[i] + y[i - 2] : x[i];
  return quotas_from_vector(q, y);
}

QuotaSequence quotas_from_q_matrix(const ABList& q) {
  int r = 0;
  const std::vector<int> x = interior_terms(q, r);
  if (x.empty()) return quotas_from_vector(q, {});
  const auto t = build_T<int>(r);
  const Eigen::VectorXi xv = Eigen::Map<const Eigen::VectorXi>(x.data(), static_cast<Eigen::Index>(x.size()));
  const Eigen::VectorXi yv = t.inverse * xv;
  return quotas_from_vector(q, std::vector<int>(yv.data(), yv.data() + yv.size()));
}

Alternative eval_quota_regions(const QuotaSequence& ks, GridPoint pt) {
  require_valid(ks);
  Grid(ks.n).require(pt);

  const int top = ks.n + 1;
  const int k0 = ks.quotas.front();
  bool in_a = pt.k >= k0;
  bool in_b = pt.m >= top - k0;
  int highest = k0;  // max quota seen so far on or above k_0
  int lowest = k0;   // min quota seen so far on or below k_0
  for (std::size_t i = 1; i < ks.quotas.size(); ++i) {
    const int ki = ks.quotas[i];
    if (ki < k0) {
      in_a = in_a || (pt.k >= ki && pt.m < top - highest);
      lowest = std::min(lowest, ki);
    } else {
      in_b = in_b || (pt.m >= top - ki && pt.k < lowest);
      highest = std::max(highest, ki);
    }
  }
  if (in_a == in_b) {
    throw InternalError("quota regions of " + format_terms(ks.quotas) + (in_a ? " overlap" : " miss") + " at (" +
                        std::to_string(pt.k) + "," + std::to_string(pt.m) + ")");
  }
  return in_a ? Alternative::A : Alternative::B;
}

GridFunction build_f_from_quotas(const QuotaSequence& ks) {
  require_valid(ks);
  const Grid g(ks.n);
  std::vector<Alternative> table(g.size());
  for (const auto& p : grid_points(g)) table[g.index(p)] = eval_quota_regions(ks, p);
  return GridFunction(g, std::move(table));
}

std::vector<QuotaSequence> enumerate_quota_sequences(const Grid& g) {
  const int n = g.n();
  const int top = n + 1;
  std::vector<QuotaSequence> out;
  out.push_back({n, {0}});

  std::vector<int> seq;
  // `side` is where the next quota must go relative to k_0: +1 above, -1
  // below, 0 for k_1 which may go either way. `low`/`high` are the current
  // extremes, which the next quota must pass.
  std::function<void(int, int, int)> extend = [&](int side, int low, int high) {
    const int k0 = seq.front();
    auto place = [&](int placed_side, int lo, int hi, int nlow, int nhigh) {
      for (int v = lo; v <= hi; ++v) {
        seq.push_back(v);
        if (v == 0 || v == top) out.push_back({n, seq});
        else extend(-placed_side, v < k0 ? v : nlow, v > k0 ? v : nhigh);
        seq.pop_back();
      }
    };
    if (side <= 0) place(-1, 0, low - 1, low, high);
    if (side >= 0) place(+1, high + 1, top, low, high);
  };
  for (int k0 = 1; k0 <= n; ++k0) {
    seq.assign(1, k0);
    extend(0, k0, k0);
  }
  out.push_back({n, {top}});
  return out;
}

}  // namespace scfgrid
