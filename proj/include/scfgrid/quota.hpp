#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "scfgrid/ablist.hpp"
#include "scfgrid/error.hpp"
#include "scfgrid/grid.hpp"

namespace scfgrid {

// Up-and-down majority quotas (k_0, ..., k_r). Holds arbitrary values; use
// validate_quota_sequence before interpreting one.
struct QuotaSequence {
  int n = 0;
  std::vector<int> quotas;

  int terminal() const { return quotas.back(); }
  int r() const { return static_cast<int>(quotas.size()) - 1; }

  friend bool operator==(const QuotaSequence&, const QuotaSequence&) = default;
};

// n + 1 - k. Order reversing involution on [0, n+1].
int dual_quota(int k, const Grid& g);

// Quotas fan out strictly and alternately around k_0: k_1 on one side, k_2 on
// the other, each one farther from k_0 than the previous quota on its side.
// k_0..k_{r-1} lie in [1, n] and k_r is 0 or n+1. r = 0 admits only (0) and
// (n+1), the two constant rules.
std::optional<std::string> quota_sequence_error(const QuotaSequence& ks);

inline bool validate_quota_sequence(const QuotaSequence& ks) { return !quota_sequence_error(ks); }

// Quotas to {a,b}-list by the closed-form differences. k_r = 0 gives a list
// with q_1 > 0, k_r = n+1 a list starting with 0.
ABList q_from_quotas(const QuotaSequence& ks);
// Same conversion computed as T * y.
ABList q_from_quotas_matrix(const QuotaSequence& ks);

// Inverse conversion by running parity sums of the list terms.
QuotaSequence quotas_from_q(const ABList& q);
// Same conversion computed as T^-1 * x.
QuotaSequence quotas_from_q_matrix(const ABList& q);

// Evaluates the quota rule at pt from its box decomposition, without passing
// through an {a,b}-list:
//   a  iff  k >= k_i and m < n+1 - max{k_j >= k_0 : j < i}   for some k_i <= k_0,
//   b  iff  m >= n+1 - k_i and k < min{k_j <= k_0 : j < i}   for some k_i >= k_0,
// where the i = 0 terms are the half-planes k >= k_0 and m >= n+1 - k_0.
// Throws InternalError if the two descriptions do not partition G.
Alternative eval_quota_regions(const QuotaSequence& ks, GridPoint pt);

GridFunction build_f_from_quotas(const QuotaSequence& ks);

// Every valid quota sequence for the grid, generated directly from the
// fan-out rule.
std::vector<QuotaSequence> enumerate_quota_sequences(const Grid& g);

// T has unit diagonal and -1 two places below it; T^-1 has ones on every
// second subdiagonal.
template <typename Scalar = int>
struct ConversionMatrix {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix forward;
  Matrix inverse;

  Eigen::Index order() const { return forward.rows(); }
};

template <typename Scalar = int>
ConversionMatrix<Scalar> build_T(int r) {
  if (r < 1) throw DomainError("conversion matrix order must be at least 1");
  using Matrix = typename ConversionMatrix<Scalar>::Matrix;
  Matrix t = Matrix::Identity(r, r);
  Matrix inv = Matrix::Zero(r, r);
  for (int i = 0; i < r; ++i) {
    if (i >= 2) t(i, i - 2) = Scalar(-1);
    for (int j = i; j >= 0; j -= 2) inv(i, j) = Scalar(1);
  }
  return {std::move(t), std::move(inv)};
}

}  // namespace scfgrid
