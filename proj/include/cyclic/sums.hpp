#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclic/cyclic_vector.hpp"

namespace cyclic {

/// t_{i,k} = x_i + x_{i+1} + ... + x_{i+k-1}, cyclic. Throws
/// InvalidWindowError unless 1 <= k <= n.
double interval_sum(const CyclicVector& x, std::int64_t i, std::size_t k);

/// S_{n,k}(x) = sum_i x_i / t_{i+1,k}.
///
/// Throws DomainError (index = offending window start) when some
/// t_{i+1,k} vanishes.
double diananda_sum(const CyclicVector& x, std::size_t k);

/// (k/n) S_{n,k}(x), the quantity bounded by B(k).
double normalized_diananda_sum(const CyclicVector& x, std::size_t k);

/// sum_i x_i / t_{i,k}; the numerator sits inside its own window, so each
/// term lies in [0, 1].
double baston_sum(const CyclicVector& x, std::size_t k);

/// Concatenation of `copies` copies of x. S_{n,k}/n is preserved.
CyclicVector replicate(const CyclicVector& x, std::size_t copies);

/// For n = k*nu, appends a zero after each block of k entries, giving a
/// vector of length (k+1)*nu with S_{(k+1)nu,k+1}(x') = S_{k nu,k}(x).
/// Throws ShapeError if k does not divide n.
CyclicVector zero_insert(const CyclicVector& x, std::size_t k);

/// Block ratios and partial sums for n = k*nu:
///   r_j = t_{kj+1,k} / t_{k(j+1)+1,k},
///   s_j = sum_{i=1..k} x_{jk+i} / t_{jk+i+1,k},   j = 0..nu-1.
struct BlockDiagnostics {
  std::size_t k = 0;
  std::size_t nu = 0;
  std::vector<double> ratios;
  std::vector<double> partials;
};

/// Throws ShapeError when k does not divide n, DomainError on a zero entry.
BlockDiagnostics block_diagnostics(const CyclicVector& x, std::size_t k);

}  // namespace cyclic
