#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cyclic/cyclic_vector.hpp"

namespace cyclic {

/// Gradient of S_{n,k} with respect to x:
///   dS/dx_m = 1/t_{m+1,k} - sum_{i=m-k}^{m-1} x_i / t_{i+1,k}^2.
/// Satisfies sum_m x_m dS/dx_m = 0. Throws DomainError on a zero entry.
std::vector<double> gradient(const CyclicVector& x, std::size_t k);

struct MinimizeConfig {
  int restarts = 20;
  std::uint64_t seed = 1;
  int max_iters = 5000;
  double grad_tol = 1e-10;
  /// 0 = read CYCLIC_BOUNDS_THREADS, falling back to the hardware count.
  unsigned threads = 0;
};

/// Best point found for (k/n) S_{n,k}. `value` is an upper bound on
/// (k/n) A(n,k); nothing here certifies it is the infimum.
struct MinimizationResult {
  std::size_t n = 0;
  std::size_t k = 0;
  double value = 0.0;
  CyclicVector x_best{std::vector<double>{1.0}};
  double certified_floor = 0.0;  ///< k(2^{1/k} - 1)
  int restarts_used = 0;
  bool converged = false;
  double gradient_norm = 0.0;
};

/// Local descent from one start: L-BFGS in y = ln x on the gauge sum(y) = 0,
/// Armijo backtracking, stopping when |grad_y| <= grad_tol or after max_iters.
/// Starts must be strictly positive.
MinimizationResult descend(const CyclicVector& start, std::size_t k, const MinimizeConfig& config);

/// Multi-start minimization: the uniform vector, spike/dip and witness-shaped
/// starts pushed toward the boundary, then `restarts` random starts with
/// ln x_i uniform on [-3, 3]. Smallest value wins; values within 1e-12 go to
/// the earliest start. A non-converged best start is reported, not thrown.
///
/// Throws DomainError unless n >= k >= 1, restarts >= 0, max_iters >= 1.
MinimizationResult minimize(std::size_t n, std::size_t k, const MinimizeConfig& config = {});

/// The deterministic start vectors used by minimize. Spikes, dips and the
/// zero slots of the witness shape (k >= 2, k | n, n >= 2k) each come at
/// log-depths 3, 6 and 12, so boundary infima are approached along a sequence.
std::vector<CyclicVector> structured_starts(std::size_t n, std::size_t k);

inline constexpr std::size_t kGridOracleMaxN = 5;
inline constexpr double kGridOracleBudget = 1e8;

/// 40 geometric levels spanning [1e-3, 1e3].
std::vector<double> default_grid_levels();

/// Brute-force minimum of (k/n) S_{n,k} over x_1 = the middle level and
/// x_2..x_n ranging over `levels`. Throws DomainError if n > 5 or k is out
/// of range, CapacityError if |levels|^{n-1} exceeds 1e8.
double grid_oracle(std::size_t n, std::size_t k, std::span<const double> levels);

}  // namespace cyclic
