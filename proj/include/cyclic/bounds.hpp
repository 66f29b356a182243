#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclic/optimize.hpp"
#include "cyclic/tangent.hpp"

namespace cyclic {

/// lower = k(2^{1/k} - 1) <= B(k) <= upper = gamma_k. The limit row
/// (k = nullopt) carries ln 2 and gamma_inf, the brackets of C.
struct BoundsRow {
  std::optional<int> k;
  double lower = 0.0;
  double upper = 0.0;
  double gap = 0.0;

  std::string label() const { return k ? std::to_string(*k) : "inf"; }
};

/// Rows for k = 2..k_max, then the limit row. Throws DomainError for
/// k_max < 2; tangent-solver errors propagate.
std::vector<BoundsRow> bounds_table(int k_max, double tol = kDefaultTangentTol);

/// Empty when ln 2 < lower < upper < 1 holds; otherwise names the failure.
std::optional<std::string> check_row(const BoundsRow& row);

/// Empty when every row is valid, both columns strictly decrease and the
/// limit row sits below all finite rows.
std::optional<std::string> check_table(const std::vector<BoundsRow>& rows);

/// gamma_3 / 3 against the earlier numerical estimate inf_n A(n,3)/n <= 0.32598.
struct BoarderDaykinReport {
  double gamma3 = 0.0;
  double gamma3_over_3 = 0.0;
  double threshold = 0.32598 - 0.5e-5;
  bool holds = false;  ///< gamma3 / 3 > threshold
};

BoarderDaykinReport boarder_daykin_check(double tol = kDefaultTangentTol);

struct LimitIdentityRow {
  std::size_t nu = 0;
  double sum_k = 0.0;          ///< S_{k nu, k}(x)
  double sum_k_plus_1 = 0.0;   ///< S_{(k+1) nu, k+1}(zero_insert(x))
  double insert_rel_err = 0.0;
  double replicate_rel_err = 0.0;  ///< |S(rep x)/(2n) - S(x)/n| / (S(x)/n)
  double min_k = 0.0;          ///< minimize(k nu, k).value
  double min_k_plus_1 = 0.0;   ///< minimize((k+1) nu, k+1).value
  /// min_k_plus_1 <= min_k + 1e-3: A((k+1)nu, k+1) <= A(k nu, k) after
  /// normalisation up to optimizer slack.
  bool direction_holds = false;
};

/// For each nu, draws a random positive x of length k*nu, checks the
/// zero-insert and replication identities and compares minimizer values.
std::vector<LimitIdentityRow> limit_identity_demo(int k, const std::vector<std::size_t>& nus,
                                                  const MinimizeConfig& config = {});

}  // namespace cyclic
