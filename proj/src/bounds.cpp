#include "cyclic/bounds.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "cyclic/errors.hpp"
#include "cyclic/funcs.hpp"
#include "cyclic/sums.hpp"

namespace cyclic {

std::vector<BoundsRow> bounds_table(int k_max, double tol) {
  if (k_max < 2) throw DomainError("bounds table needs k_max >= 2");
  std::vector<BoundsRow> rows;
  for (int k = 2; k <= k_max; ++k) {
    BoundsRow row;
    row.k = k;
    row.lower = jensen_lower_bound(k);
    row.upper = solve_tangent(FamilyIndex::finite(k), tol).gamma;
    row.gap = row.upper - row.lower;
    rows.push_back(row);
  }
  BoundsRow limit;
  limit.lower = std::numbers::ln2;
  limit.upper = solve_tangent(FamilyIndex::infinity(), tol).gamma;
  limit.gap = limit.upper - limit.lower;
  rows.push_back(limit);
  return rows;
}

std::optional<std::string> check_row(const BoundsRow& row) {
  const bool limit = !row.k.has_value();
  const bool lower_ok = limit ? row.lower == std::numbers::ln2 : row.lower > std::numbers::ln2;
  if (!lower_ok || !(row.lower < row.upper) || !(row.upper < 1.0)) {
    return "row k=" + row.label() + " violates ln 2 < lower < upper < 1";
  }
  if (!(row.gap > 0.0)) return "row k=" + row.label() + " has nonpositive gap";
  return std::nullopt;
}

std::optional<std::string> check_table(const std::vector<BoundsRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (auto err = check_row(rows[i])) return err;
    if (i == 0) continue;
    const BoundsRow& prev = rows[i - 1];
    if (!(rows[i].lower < prev.lower) || !(rows[i].upper < prev.upper)) {
      return "columns not strictly decreasing at k=" + rows[i].label();
    }
  }
  return std::nullopt;
}

BoarderDaykinReport boarder_daykin_check(double tol) {
  BoarderDaykinReport r;
  r.gamma3 = solve_tangent(FamilyIndex::finite(3), tol).gamma;
  r.gamma3_over_3 = r.gamma3 / 3.0;
  r.holds = r.gamma3_over_3 > r.threshold;
  return r;
}

std::vector<LimitIdentityRow> limit_identity_demo(int k, const std::vector<std::size_t>& nus,
                                                  const MinimizeConfig& config) {
  if (k < 1) throw DomainError("limit identity demo needs k >= 1");
  const auto kk = static_cast<std::size_t>(k);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> logs(-3.0, 3.0);
  std::vector<LimitIdentityRow> out;
  for (std::size_t nu : nus) {
    if (nu < 1) throw DomainError("limit identity demo needs nu >= 1");
    std::vector<double> v(kk * nu);
    for (double& e : v) e = std::exp(logs(rng));
    const CyclicVector x(std::move(v));

    LimitIdentityRow row;
    row.nu = nu;
    row.sum_k = diananda_sum(x, kk);
    row.sum_k_plus_1 = diananda_sum(zero_insert(x, kk), kk + 1);
    row.insert_rel_err = std::fabs(row.sum_k_plus_1 - row.sum_k) / row.sum_k;
    const double per_entry = row.sum_k / static_cast<double>(x.size());
    const CyclicVector doubled = replicate(x, 2);
    row.replicate_rel_err =
        std::fabs(diananda_sum(doubled, kk) / static_cast<double>(doubled.size()) - per_entry) /
        per_entry;
    row.min_k = minimize(kk * nu, kk, config).value;
    row.min_k_plus_1 = minimize((kk + 1) * nu, kk + 1, config).value;
    row.direction_holds = row.min_k_plus_1 <= row.min_k + 1e-3;
    out.push_back(row);
  }
  return out;
}

}  // namespace cyclic
