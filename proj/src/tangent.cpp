#include "cyclic/tangent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyclic/errors.hpp"

namespace cyclic {
namespace {

constexpr double kScanLeft = -30.0;
constexpr double kScanRight = -1e-6;
constexpr int kScanPoints = 600;
constexpr int kMaxBisections = 200;

}  // namespace

double TangentSolution::max_residual() const noexcept {
  return *std::max_element(residuals.begin(), residuals.end());
}

double tangency_equation(const FamilyIndex& idx, double a) {
  const double g = eval_g(idx, a);
  const double dg = eval_g_derivative(idx, a);
  return g / dg - a + 1.0 - std::log(-dg);
}

TangentSolution solve_tangent(const FamilyIndex& idx, double tol) {
  if (!idx.is_infinite() && idx.value() <= 1.0) {
    throw DegenerateFamilyError("tangent construction needs k > 1 (g_1 is e^{-x}); got k=" +
                                idx.label());
  }
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  const auto f = [&](double a) { return tangency_equation(idx, a); };

  // Geometric grid from the left end towards 0, where the abscissa
  // concentrates for small k.
  const double ratio = std::pow(kScanRight / kScanLeft, 1.0 / kScanPoints);
  double lo = 0.0, hi = 0.0, flo = 0.0, fhi = 0.0;
  int sign_changes = 0;
  double prev = kScanLeft;
  double fprev = f(prev);
  for (int i = 1; i <= kScanPoints; ++i) {
    const double cur = i == kScanPoints ? kScanRight : kScanLeft * std::pow(ratio, i);
    const double fcur = f(cur);
    if ((fprev > 0.0) != (fcur > 0.0)) {
      if (++sign_changes == 1) {
        lo = prev, flo = fprev;
        hi = cur, fhi = fcur;
      }
    }
    prev = cur, fprev = fcur;
  }
  if (sign_changes != 1) {
    std::ostringstream msg;
    msg << "tangency equation for k=" << idx.label() << " has " << sign_changes
        << " sign changes on [" << kScanLeft << ", " << kScanRight << "]; expected exactly one";
    throw NoBracketError(msg.str());
  }

  for (int it = 0; it < kMaxBisections && flo != 0.0 && fhi != 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid, flo = fm;
    } else {
      hi = mid, fhi = fm;
    }
  }
  double a = std::fabs(flo) <= std::fabs(fhi) ? lo : hi;
  double fa = std::min(std::fabs(flo), std::fabs(fhi));
  if (fhi != flo) {
    const double sec = hi - fhi * (hi - lo) / (fhi - flo);
    if (sec >= lo && sec <= hi) {
      const double fs = std::fabs(f(sec));
      if (fs < fa) a = sec, fa = fs;
    }
  }

  TangentSolution sol;
  sol.idx = idx;
  sol.a = a;
  sol.lambda = eval_g_derivative(idx, a);
  sol.b = -std::log(-sol.lambda);
  sol.gamma = -sol.lambda * (1.0 + sol.b);
  sol.mu = sol.b / (sol.b - sol.a);
  const double eb = std::exp(-sol.b);
  sol.residuals = {std::fabs(eval_g(idx, a) - (sol.gamma + sol.lambda * a)),
                   std::fabs(eval_g_derivative(idx, a) - sol.lambda),
                   std::fabs(eb - (sol.gamma + sol.lambda * sol.b)),
                   std::fabs(-eb - sol.lambda)};
  sol.root_residual = fa;
  if (sol.max_residual() > tol || fa > tol) {
    std::ostringstream msg;
    msg << "tangent for k=" << idx.label() << " converged only to residual "
        << std::max(sol.max_residual(), fa) << " > tol " << tol;
    throw Error(msg.str());
  }
  return sol;
}

double eval_minorant(const TangentSolution& sol, double x) {
  if (x <= sol.a) return eval_g(sol.idx, x);
  if (x >= sol.b) return std::exp(-x);
  return sol.gamma + sol.lambda * x;
}

std::vector<TangentSolution> gamma_table(const std::vector<FamilyIndex>& ks, double tol) {
  std::vector<TangentSolution> rows;
  rows.reserve(ks.size());
  for (const auto& k : ks) rows.push_back(solve_tangent(k, tol));
  return rows;
}

}  // namespace cyclic
