#pragma once

#include <array>
#include <vector>

#include "cyclic/funcs.hpp"

namespace cyclic {

/// Common tangent of y = g_k(x) and y = e^{-x}: it touches g_k at x = a < 0
/// and e^{-x} at x = b > 0, has slope lambda < 0 and intercept gamma, the
/// upper bound for B(k). The origin splits [a, b] as mu*a + (1-mu)*b = 0.
struct TangentSolution {
  FamilyIndex idx = FamilyIndex::infinity();
  double a = 0.0;
  double b = 0.0;
  double gamma = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  /// |g(a) - (gamma + lambda a)|, |g'(a) - lambda|,
  /// |e^{-b} - (gamma + lambda b)|, |-e^{-b} - lambda|
  std::array<double, 4> residuals{};
  /// |g(a)/g'(a) - a + 1 - ln(-g'(a))| at the returned a.
  double root_residual = 0.0;

  double mu_prime() const noexcept { return 1.0 - mu; }
  double max_residual() const noexcept;
};

inline constexpr double kDefaultTangentTol = 1e-12;

/// Residual of the single-unknown tangency equation
///   g(a)/g'(a) - a + 1 = ln(-g'(a)).
double tangency_equation(const FamilyIndex& idx, double a);

/// Solves for the common tangent. The left abscissa is bracketed by a
/// geometric scan of [-30, -1e-6], bisected, then polished by one secant step.
///
/// Throws DegenerateFamilyError for k <= 1, NoBracketError when the scan sees
/// no sign change or more than one, and Error if the tangency residuals
/// cannot be brought under `tol`.
TangentSolution solve_tangent(const FamilyIndex& idx, double tol = kDefaultTangentTol);

/// h_k(x): g_k on x <= a, the tangent line on (a, b), e^{-x} on x >= b.
double eval_minorant(const TangentSolution& sol, double x);

/// One solution per entry, in input order.
std::vector<TangentSolution> gamma_table(const std::vector<FamilyIndex>& ks,
                                         double tol = kDefaultTangentTol);

}  // namespace cyclic
