#pragma once

#include <cstddef>
#include <cstdint>

#include "cyclic/cyclic_vector.hpp"
#include "cyclic/tangent.hpp"

namespace cyclic {

/// Discrete plan for a vector x of length n with (k/n) S_{n,k}(x) < gamma_k + eps.
///
/// The first m' = n - m entries are sparse (one nonzero every k slots,
/// growing by e^{b*}); the last m entries are a geometric sequence falling
/// by e^{a*/k}. mu* = m/n approximates the tangent's mixing weight.
struct WitnessSpec {
  int k = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t m_prime = 0;
  double a_star = 0.0;
  double b_star = 0.0;
  /// mu* = mu_num / mu_den in lowest terms; n = k*mu_den*s, m = k*mu_num*s.
  std::int64_t mu_num = 0;
  std::int64_t mu_den = 0;
  double eps = 0.0;
  /// k^2 e^{-a*/k} - k g_k(a*), the n-independent slack of the bound.
  double delta = 0.0;
  double gamma = 0.0;  ///< gamma_k of the tangent the plan was derived from

  double mu_star() const noexcept {
    return static_cast<double>(mu_num) / static_cast<double>(mu_den);
  }
  /// mu* g_k(a*) + (1 - mu*) e^{-b*}; must stay below gamma + eps/2.
  double mixed_value() const;
};

inline constexpr std::int64_t kDefaultWitnessCap = 10'000'000;

/// Largest log-range a witness may span and still be stored in doubles
/// without leaving the normal range (entries are rescaled into [e^-700, e^700]).
inline constexpr double kMaxWitnessLogRange = 1400.0;

/// Chooses mu* from the continued-fraction convergents of sol.mu (the first
/// one in (0,1) that keeps the mixed value under gamma + eps/2), keeps
/// a* = sol.a, sets b* = -mu* a* / (1 - mu*), and takes the smallest n with
/// delta/n < eps/2.
///
/// Throws DomainError on k < 2, eps <= 0 or a solution for another k;
/// CapacityError when n would exceed `n_cap` or the vector's dynamic range
/// exceeds kMaxWitnessLogRange (required() reports the needed n or range).
WitnessSpec plan_witness(int k, double eps, const TangentSolution& sol,
                         std::int64_t n_cap = kDefaultWitnessCap);

/// Throws InvalidSpecError describing the first violated invariant.
void validate(const WitnessSpec& spec);

/// ln of the constant every entry is divided by so the vector fits in
/// normal doubles; 0 whenever the unscaled vector already fits.
double witness_log_offset(const WitnessSpec& spec);

/// Natural log of x_i before the offset is applied; -inf for the zero slots.
double witness_log_entry(const WitnessSpec& spec, std::int64_t i);

/// Builds x (1-based):
///   x_{jk} = e^{j b*}           for 1 <= j < m'/k,
///   x_i    = 0                  for i < m', k does not divide i,
///   x_i    = e^{-a*(n-i)/k}     for m' <= i <= n,
/// each divided by e^{witness_log_offset(spec)}.
CyclicVector build_witness(const WitnessSpec& spec);

struct WitnessReport {
  double value = 0.0;           ///< (k/n) S_{n,k}(x)
  double analytic_bound = 0.0;  ///< (1-mu*) e^{-b*} + mu* g_k(a*) + delta/n
  double gamma_plus_eps = 0.0;
};

WitnessReport witness_value_and_bound(const WitnessSpec& spec);
WitnessReport witness_value_and_bound(const WitnessSpec& spec, const CyclicVector& x);

}  // namespace cyclic
