#include "cyclic/funcs.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "cyclic/errors.hpp"

namespace cyclic {
namespace {

// Past this, e^x overflows or comes close; switch to log-form evaluation.
constexpr double kOverflowGuard = 700.0;

// Below this |x| the difference quotient in g'/g is evaluated from its
// Maclaurin series; above it the direct form loses at most ~1e-15.
constexpr double kSeriesCrossover = 0.1;

// x / (e^x - 1)
double g_limit(double x) {
  if (x == 0.0) return 1.0;
  if (x > kOverflowGuard) return std::exp(std::log(x) - x - std::log1p(-std::exp(-x)));
  return x / std::expm1(x);
}

// (g_inf(c x) - g_inf(x)) / x, where c = 1/k (0 for the limit member).
double log_slope_quotient(double x, double c) {
  if (std::fabs(x) < kSeriesCrossover && std::fabs(c * x) < kSeriesCrossover) {
    // g_inf(y) = sum B_{2m} y^{2m} / (2m)!  - y/2
    const double c2 = c * c;
    const double x2 = x * x;
    double cpow = c2;  // c^{2m}
    double xpow = x;   // x^{2m-1}
    constexpr double coeff[] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
                                1.0 / 47900160.0};
    double acc = -(c - 1.0) / 2.0;
    for (double b : coeff) {
      acc += b * (cpow - 1.0) * xpow;
      cpow *= c2;
      xpow *= x2;
    }
    return acc;
  }
  return (g_limit(c * x) - g_limit(x)) / x;
}

}  // namespace

FamilyIndex FamilyIndex::finite(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("family index k must be a positive real");
  FamilyIndex idx;
  idx.k_ = k;
  idx.infinite_ = false;
  return idx;
}

double FamilyIndex::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : k_;
}

std::string FamilyIndex::label() const {
  if (infinite_) return "inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, k_);
  return std::string(buf, res.ptr);
}

double eval_g(const FamilyIndex& idx, double x) {
  if (idx.is_infinite()) return g_limit(x);
  if (x == 0.0) return 1.0;
  const double k = idx.value();
  if (x > kOverflowGuard) {
    return k * -std::expm1(-x / k) * std::exp(-x) / -std::expm1(-x);
  }
  return -k * std::expm1(-x / k) / std::expm1(x);
}

double eval_g_derivative(const FamilyIndex& idx, double x) {
  // g'/g = (g_inf(x/k) - g_inf(x)) / x - 1
  const double c = idx.is_infinite() ? 0.0 : 1.0 / idx.value();
  return eval_g(idx, x) * (log_slope_quotient(x, c) - 1.0);
}

double eval_p(double x) {
  if (x == 0.0) return 1.0;
  return -std::expm1(-x) / x;
}

namespace {
// ln(1 + e^t) without overflow.
double softplus(double t) { return t > 30.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }
}  // namespace

double eval_f(int k, double t) {
  if (k < 1) throw DomainError("f_k needs k >= 1");
  const double kk = static_cast<double>(k);
  return kk * std::expm1(softplus(t) / kk);
}

double eval_f_derivative(int k, double t) {
  if (k < 1) throw DomainError("f_k needs k >= 1");
  return std::exp(softplus(t) / static_cast<double>(k)) / (1.0 + std::exp(-t));
}

double jensen_lower_bound(int k) { return eval_f(k, 0.0); }

double ReferenceLowerBounds::best() const noexcept {
  return std::max({jensen, diananda_1961.value_or(0.0), diananda_1962});
}

ReferenceLowerBounds reference_lower_bounds(int n, int k) {
  if (k < 1 || n < k) throw DomainError("reference bounds need n >= k >= 1");
  ReferenceLowerBounds r;
  r.jensen = jensen_lower_bound(k);
  if (n > 2 * (k + 1)) r.diananda_1961 = 2.0 * (k + 1) / n;
  r.diananda_1962 = 1.0 / k;
  return r;
}

}  // namespace cyclic
