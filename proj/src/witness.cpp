#include "cyclic/witness.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "cyclic/errors.hpp"
#include "cyclic/sums.hpp"

namespace cyclic {
namespace {

constexpr double kMaxNormalLog = 700.0;
constexpr int kMaxConvergents = 64;

struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

// Convergents p/q of a value in (0,1), in order, stopping once q > den_cap.
std::vector<Fraction> convergents(double value, std::int64_t den_cap) {
  std::vector<Fraction> out;
  std::int64_t p_prev = 1, q_prev = 0;  // p_{-1}/q_{-1}
  std::int64_t p = static_cast<std::int64_t>(std::floor(value)), q = 1;
  double rest = value - std::floor(value);
  out.push_back({p, q});
  for (int i = 0; i < kMaxConvergents && rest > 1e-15; ++i) {
    const double inv = 1.0 / rest;
    const double term = std::floor(inv);
    rest = inv - term;
    if (term > static_cast<double>(den_cap)) break;
    const auto t = static_cast<std::int64_t>(term);
    const std::int64_t p_next = t * p + p_prev;
    const std::int64_t q_next = t * q + q_prev;
    if (q_next > den_cap) break;
    p_prev = p, q_prev = q;
    p = p_next, q = q_next;
    out.push_back({p, q});
  }
  return out;
}

double log_range(const WitnessSpec& s) {
  const double sparse_top = static_cast<double>(s.m_prime / s.k) * s.b_star;
  const double dense_top = -s.a_star * static_cast<double>(s.n - s.m_prime) / s.k;
  return std::max(sparse_top, dense_top);
}

}  // namespace

double WitnessSpec::mixed_value() const {
  const double mu = mu_star();
  return mu * eval_g(FamilyIndex::finite(k), a_star) + (1.0 - mu) * std::exp(-b_star);
}

WitnessSpec plan_witness(int k, double eps, const TangentSolution& sol, std::int64_t n_cap) {
  if (k < 2) throw DomainError("witness needs k >= 2");
  if (!(eps > 0.0)) throw DomainError("witness needs eps > 0");
  if (sol.idx.is_infinite() || sol.idx.value() != static_cast<double>(k)) {
    throw DomainError("tangent solution is for k=" + sol.idx.label() + ", not k=" +
                      std::to_string(k));
  }
  const FamilyIndex idx = FamilyIndex::finite(k);
  const double delta = static_cast<double>(k) * k * std::exp(-sol.a / k) - k * eval_g(idx, sol.a);

  for (const Fraction& f : convergents(sol.mu, n_cap / k)) {
    if (f.num <= 0 || f.num >= f.den) continue;
    WitnessSpec s;
    s.k = k;
    s.eps = eps;
    s.delta = delta;
    s.gamma = sol.gamma;
    s.mu_num = f.num;
    s.mu_den = f.den;
    s.a_star = sol.a;
    s.b_star = -s.mu_star() / (1.0 - s.mu_star()) * s.a_star;
    if (!(s.mixed_value() < sol.gamma + eps / 2.0)) continue;

    // Smallest scale with delta / n < eps / 2, n = k * q * scale.
    const double kq = static_cast<double>(k) * static_cast<double>(f.den);
    const double needed = std::floor(2.0 * delta / (eps * kq)) + 1.0;
    const double n_needed = kq * needed;
    if (n_needed > static_cast<double>(n_cap)) {
      std::ostringstream msg;
      msg << "witness for k=" << k << ", eps=" << eps << " needs n=" << n_needed
          << " > cap " << n_cap;
      throw CapacityError(msg.str(), n_needed);
    }
    const auto scale = static_cast<std::int64_t>(needed);
    s.n = k * f.den * scale;
    s.m = k * f.num * scale;
    s.m_prime = s.n - s.m;
    const double range = log_range(s);
    if (range > kMaxWitnessLogRange) {
      std::ostringstream msg;
      msg << "witness for k=" << k << ", eps=" << eps << " spans e^" << range
          << ", beyond the double range e^" << kMaxWitnessLogRange;
      throw CapacityError(msg.str(), range);
    }
    validate(s);
    return s;
  }
  std::ostringstream msg;
  msg << "no convergent of mu=" << sol.mu << " with denominator <= " << n_cap / k
      << " meets the eps/2 margin for eps=" << eps;
  throw CapacityError(msg.str(), std::numeric_limits<double>::infinity());
}

void validate(const WitnessSpec& s) {
  const auto fail = [](const std::string& what) { throw InvalidSpecError("invalid witness spec: " + what); };
  if (s.k < 2) fail("k < 2");
  if (s.n <= s.k || s.n % s.k != 0) fail("n must be a multiple of k larger than k");
  if (s.m < s.k || s.m >= s.n || s.m % s.k != 0) fail("m must be a multiple of k in [k, n)");
  if (s.m_prime != s.n - s.m) fail("m' != n - m");
  if (s.mu_den <= 0 || s.m * s.mu_den != s.n * s.mu_num) fail("m/n != mu*");
  if (!(s.a_star < 0.0) || !(s.b_star > 0.0)) fail("need a* < 0 < b*");
  if (!(s.eps > 0.0)) fail("eps must be positive");
  const double mu = s.mu_star();
  if (std::fabs(mu * s.a_star + (1.0 - mu) * s.b_star) > 1e-12) fail("mu* a* + mu'* b* != 0");
  if (!(s.mixed_value() < s.gamma + s.eps / 2.0)) fail("mixed value not below gamma + eps/2");
  if (!(s.delta / static_cast<double>(s.n) < s.eps / 2.0)) fail("delta/n not below eps/2");
  if (log_range(s) > kMaxWitnessLogRange) fail("dynamic range exceeds double precision");
}

double witness_log_offset(const WitnessSpec& spec) {
  return std::max(0.0, log_range(spec) - kMaxNormalLog);
}

double witness_log_entry(const WitnessSpec& s, std::int64_t i) {
  if (i >= s.m_prime) return -s.a_star * static_cast<double>(s.n - i) / s.k;
  if (i % s.k != 0) return -std::numeric_limits<double>::infinity();
  return static_cast<double>(i / s.k) * s.b_star;
}

CyclicVector build_witness(const WitnessSpec& spec) {
  validate(spec);
  const double offset = witness_log_offset(spec);
  std::vector<double> x(static_cast<std::size_t>(spec.n));
  for (std::int64_t i = 1; i <= spec.n; ++i) {
    const double lx = witness_log_entry(spec, i);
    x[static_cast<std::size_t>(i - 1)] = std::isinf(lx) ? 0.0 : std::exp(lx - offset);
  }
  return CyclicVector(std::move(x));
}

WitnessReport witness_value_and_bound(const WitnessSpec& spec) {
  return witness_value_and_bound(spec, build_witness(spec));
}

WitnessReport witness_value_and_bound(const WitnessSpec& spec, const CyclicVector& x) {
  const double mu = spec.mu_star();
  WitnessReport r;
  r.value = normalized_diananda_sum(x, static_cast<std::size_t>(spec.k));
  r.analytic_bound = (1.0 - mu) * std::exp(-spec.b_star) +
                     mu * eval_g(FamilyIndex::finite(spec.k), spec.a_star) +
                     spec.delta / static_cast<double>(spec.n);
  r.gamma_plus_eps = spec.gamma + spec.eps;
  return r;
}

}  // namespace cyclic
