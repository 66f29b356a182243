#include "cyclic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "cyclic/funcs.hpp"
#include "cyclic/io.hpp"
#include "cyclic/optimize.hpp"
#include "cyclic/sums.hpp"
#include "cyclic/tangent.hpp"
#include "cyclic/witness.hpp"

namespace cyclic {
namespace {

using Rng = std::mt19937_64;

class Recorder {
 public:
  explicit Recorder(std::string name) { group_.name = std::move(name); }

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++group_.cases;
    if (!ok && group_.failures++ == 0) group_.first_failure = describe();
  }

  PropertyGroup take() { return std::move(group_); }

 private:
  PropertyGroup group_;
};

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string describe(const char* what, double a, double b = NAN, double c = NAN) {
  std::ostringstream s;
  s << what << " at (" << io::format_sig(a) << ", " << io::format_sig(b) << ", "
    << io::format_sig(c) << ")";
  return s.str();
}

CyclicVector random_positive(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (double& e : v) e = std::exp(uniform(rng, -3.0, 3.0));
  return CyclicVector(std::move(v));
}

double rel_diff(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

// Three-point midpoint convexity with slack relative to the magnitudes.
bool midpoint_convex(const std::function<double(double)>& f, double x, double y, double slack) {
  const double fx = f(x), fy = f(y), fm = f(0.5 * (x + y));
  return fm <= 0.5 * (fx + fy) + slack * std::max({1.0, std::fabs(fx), std::fabs(fy)});
}

double central_difference(const std::function<double(double)>& f, double x) {
  const double h = 1e-5 * std::max(1.0, std::fabs(x));
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

const std::vector<FamilyIndex>& sample_families() {
  static const std::vector<FamilyIndex> ks = {
      FamilyIndex::finite(0.5), FamilyIndex::finite(1), FamilyIndex::finite(2),
      FamilyIndex::finite(3),   FamilyIndex::finite(7), FamilyIndex::finite(50),
      FamilyIndex::infinity()};
  return ks;
}

PropertyGroup g_shape(Rng& rng) {
  Recorder r("g_positive_decreasing_convex");
  std::vector<std::pair<std::string, std::function<double(double)>>> fs;
  for (const auto& k : sample_families()) {
    fs.emplace_back("g_" + k.label(), [k](double x) { return eval_g(k, x); });
  }
  fs.emplace_back("p", [](double x) { return eval_p(x); });
  for (int i = 0; i < 400; ++i) {
    double x = uniform(rng, -30.0, 30.0), y = uniform(rng, -30.0, 30.0);
    if (x > y) std::swap(x, y);
    for (const auto& [name, f] : fs) {
      const double fx = f(x), fy = f(y);
      r.check(fx > 0.0 && fy > 0.0, [&] { return describe((name + " not positive").c_str(), x, y); });
      r.check(y - x < 1e-9 ? fx >= fy : fx > fy,
              [&] { return describe((name + " not decreasing").c_str(), x, y); });
      r.check(midpoint_convex(f, x, y, 1e-12),
              [&] { return describe((name + " not midpoint convex").c_str(), x, y); });
    }
  }
  return r.take();
}

PropertyGroup g_monotone_in_k(Rng& rng) {
  Recorder r("g_increasing_in_k");
  const double ks[] = {0.5, 1.0, 2.0, 3.0, 5.0, 10.0, 100.0};
  for (int i = 0; i < 1000; ++i) {
    const double x = (rng() & 1 ? 1.0 : -1.0) * std::exp(uniform(rng, std::log(1e-3), std::log(30.0)));
    const std::size_t a = pick(rng, 0, 5), b = pick(rng, a + 1, 6);
    const auto h = [x](double k) { return eval_g(FamilyIndex::finite(k), x) * std::expm1(x); };
    r.check(h(ks[a]) < h(ks[b]), [&] { return describe("k(1-e^{-x/k}) not increasing", x, ks[a], ks[b]); });
  }
  return r.take();
}

PropertyGroup g_order(Rng& rng) {
  Recorder r("g_pointwise_order");
  const double ks[] = {1.5, 2.0, 3.0, 5.0, 10.0, 100.0};
  for (int i = 0; i < 1000; ++i) {
    const double mag = std::exp(uniform(rng, std::log(1e-3), std::log(30.0)));
    const double x = rng() & 1 ? mag : -mag;
    const std::size_t a = pick(rng, 0, 4), b = pick(rng, a + 1, 5);
    const double g1 = std::exp(-x);
    const double ga = eval_g(FamilyIndex::finite(ks[a]), x);
    const double gb = eval_g(FamilyIndex::finite(ks[b]), x);
    const bool ok = x > 0 ? (gb > ga && ga > g1) : (gb < ga && ga < g1);
    r.check(ok, [&] { return describe("g_k not ordered in k", x, ks[a], ks[b]); });
  }
  return r.take();
}

PropertyGroup g_limit(Rng& rng) {
  Recorder r("g_k_to_g_inf");
  const auto big = FamilyIndex::finite(1e6);
  for (int i = 0; i < 500; ++i) {
    const double x = uniform(rng, -10.0, 10.0);
    // g_k = g_inf(x) p(x/k) and |p(y) - 1| <= |y| for small y
    const double limit = eval_g(FamilyIndex::infinity(), x);
    r.check(std::fabs(eval_g(big, x) - limit) <= std::fabs(x) / big.value() * limit,
            [&] { return describe("g_1e6 far from g_inf", x); });
  }
  return r.take();
}

PropertyGroup factorization(Rng& rng) {
  Recorder r("g_factorization");
  for (int i = 0; i < 500; ++i) {
    const double x = uniform(rng, -30.0, 30.0);
    const double k = std::exp(uniform(rng, std::log(0.5), std::log(1000.0)));
    const double lhs = eval_g(FamilyIndex::finite(k), x);
    const double rhs = eval_g(FamilyIndex::infinity(), x) * eval_p(x / k);
    r.check(rel_diff(lhs, rhs) <= 1e-13, [&] { return describe("g_k != g_inf(x) p(x/k)", x, k); });
  }
  return r.take();
}

PropertyGroup derivatives(Rng& rng) {
  Recorder r("derivatives_vs_finite_differences");
  for (int i = 0; i < 300; ++i) {
    const double x = uniform(rng, -20.0, 20.0);
    for (const auto& k : sample_families()) {
      const auto g = [&k](double t) { return eval_g(k, t); };
      const double d = eval_g_derivative(k, x);
      r.check(d < 0.0 && rel_diff(d, central_difference(g, x)) <= 1e-6,
              [&] { return describe(("g'_" + k.label()).c_str(), x); });
    }
    for (int k = 1; k <= 8; ++k) {
      const auto f = [k](double t) { return eval_f(k, t); };
      const double d = eval_f_derivative(k, x);
      r.check(d > 0.0 && rel_diff(d, central_difference(f, x)) <= 1e-6,
              [&] { return describe("f_k'", x, k); });
    }
  }
  return r.take();
}

PropertyGroup f_convexity(Rng& rng) {
  Recorder r("f_k_convex_factored_derivative");
  for (int i = 0; i < 500; ++i) {
    double x = uniform(rng, -30.0, 30.0), y = uniform(rng, -30.0, 30.0);
    if (x > y) std::swap(x, y);
    const int k = static_cast<int>(pick(rng, 1, 12));
    r.check(midpoint_convex([k](double t) { return eval_f(k, t); }, x, y, 1e-12),
            [&] { return describe("f_k not midpoint convex", x, y, k); });
    // numerator (1+e^t)^{1/k} increases, denominator 1+e^{-t} decreases
    const auto num = [k](double t) { return std::pow(1.0 + std::exp(t), 1.0 / k); };
    const auto den = [](double t) { return 1.0 + std::exp(-t); };
    r.check(y - x < 1e-9 || (num(y) > num(x) && den(y) < den(x)),
            [&] { return describe("f_k' factors not monotone", x, y, k); });
    r.check(jensen_lower_bound(k) > std::numbers::ln2, [&] { return describe("k(2^{1/k}-1) <= ln 2", k); });
  }
  return r.take();
}

PropertyGroup sum_invariances(Rng& rng) {
  Recorder r("sum_scale_shift_invariance");
  for (int i = 0; i < 600; ++i) {
    const std::size_t n = pick(rng, 1, 48), k = pick(rng, 1, n);
    const CyclicVector x = random_positive(rng, n);
    const double s = diananda_sum(x, k);
    const double c = std::exp(uniform(rng, -20.0, 20.0));
    r.check(std::fabs(diananda_sum(x.scaled(c), k) - s) <= 1e-10 * s,
            [&] { return describe("scale invariance", double(n), double(k), c); });
    const auto shift = static_cast<std::int64_t>(pick(rng, 0, n - 1));
    r.check(rel_diff(diananda_sum(x.rotated(shift), k), s) <= 1e-12,
            [&] { return describe("shift invariance", double(n), double(k), double(shift)); });
  }
  return r.take();
}

PropertyGroup jensen_floor(Rng& rng) {
  Recorder r("jensen_floor");
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = pick(rng, 1, 40), k = pick(rng, 1, std::min<std::size_t>(n, 10));
    const CyclicVector x = random_positive(rng, n);
    const double v = normalized_diananda_sum(x, k);
    r.check(v >= jensen_lower_bound(static_cast<int>(k)) - 1e-9,
            [&] { return describe("(k/n) S below k(2^{1/k}-1)", double(n), double(k), v); });
  }
  return r.take();
}

PropertyGroup block_checks(Rng& rng) {
  Recorder r("block_diagnostics");
  for (int i = 0; i < 600; ++i) {
    const std::size_t k = pick(rng, 1, 8), nu = pick(rng, 1, 16);
    const CyclicVector x = random_positive(rng, k * nu);
    const BlockDiagnostics d = block_diagnostics(x, k);
    double log_prod = 0.0;
    for (double q : d.ratios) log_prod += std::log(q);
    r.check(std::fabs(std::expm1(log_prod)) <= 1e-12,
            [&] { return describe("prod r_j != 1", double(k), double(nu), log_prod); });
    for (std::size_t j = 0; j < d.nu; ++j) {
      const double floor = eval_f(static_cast<int>(k), std::log(d.ratios[j]));
      r.check(d.partials[j] >= floor - 1e-12,
              [&] { return describe("s_j below f_k(ln r_j)", double(k), double(j), d.partials[j]); });
    }
    double total = 0.0;
    for (double s : d.partials) total += s;
    r.check(rel_diff(total, diananda_sum(x, k)) <= 1e-12,
            [&] { return describe("sum s_j != S", double(k), double(nu)); });
  }
  return r.take();
}

PropertyGroup transforms(Rng& rng) {
  Recorder r("zero_insert_and_replicate");
  for (int i = 0; i < 600; ++i) {
    const std::size_t k = pick(rng, 1, 8), nu = pick(rng, 1, 16);
    const CyclicVector x = random_positive(rng, k * nu);
    const double s = diananda_sum(x, k);
    const CyclicVector z = zero_insert(x, k);
    r.check(!z.first_empty_window(k + 1).has_value() && rel_diff(diananda_sum(z, k + 1), s) <= 1e-12,
            [&] { return describe("zero-insert identity", double(k), double(nu)); });
    const std::size_t copies = pick(rng, 1, 5);
    const CyclicVector rep = replicate(x, copies);
    const double lhs = diananda_sum(rep, k) / static_cast<double>(rep.size());
    r.check(rel_diff(lhs, s / static_cast<double>(x.size())) <= 1e-12,
            [&] { return describe("replication identity", double(k), double(nu), double(copies)); });
  }
  return r.take();
}

PropertyGroup gradients(Rng& rng) {
  Recorder r("gradient_and_euler_identity");
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = pick(rng, 1, 24), k = pick(rng, 1, n);
    const CyclicVector x = random_positive(rng, n);
    const std::vector<double> g = gradient(x, k);
    // every partial is O(S / x_m), so S is the natural floor for x . grad
    const double value = diananda_sum(x, k);
    double gmax = 0.0, euler = 0.0, euler_scale = value;
    for (std::size_t m = 0; m < n; ++m) {
      gmax = std::max(gmax, std::fabs(g[m]));
      euler += x.entries()[m] * g[m];
      euler_scale += std::fabs(x.entries()[m] * g[m]);
    }
    r.check(std::fabs(euler) <= 1e-10 * euler_scale,
            [&] { return describe("Euler identity", double(n), double(k), euler); });
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<double> v(x.entries().begin(), x.entries().end());
      const double h = 1e-6 * v[m];
      v[m] += h;
      const double up = diananda_sum(CyclicVector(v), k);
      v[m] -= 2 * h;
      const double down = diananda_sum(CyclicVector(v), k);
      const double fd = (up - down) / (2 * h);
      const double floor = value / x.entries()[m];
      r.check(std::fabs(fd - g[m]) <= 1e-6 * (std::fabs(g[m]) + gmax + floor),
              [&] { return describe("gradient vs finite difference", double(n), double(k), double(m)); });
    }
  }
  return r.take();
}

PropertyGroup tangents(Rng& rng) {
  Recorder r("tangent_solutions");
  std::vector<FamilyIndex> ks;
  for (double k : {2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 10.0, 100.0, 1000.0}) ks.push_back(FamilyIndex::finite(k));
  ks.push_back(FamilyIndex::infinity());
  double prev_gamma = 1.0;
  for (const auto& k : ks) {
    const TangentSolution s = solve_tangent(k);
    r.check(s.max_residual() <= 1e-11 && s.root_residual <= 1e-11,
            [&] { return "residuals above 1e-11 for k=" + k.label(); });
    r.check(s.a < 0 && s.b > 0 && s.lambda < 0 && s.gamma < 1 && s.gamma > std::numbers::ln2,
            [&] { return "tangent geometry invalid for k=" + k.label(); });
    r.check(s.gamma < prev_gamma, [&] { return "gamma not decreasing at k=" + k.label(); });
    prev_gamma = s.gamma;
    if (!k.is_infinite()) {
      r.check(jensen_lower_bound(static_cast<int>(k.value())) < s.gamma,
              [&] { return "lower bound above gamma at k=" + k.label(); });
    }
    const auto h = [&s](double x) { return eval_minorant(s, x); };
    for (int i = 0; i < 100; ++i) {
      const double x = uniform(rng, s.a - 3.0, s.b + 3.0), y = uniform(rng, s.a - 3.0, s.b + 3.0);
      r.check(midpoint_convex(h, x, y, 1e-10),
              [&] { return describe(("minorant convexity k=" + k.label()).c_str(), x, y); });
      const double cap = std::min(std::exp(-x), eval_g(k, x));
      r.check(h(x) <= cap + 1e-12,
              [&] { return describe(("minorant above min(g_1,g_k) k=" + k.label()).c_str(), x); });
    }
  }
  return r.take();
}

PropertyGroup witnesses() {
  Recorder r("witness_certification");
  for (int k : {2, 3, 4}) {
    const TangentSolution sol = solve_tangent(FamilyIndex::finite(k));
    for (double eps : {0.1, 0.01}) {
      const WitnessSpec spec = plan_witness(k, eps, sol);
      const CyclicVector x = build_witness(spec);
      const WitnessReport rep = witness_value_and_bound(spec, x);
      r.check(rep.value <= rep.analytic_bound && rep.analytic_bound < rep.gamma_plus_eps,
              [&] { return describe("witness ordering", k, eps, rep.value); });
      r.check(!x.first_empty_window(static_cast<std::size_t>(k)).has_value(),
              [&] { return describe("witness window positivity", k, eps); });
    }
  }
  return r.take();
}

}  // namespace

bool VerifyReport::passed() const noexcept {
  return std::all_of(groups.begin(), groups.end(), [](const auto& g) { return g.passed(); });
}

std::int64_t VerifyReport::total_cases() const noexcept {
  std::int64_t n = 0;
  for (const auto& g : groups) n += g.cases;
  return n;
}

std::string VerifyReport::to_json() const {
  std::ostringstream s;
  s << "{\"suite\":\"" << suite << "\",\"seed\":" << seed << ",\"passed\":"
    << (passed() ? "true" : "false") << ",\"cases\":" << total_cases() << ",\"groups\":[";
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    if (i) s << ',';
    s << "{\"name\":\"" << g.name << "\",\"cases\":" << g.cases << ",\"failures\":" << g.failures
      << ",\"passed\":" << (g.passed() ? "true" : "false") << "}";
  }
  s << "]}";
  return s.str();
}

VerifyReport run_verify(Suite suite, std::uint64_t seed) {
  VerifyReport report;
  report.suite = suite == Suite::fast ? "fast" : "all";
  report.seed = seed;
  std::uint64_t stream = 0;
  const auto run = [&](auto&& group) {
    ++stream;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    Rng rng(seq);
    report.groups.push_back(group(rng));
  };
  run(g_shape);
  run(g_monotone_in_k);
  run(g_order);
  run(g_limit);
  run(factorization);
  run(derivatives);
  run(f_convexity);
  if (suite == Suite::all) {
    run(sum_invariances);
    run(jensen_floor);
    run(block_checks);
    run(transforms);
    run(gradients);
    run(tangents);
    report.groups.push_back(witnesses());
  }
  return report;
}

}  // namespace cyclic
