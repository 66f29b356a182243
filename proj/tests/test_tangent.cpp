#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cyclic/errors.hpp"
#include "cyclic/funcs.hpp"
#include "cyclic/tangent.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

FamilyIndex K(double k) { return FamilyIndex::finite(k); }

// Frozen from a 50-digit solve of the two tangency conditions
// g'(a) = -e^{-b}, g(a) = e^{-b}(1 + b - a) (mpmath, independent of the
// single-unknown reduction used by the library).
struct Frozen {
  FamilyIndex idx;
  double a, b, gamma, mu;
};
const Frozen kFrozen[] = {
    {K(2), -0.200811065861822, 0.155194974722602, 0.989133634446993, 0.4359335433},
    {K(3), -0.330682602019257, 0.226413467552587, 0.977927798177398, 0.4064172769},
    {K(4), -0.420704372628039, 0.267814395597104, 0.969941104820340, 0.3889718160},
    {K(10), -0.660469417547820, 0.356036593961388, 0.949831747364756, 0.3502552763},
    {K(100), -0.898499368575929, 0.421035041596847, 0.932720650466079, 0.3190784858},
    {K(1000), -0.929528830384255, 0.428225800797449, 0.930723697987902, 0.3153926276},
    {FamilyIndex::infinity(), -0.933088702046074, 0.429033924995814, 0.930498061719255, 0.3149745232},
};

}  // namespace

TEST_CASE("solve_tangent matches the frozen high-precision solutions") {
  for (const auto& f : kFrozen) {
    CAPTURE(f.idx.label());
    const auto s = solve_tangent(f.idx);
    CHECK(std::fabs(s.a - f.a) <= 1e-13);
    CHECK(std::fabs(s.b - f.b) <= 1e-13);
    CHECK(std::fabs(s.gamma - f.gamma) <= 1e-14);
    CHECK(std::fabs(s.mu - f.mu) <= 1e-10);
    CHECK(s.max_residual() <= 1e-11);
    CHECK(s.root_residual <= 1e-12);
    CHECK(std::fabs(tangency_equation(f.idx, s.a)) <= 1e-12);
  }
}

TEST_CASE("tangent solution invariants") {
  for (const auto& f : kFrozen) {
    const auto s = solve_tangent(f.idx);
    CHECK(s.a < 0.0);
    CHECK(s.b > 0.0);
    CHECK(s.lambda < 0.0);
    CHECK(s.gamma < 1.0);
    CHECK(s.gamma > std::numbers::ln2);
    CHECK(s.mu > 0.0);
    CHECK(s.mu < 1.0);
    CHECK(std::fabs(s.mu * s.a + s.mu_prime() * s.b) <= 1e-12);
    CHECK(std::fabs(s.mu * eval_g(s.idx, s.a) + s.mu_prime() * std::exp(-s.b) - s.gamma) <= 1e-10);
    // the line really is tangent: independent derivative of g at a
    const double slope = oracle::derivative([&](double t) { return eval_g(s.idx, t); }, s.a, 1e-3);
    CHECK(std::fabs(slope - s.lambda) <= 1e-10);
  }
}

TEST_CASE("solve_tangent rejects degenerate families") {
  CHECK_THROWS_AS(solve_tangent(K(1)), DegenerateFamilyError);
  CHECK_THROWS_AS(solve_tangent(K(0.5)), DegenerateFamilyError);
  CHECK_THROWS_AS(solve_tangent(K(2), 0.0), DomainError);
}

TEST_CASE("solve_tangent reports an unreachable tolerance") {
  CHECK_THROWS_AS(solve_tangent(K(2), 1e-300), Error);
}

TEST_CASE("gamma is monotone in k and bracketed by the lower bound") {
  double prev_gamma = 1.0, prev_slope = 1e9;
  for (double k : {2.0, 2.5, 3.0, 4.0, 6.0, 10.0, 30.0, 100.0, 1000.0, 1e5}) {
    const auto s = solve_tangent(K(k));
    CHECK(s.gamma < prev_gamma);
    CHECK(std::fabs(s.lambda) < prev_slope);
    if (k == std::floor(k) && k < 1e5) CHECK(jensen_lower_bound(int(k)) < s.gamma);
    prev_gamma = s.gamma;
    prev_slope = std::fabs(s.lambda);
  }
  const auto lim = solve_tangent(FamilyIndex::infinity());
  CHECK(lim.gamma < prev_gamma);
  CHECK(prev_gamma - lim.gamma < 1e-5);
}

TEST_CASE("eval_minorant") {
  const auto s = solve_tangent(K(3));
  CHECK(eval_minorant(s, 0.0) == doctest::Approx(s.gamma).epsilon(1e-15));
  CHECK(eval_minorant(s, s.b + 5) == std::exp(-(s.b + 5)));
  CHECK(std::fabs(eval_minorant(s, s.a) - (s.gamma + s.lambda * s.a)) <= 1e-10);
  CHECK(std::fabs(eval_minorant(s, s.b) - (s.gamma + s.lambda * s.b)) <= 1e-10);

  // once differentiable at the knots
  const double h = 1e-6;
  for (double knot : {s.a, s.b}) {
    const double left = (eval_minorant(s, knot) - eval_minorant(s, knot - h)) / h;
    const double right = (eval_minorant(s, knot + h) - eval_minorant(s, knot)) / h;
    CHECK(std::fabs(left - right) <= 1e-5);
  }

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(s.a - 4.0, s.b + 4.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng), y = u(rng);
    const double hx = eval_minorant(s, x), hy = eval_minorant(s, y);
    CHECK(eval_minorant(s, 0.5 * (x + y)) <= 0.5 * (hx + hy) + 1e-10);
    CHECK(hx <= std::min(std::exp(-x), eval_g(s.idx, x)) + 1e-12);
  }
}

TEST_CASE("gamma_table") {
  const std::vector<FamilyIndex> ks = {K(2), K(3), K(4), K(10), K(100), K(1000), FamilyIndex::infinity()};
  const double expected[] = {0.98913, 0.97793, 0.96994, 0.94983, 0.93272, 0.93072};
  const auto rows = gamma_table(ks);
  REQUIRE(rows.size() == ks.size());
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(rows[i].idx == ks[i]);
    CHECK(std::fabs(rows[i].gamma - expected[i]) <= 5e-6);
    if (i) CHECK(rows[i].gamma < rows[i - 1].gamma);
  }
  CHECK(std::fabs(rows[6].gamma - 0.930498) <= 1e-6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(rows[6].gamma < rows[i].gamma);
  CHECK_THROWS_AS(gamma_table({K(2), K(1)}), DegenerateFamilyError);
}
