#include <doctest.h>

#include <cmath>

#include "cyclic/errors.hpp"
#include "cyclic/funcs.hpp"
#include "cyclic/sums.hpp"
#include "cyclic/tangent.hpp"
#include "cyclic/witness.hpp"
#include "oracles.hpp"

using namespace cyclic;

namespace {

WitnessSpec plan(int k, double eps) {
  return plan_witness(k, eps, solve_tangent(FamilyIndex::finite(k)));
}

// x_i / t_{i+1,k} straight from the entries, 1-based i.
double term(const CyclicVector& x, std::int64_t i, int k) {
  double t = 0.0;
  for (int j = 1; j <= k; ++j) t += x.at(i + j);
  return x.at(i) / t;
}

}  // namespace

TEST_CASE("plan_witness invariants") {
  for (int k : {2, 3, 4, 5}) {
    for (double eps : {0.1, 0.01, 0.001}) {
      CAPTURE(k);
      CAPTURE(eps);
      if (k == 5 && eps == 0.001) {
        // x spans more than e^1400 here, refused up front
        CHECK_THROWS_AS(plan(k, eps), CapacityError);
        continue;
      }
      const auto s = plan(k, eps);
      CHECK(s.n % k == 0);
      CHECK(s.m % k == 0);
      CHECK(s.m_prime == s.n - s.m);
      CHECK(s.m * s.mu_den == s.n * s.mu_num);
      CHECK(std::fabs(s.mu_star() * s.a_star + (1 - s.mu_star()) * s.b_star) <= 1e-12);
      CHECK(s.mixed_value() < s.gamma + eps / 2);
      CHECK(s.delta / double(s.n) < eps / 2);
      const double delta = double(k) * k * std::exp(-s.a_star / k) - k * eval_g(FamilyIndex::finite(k), s.a_star);
      CHECK(s.delta == doctest::Approx(delta).epsilon(1e-15));
      CHECK_NOTHROW(validate(s));
    }
  }
}

TEST_CASE("n grows as eps shrinks") {
  CHECK(plan(3, 0.001).n > plan(3, 0.01).n);
  CHECK(plan(2, 0.001).n > plan(2, 0.01).n);
}

TEST_CASE("plan_witness errors") {
  const auto sol2 = solve_tangent(FamilyIndex::finite(2));
  CHECK_THROWS_AS(plan_witness(2, 1e-9, sol2), CapacityError);
  try {
    plan_witness(2, 1e-9, sol2);
  } catch (const CapacityError& e) {
    CHECK(e.required() > 1e7);
  }
  // within the n cap but beyond what doubles can hold
  CHECK_THROWS_AS(plan_witness(2, 1e-4, sol2), CapacityError);
  CHECK_THROWS_AS(plan_witness(3, 0.01, sol2), DomainError);
  CHECK_THROWS_AS(plan_witness(1, 0.01, sol2), DomainError);
  CHECK_THROWS_AS(plan_witness(2, 0.0, sol2), DomainError);
  CHECK_THROWS_AS(plan_witness(2, 0.01, sol2, 100), CapacityError);
}

TEST_CASE("validate rejects broken specs") {
  const auto good = plan(3, 0.01);
  auto bad = good;
  bad.n += 1;
  CHECK_THROWS_AS(validate(bad), InvalidSpecError);
  bad = good;
  bad.b_star *= 1.01;
  CHECK_THROWS_AS(validate(bad), InvalidSpecError);
  bad = good;
  bad.m_prime -= 3;
  CHECK_THROWS_AS(build_witness(bad), InvalidSpecError);
}

TEST_CASE("build_witness structure") {
  for (int k : {2, 3, 4}) {
    for (double eps : {0.1, 0.01, 0.001}) {
      CAPTURE(k);
      CAPTURE(eps);
      const auto s = plan(k, eps);
      const auto x = build_witness(s);
      REQUIRE(std::int64_t(x.size()) == s.n);
      CHECK_FALSE(x.first_empty_window(std::size_t(k)).has_value());

      // sparse part: zeros except at multiples of k
      bool sparse_ok = true;
      for (std::int64_t i = 1; i < s.m_prime; ++i) sparse_ok &= (i % k == 0) == (x.at(i) > 0.0);
      CHECK(sparse_ok);

      // dense part: geometric with ratio e^{a*/k} < 1
      const double ratio = std::exp(s.a_star / k);
      CHECK(ratio < 1.0);
      double worst = 0.0;
      for (std::int64_t i = s.m_prime; i < s.n; ++i) worst = std::max(worst, oracle::rel(x.at(i + 1), x.at(i) * ratio));
      CHECK(worst <= 1e-12);

      // boundary: the sparse formula extended to j = m'/k gives the dense value
      const double offset = witness_log_offset(s);
      const double sparse_form = std::exp(double(s.m_prime / k) * s.b_star - offset);
      const double dense_form = std::exp(-s.a_star * double(s.m) / k - offset);
      CHECK(oracle::rel(sparse_form, dense_form) <= 1e-10);
      CHECK(oracle::rel(x.at(s.m_prime), dense_form) <= 1e-12);
      if (offset == 0.0) CHECK(x.at(s.n) == 1.0);
    }
  }
}

TEST_CASE("per-term identities of the construction") {
  for (int k : {2, 3, 4}) {
    for (double eps : {0.1, 0.01, 0.001}) {
      CAPTURE(k);
      CAPTURE(eps);
      const auto s = plan(k, eps);
      const auto x = build_witness(s);
      const double sparse_term = std::exp(-s.b_star);
      const double dense_term = eval_g(FamilyIndex::finite(k), s.a_star) / k;
      std::int64_t sparse_count = 0, dense_count = 0;
      double worst = 0.0;
      for (std::int64_t i = k; i < s.m_prime; i += k, ++sparse_count) {
        worst = std::max(worst, oracle::rel(term(x, i, k), sparse_term));
      }
      for (std::int64_t i = s.m_prime; i <= s.n - k - 1; ++i, ++dense_count) {
        worst = std::max(worst, oracle::rel(term(x, i, k), dense_term));
      }
      CHECK(worst <= 1e-12);
      CHECK(sparse_count == s.m_prime / k - 1);
      CHECK(dense_count == s.m - k);
      // the last dense term sees only x_n in its window, so the ratio is attained exactly there
      const double tail_cap = std::exp(-s.a_star / k) * (1.0 + 1e-12);
      for (std::int64_t i = s.n - k; i <= s.n - 2; ++i) CHECK(term(x, i, k) < std::exp(-s.a_star / k));
      CHECK(term(x, s.n - 1, k) <= tail_cap);
      CHECK(oracle::rel(term(x, s.n - 1, k), std::exp(-s.a_star / k)) <= 1e-12);
    }
  }
}

TEST_CASE("witness_value_and_bound certifies gamma_k + eps") {
  for (int k : {2, 3, 4}) {
    double prev_n = 0;
    for (double eps : {0.1, 0.01, 0.001}) {
      const auto s = plan(k, eps);
      const auto r = witness_value_and_bound(s);
      CHECK(r.value <= r.analytic_bound);
      CHECK(r.analytic_bound < r.gamma_plus_eps);
      CHECK(r.gamma_plus_eps == doctest::Approx(s.gamma + eps).epsilon(1e-15));
      // independent summation of the same vector
      const auto x = build_witness(s);
      std::vector<double> v(x.entries().begin(), x.entries().end());
      const double direct = double(k) / s.n * double(oracle::diananda(v, k));
      CHECK(oracle::rel(direct, r.value) <= 1e-12);
      CHECK(double(s.n) > prev_n);
      prev_n = double(s.n);
    }
  }
  const auto r2 = witness_value_and_bound(plan(2, 0.01));
  CHECK(r2.value < 0.99913);
  const auto r3 = witness_value_and_bound(plan(3, 0.005));
  CHECK(r3.value < solve_tangent(FamilyIndex::finite(3)).gamma + 0.005);
}
