#include "cyclic/optimize.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "cyclic/errors.hpp"
#include "cyclic/funcs.hpp"
#include "cyclic/sums.hpp"
#include "cyclic/tangent.hpp"

namespace cyclic {
namespace {

constexpr std::size_t kHistory = 10;
constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;
constexpr double kTieSlack = 1e-12;

// Objective (k/n) S(e^y) and its gradient in y, on raw storage.
class LogObjective {
 public:
  LogObjective(std::size_t n, std::size_t k) : n_(n), k_(k), x_(n), t_(n) {}

  double value(std::span<const double> y) {
    fill(y);
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s += x_[i] / t_[(i + 1) % n_];
    return scale() * s;
  }

  double value_and_gradient(std::span<const double> y, std::vector<double>& grad) {
    const double f = value(y);
    grad.assign(n_, 0.0);
    // d/dx_m: 1/t_{m+1} minus x_i/t_{i+1}^2 for windows i+1..i+k holding m.
    for (std::size_t i = 0; i < n_; ++i) {
      const std::size_t w = (i + 1) % n_;
      grad[i] += 1.0 / t_[w];
      const double q = x_[i] / (t_[w] * t_[w]);
      for (std::size_t j = 0; j < k_; ++j) grad[(w + j) % n_] -= q;
    }
    double mean = 0.0;
    for (std::size_t m = 0; m < n_; ++m) {
      grad[m] *= scale() * x_[m];
      mean += grad[m];
    }
    mean /= static_cast<double>(n_);
    for (double& g : grad) g -= mean;
    return f;
  }

 private:
  double scale() const { return static_cast<double>(k_) / static_cast<double>(n_); }

  void fill(std::span<const double> y) {
    for (std::size_t i = 0; i < n_; ++i) x_[i] = std::exp(y[i]);
    for (std::size_t i = 0; i < n_; ++i) {
      double t = 0.0;
      for (std::size_t j = 0; j < k_; ++j) t += x_[(i + j) % n_];
      t_[i] = t;
    }
  }

  std::size_t n_, k_;
  std::vector<double> x_, t_;
};

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

void center(std::vector<double>& y) {
  const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  for (double& v : y) v -= mean;
}

struct Pair {
  std::vector<double> s, g;
  double rho;
};

unsigned thread_count(unsigned requested, std::size_t jobs) {
  unsigned t = requested;
  if (t == 0) {
    if (const char* env = std::getenv("CYCLIC_BOUNDS_THREADS")) {
      t = static_cast<unsigned>(std::max(1L, std::strtol(env, nullptr, 10)));
    } else {
      t = std::max(1u, std::thread::hardware_concurrency());
    }
  }
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

std::vector<double> gradient(const CyclicVector& x, std::size_t k) {
  x.check_window(k);
  const auto v = x.entries();
  const std::size_t n = v.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (v[s] == 0.0) {
      throw DomainError("gradient needs x > 0; x_" + std::to_string(s + 1) + " is zero",
                        static_cast<std::int64_t>(s + 1));
    }
  }
  std::vector<double> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = interval_sum(x, static_cast<std::int64_t>(i + 1), k);
  std::vector<double> grad(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t w = (i + 1) % n;
    grad[i] += 1.0 / t[w];
    const double q = v[i] / (t[w] * t[w]);
    for (std::size_t j = 0; j < k; ++j) grad[(w + j) % n] -= q;
  }
  return grad;
}

MinimizationResult descend(const CyclicVector& start, std::size_t k, const MinimizeConfig& config) {
  start.check_window(k);
  if (!start.strictly_positive()) throw DomainError("descent needs a strictly positive start");
  const std::size_t n = start.size();
  LogObjective obj(n, k);

  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = std::log(start.entries()[i]);
  center(y);
  std::vector<double> g, g_new, d(n), y_new(n);
  double f = obj.value_and_gradient(y, g);
  std::deque<Pair> hist;
  double last_step = 1.0;
  double gnorm = std::sqrt(dot(g, g));
  bool converged = gnorm <= config.grad_tol;

  for (int iter = 0; iter < config.max_iters && !converged; ++iter) {
    // two-loop recursion
    d = g;
    std::vector<double> alpha(hist.size());
    for (std::size_t h = hist.size(); h-- > 0;) {
      alpha[h] = hist[h].rho * dot(hist[h].s, d);
      for (std::size_t i = 0; i < n; ++i) d[i] -= alpha[h] * hist[h].g[i];
    }
    if (!hist.empty()) {
      const auto& last = hist.back();
      const double gamma = dot(last.s, last.g) / dot(last.g, last.g);
      for (double& v : d) v *= gamma;
    }
    for (std::size_t h = 0; h < hist.size(); ++h) {
      const double beta = hist[h].rho * dot(hist[h].g, d);
      for (std::size_t i = 0; i < n; ++i) d[i] += (alpha[h] - beta) * hist[h].s[i];
    }
    for (double& v : d) v = -v;
    double slope = dot(g, d);
    if (!(slope < 0.0)) {
      hist.clear();
      for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
      slope = -gnorm * gnorm;
    }

    // Quasi-Newton steps start at 1; plain gradient steps reuse the last scale.
    double step = hist.empty() ? std::min(1.0, 2.0 * last_step) : 1.0;
    if (iter == 0) step = std::min(1.0, 1.0 / gnorm);
    double f_new = f;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      for (std::size_t i = 0; i < n; ++i) y_new[i] = y[i] + step * d[i];
      f_new = obj.value(y_new);
      if (std::isfinite(f_new) && f_new <= f + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (hist.empty()) break;  // no descent left at working precision
      hist.clear();
      continue;
    }
    center(y_new);
    f_new = obj.value_and_gradient(y_new, g_new);

    Pair p{std::vector<double>(n), std::vector<double>(n), 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      p.s[i] = y_new[i] - y[i];
      p.g[i] = g_new[i] - g[i];
    }
    const double sy = dot(p.s, p.g);
    if (sy > 1e-14 * std::sqrt(dot(p.s, p.s) * dot(p.g, p.g))) {
      p.rho = 1.0 / sy;
      hist.push_back(std::move(p));
      if (hist.size() > kHistory) hist.pop_front();
    }
    last_step = step;
    y.swap(y_new);
    g.swap(g_new);
    f = f_new;
    gnorm = std::sqrt(dot(g, g));
    converged = gnorm <= config.grad_tol;
  }

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(y[i]);
  MinimizationResult r;
  r.n = n;
  r.k = k;
  r.x_best = CyclicVector(std::move(x));
  r.value = normalized_diananda_sum(r.x_best, k);
  r.certified_floor = jensen_lower_bound(static_cast<int>(k));
  r.restarts_used = 1;
  r.converged = converged;
  r.gradient_norm = gnorm;
  return r;
}

namespace {
// log-depths of the boundary probes; each step squares the distance to the boundary
constexpr std::array<double, 3> kBoundaryLogs{3.0, 6.0, 12.0};
}  // namespace

std::vector<CyclicVector> structured_starts(std::size_t n, std::size_t k) {
  std::vector<CyclicVector> starts;
  starts.emplace_back(std::vector<double>(n, 1.0));
  if (n >= 2) {
    // Single spike and single dip walked toward the boundary: e^{+-3}, e^{+-6}, e^{+-12}.
    for (double h : kBoundaryLogs) {
      std::vector<double> spike(n, 1.0), dip(n, 1.0);
      spike[0] = std::exp(h);
      dip[0] = std::exp(-h);
      starts.emplace_back(std::move(spike));
      starts.emplace_back(std::move(dip));
    }
  }
  if (k >= 2 && n % k == 0 && n >= 2 * k) {
    // Sparse-then-geometric profile of the tangent construction, with the
    // zero slots lifted into the interior.
    const TangentSolution sol = solve_tangent(FamilyIndex::finite(static_cast<double>(k)));
    const auto blocks = static_cast<std::int64_t>(n / k);
    auto dense_blocks = std::llround(sol.mu * static_cast<double>(blocks));
    dense_blocks = std::clamp<std::int64_t>(dense_blocks, 1, blocks - 1);
    const std::int64_t kk = static_cast<std::int64_t>(k);
    const std::int64_t nn = static_cast<std::int64_t>(n);
    const std::int64_t m = dense_blocks * kk;
    const std::int64_t mp = nn - m;
    const double b = -sol.a * static_cast<double>(m) / static_cast<double>(mp);
    for (double lift : kBoundaryLogs) {
      std::vector<double> logs(n);
      for (std::int64_t i = 1; i <= nn; ++i) {
        double lx;
        if (i >= mp) {
          lx = -sol.a * static_cast<double>(nn - i) / static_cast<double>(kk);
        } else {
          const std::int64_t j = (i + kk - 1) / kk;  // next multiple of k is j*k
          lx = static_cast<double>(j) * b - (i % kk == 0 ? 0.0 : lift);
        }
        logs[static_cast<std::size_t>(i - 1)] = lx;
      }
      const double top = *std::max_element(logs.begin(), logs.end());
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = std::exp(logs[i] - top);
      starts.emplace_back(std::move(x));
    }
  }
  return starts;
}

MinimizationResult minimize(std::size_t n, std::size_t k, const MinimizeConfig& config) {
  if (k < 1 || n < k) throw DomainError("minimize needs n >= k >= 1");
  if (config.restarts < 0 || config.max_iters < 1 || !(config.grad_tol >= 0.0)) {
    throw DomainError("minimize config needs restarts >= 0, max_iters >= 1, grad_tol >= 0");
  }
  std::vector<CyclicVector> starts = structured_starts(n, k);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> logs(-3.0, 3.0);
  for (int r = 0; r < config.restarts; ++r) {
    std::vector<double> x(n);
    for (double& v : x) v = std::exp(logs(rng));
    starts.emplace_back(std::move(x));
  }

  std::vector<std::optional<MinimizationResult>> results(starts.size());
  const unsigned threads = thread_count(config.threads, starts.size());
  const auto work = [&](std::size_t first) {
    for (std::size_t s = first; s < starts.size(); s += threads) {
      results[s] = descend(starts[s], k, config);
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  std::size_t best = 0;
  for (std::size_t s = 1; s < results.size(); ++s) {
    if (results[s]->value < results[best]->value - kTieSlack) best = s;
  }
  MinimizationResult out = std::move(*results[best]);
  out.restarts_used = static_cast<int>(starts.size());
  return out;
}

std::vector<double> default_grid_levels() {
  constexpr int kLevels = 40;
  std::vector<double> levels(kLevels);
  for (int i = 0; i < kLevels; ++i) {
    levels[static_cast<std::size_t>(i)] = std::pow(10.0, -3.0 + 6.0 * i / (kLevels - 1));
  }
  return levels;
}

double grid_oracle(std::size_t n, std::size_t k, std::span<const double> levels) {
  if (n < 1 || n > kGridOracleMaxN) throw DomainError("grid oracle supports 1 <= n <= 5");
  if (k < 1 || k > n) throw DomainError("grid oracle needs 1 <= k <= n");
  if (levels.empty()) throw DomainError("grid oracle needs at least one level");
  for (double l : levels) {
    if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("grid levels must be positive");
  }
  const double points = std::pow(static_cast<double>(levels.size()), static_cast<double>(n - 1));
  if (points > kGridOracleBudget) {
    throw CapacityError("grid oracle would evaluate " + std::to_string(points) + " points",
                        points);
  }
  const std::size_t L = levels.size();
  std::vector<std::size_t> digit(n, 0);
  std::array<double, kGridOracleMaxN> x{};
  x[0] = levels[L / 2];
  const double scale = static_cast<double>(k) / static_cast<double>(n);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    for (std::size_t i = 1; i < n; ++i) x[i] = levels[digit[i]];
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double t = 0.0;
      for (std::size_t j = 1; j <= k; ++j) t += x[(i + j) % n];
      s += x[i] / t;
    }
    best = std::min(best, scale * s);
    std::size_t pos = 1;
    while (pos < n && ++digit[pos] == L) digit[pos++] = 0;
    if (pos >= n) break;
  }
  return best;
}

}  // namespace cyclic
