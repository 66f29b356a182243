#include "cyclic/sums.hpp"

#include <cmath>
#include <string>

#include "cyclic/errors.hpp"
#include "cyclic/summation.hpp"

namespace cyclic {
namespace {

// Sum of k consecutive entries starting at 0-based slot `start`. Terms are
// nonnegative, so plain accumulation is accurate to (k-1) ulps.
double window_from_slot(std::span<const double> v, std::size_t start, std::size_t k) {
  const std::size_t n = v.size();
  double t = 0.0;
  std::size_t s = start;
  for (std::size_t j = 0; j < k; ++j) {
    t += v[s];
    if (++s == n) s = 0;
  }
  return t;
}

[[noreturn]] void throw_empty_window(std::int64_t start, std::size_t k) {
  throw DomainError("window sum t_{" + std::to_string(start) + "," + std::to_string(k) +
                        "} is zero",
                    start);
}

}  // namespace

double interval_sum(const CyclicVector& x, std::int64_t i, std::size_t k) {
  x.check_window(k);
  return window_from_slot(x.entries(), x.slot(i), k);
}

double diananda_sum(const CyclicVector& x, std::size_t k) {
  x.check_window(k);
  const auto v = x.entries();
  const std::size_t n = v.size();
  CompensatedSum acc;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t next = s + 1 == n ? 0 : s + 1;
    const double t = window_from_slot(v, next, k);
    if (t == 0.0) throw_empty_window(static_cast<std::int64_t>(next + 1), k);
    if (v[s] != 0.0) acc.add(v[s] / t);
  }
  return acc.value();
}

double normalized_diananda_sum(const CyclicVector& x, std::size_t k) {
  return static_cast<double>(k) / static_cast<double>(x.size()) * diananda_sum(x, k);
}

double baston_sum(const CyclicVector& x, std::size_t k) {
  x.check_window(k);
  const auto v = x.entries();
  CompensatedSum acc;
  for (std::size_t s = 0; s < v.size(); ++s) {
    const double t = window_from_slot(v, s, k);
    if (t == 0.0) throw_empty_window(static_cast<std::int64_t>(s + 1), k);
    if (v[s] != 0.0) acc.add(v[s] / t);
  }
  return acc.value();
}

CyclicVector replicate(const CyclicVector& x, std::size_t copies) {
  if (copies < 1) throw ShapeError("replicate needs at least one copy");
  const auto v = x.entries();
  std::vector<double> out;
  out.reserve(v.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) out.insert(out.end(), v.begin(), v.end());
  return CyclicVector(std::move(out));
}

CyclicVector zero_insert(const CyclicVector& x, std::size_t k) {
  if (k < 1 || x.size() % k != 0) {
    throw ShapeError("zero_insert needs n divisible by k (n=" + std::to_string(x.size()) +
                     ", k=" + std::to_string(k) + ")");
  }
  const auto v = x.entries();
  const std::size_t nu = v.size() / k;
  std::vector<double> out;
  out.reserve((k + 1) * nu);
  for (std::size_t j = 0; j < nu; ++j) {
    out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(j * k),
               v.begin() + static_cast<std::ptrdiff_t>((j + 1) * k));
    out.push_back(0.0);
  }
  return CyclicVector(std::move(out));
}

BlockDiagnostics block_diagnostics(const CyclicVector& x, std::size_t k) {
  x.check_window(k);
  if (x.size() % k != 0) {
    throw ShapeError("block diagnostics need n divisible by k (n=" + std::to_string(x.size()) +
                     ", k=" + std::to_string(k) + ")");
  }
  const auto v = x.entries();
  for (std::size_t s = 0; s < v.size(); ++s) {
    if (v[s] == 0.0) {
      throw DomainError("block diagnostics need x > 0; x_" + std::to_string(s + 1) + " is zero",
                        static_cast<std::int64_t>(s + 1));
    }
  }
  const std::size_t n = v.size();
  BlockDiagnostics d;
  d.k = k;
  d.nu = n / k;
  d.ratios.resize(d.nu);
  d.partials.resize(d.nu);
  for (std::size_t j = 0; j < d.nu; ++j) {
    const std::size_t head = j * k;
    d.ratios[j] = window_from_slot(v, head, k) / window_from_slot(v, (head + k) % n, k);
    CompensatedSum s;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t slot = head + i;
      s.add(v[slot] / window_from_slot(v, (slot + 1) % n, k));
    }
    d.partials[j] = s.value();
  }
  return d;
}

}  // namespace cyclic
