#include "cyclic/cyclic_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cyclic/errors.hpp"

namespace cyclic {

CyclicVector::CyclicVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ShapeError("cyclic vector must have at least one entry");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const double v = entries_[i];
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError("entry x_" + std::to_string(i + 1) + " must be finite and nonnegative",
                        static_cast<std::int64_t>(i + 1));
    }
  }
}

bool CyclicVector::strictly_positive() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v > 0.0; });
}

void CyclicVector::check_window(std::size_t k) const {
  if (k < 1 || k > entries_.size()) {
    throw InvalidWindowError("window length k=" + std::to_string(k) + " outside [1, " +
                             std::to_string(entries_.size()) + "]");
  }
}

std::optional<std::int64_t> CyclicVector::first_empty_window(std::size_t k) const {
  check_window(k);
  const std::size_t n = entries_.size();
  // Length of the run of zeros ending at each slot, scanned twice around the
  // cycle so runs that wrap are seen in full.
  std::size_t run = 0;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const std::size_t s = step % n;
    run = entries_[s] == 0.0 ? run + 1 : 0;
    if (run >= k) {
      const std::size_t start = (s + n + 1 - k) % n;
      return static_cast<std::int64_t>(start + 1);
    }
  }
  return std::nullopt;
}

CyclicVector CyclicVector::rotated(std::int64_t shift) const {
  std::vector<double> out(entries_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = at(static_cast<std::int64_t>(i) + 1 + shift);
  }
  return CyclicVector(std::move(out));
}

CyclicVector CyclicVector::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
  std::vector<double> out(entries_);
  for (double& v : out) v *= factor;
  return CyclicVector(std::move(out));
}

}  // namespace cyclic
