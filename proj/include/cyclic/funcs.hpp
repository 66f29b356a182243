#pragma once

#include <optional>
#include <string>

namespace cyclic {

/// Parameter of the family g_k: a positive real k, or the limit k -> infinity.
class FamilyIndex {
 public:
  /// Throws DomainError unless k > 0 and finite.
  static FamilyIndex finite(double k);
  static FamilyIndex infinity() noexcept { return FamilyIndex(); }

  bool is_infinite() const noexcept { return infinite_; }
  /// The finite value; +inf for the limit member.
  double value() const noexcept;
  /// "inf" or the shortest decimal that round-trips k.
  std::string label() const;

  friend bool operator==(const FamilyIndex&, const FamilyIndex&) = default;

 private:
  FamilyIndex() = default;
  double k_ = 0.0;
  bool infinite_ = true;
};

/// g_k(x) = k(1 - e^{-x/k}) / (e^x - 1), with g_k(0) = 1, and
/// g_inf(x) = x / (e^x - 1). Positive, decreasing and convex in x.
double eval_g(const FamilyIndex& idx, double x);

/// d/dx g_k(x). Strictly negative.
double eval_g_derivative(const FamilyIndex& idx, double x);

/// p(x) = (1 - e^{-x}) / x with p(0) = 1; g_k(x) = g_inf(x) p(x/k).
double eval_p(double x);

/// f_k(t) = k((1 + e^t)^{1/k} - 1). Convex; f_k(0) is the block lower bound.
double eval_f(int k, double t);

/// f_k'(t) = (1 + e^t)^{1/k} / (1 + e^{-t}).
double eval_f_derivative(int k, double t);

/// k(2^{1/k} - 1), a lower bound for (k/n) S_{n,k}(x) over all n >= k and
/// all x > 0. Decreases to ln 2. Throws DomainError for k < 1.
double jensen_lower_bound(int k);

/// Floors for (k/n) A(n,k) from several sources.
struct ReferenceLowerBounds {
  double jensen = 0.0;                  ///< k(2^{1/k} - 1), any n
  std::optional<double> diananda_1961;  ///< 2(k+1)/n, only when n > 2(k+1)
  double diananda_1962 = 0.0;           ///< 1/k, from A(n,k) >= n/k^2
  double best() const noexcept;
};

/// Throws DomainError unless n >= k >= 1.
ReferenceLowerBounds reference_lower_bounds(int n, int k);

}  // namespace cyclic
