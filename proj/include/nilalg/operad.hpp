#ifndef NILALG_OPERAD_HPP
#define NILALG_OPERAD_HPP

#include "nilalg/rational.hpp"

#include <cstddef>
#include <vector>

namespace nilalg {

/// Truncated power series c_1 x + ... + c_N x^N over Q (no constant term).
class FormalSeries {
public:
  FormalSeries() = default;
  explicit FormalSeries(std::size_t order) : c_(order) {}
  /// coeffs[0] is the coefficient of x.
  static FormalSeries from_coeffs(std::vector<Rational> coeffs) {
    FormalSeries s;
    s.c_ = std::move(coeffs);
    return s;
  }
  static FormalSeries identity(std::size_t order);

  std::size_t order() const { return c_.size(); }
  /// Coefficient of x^k, k >= 1; zero beyond the order.
  Rational coeff(std::size_t k) const;
  void set(std::size_t k, const Rational &v) { c_.at(k - 1) = v; }
  const std::vector<Rational> &coeffs() const { return c_; }

  /// s(-x)
  FormalSeries negate_argument() const;
  FormalSeries operator-() const;
  FormalSeries truncated(std::size_t order) const;

  friend bool operator==(const FormalSeries &, const FormalSeries &) = default;

private:
  std::vector<Rational> c_;
};

/// f(g(x)) to the common order. Throws OrderMismatch.
FormalSeries series_compose(const FormalSeries &f, const FormalSeries &g);

/// x + x^2/2 at the given order (>= 2).
FormalSeries gen_function_2nilp(std::size_t order);

/// d_1..d_kmax from d_1 = d_2 = 1 and
///   d_{2k+1} = Σ_{i=1..k} C(2k+1,i) d_i d_{2k+1-i}
///   d_{2k}   = Σ_{i=1..k-1} C(2k,i) d_i d_{2k-i} + C(2k,k) d_k^2 / 2.
/// Requires kmax >= 2.
std::vector<Integer> dual_dims(std::size_t kmax);

/// Σ d_k / k! x^k up to the order.
FormalSeries dual_series(std::size_t order);

/// f(-fdual(-x)) == x through degree `order`. Throws OrderMismatch when a
/// series is shorter than `order`.
bool koszul_check(const FormalSeries &f, const FormalSeries &fdual, std::size_t order);

/// (2k-3)!! with value 1 for k = 1, 2.
Integer odd_double_factorial(std::size_t k);

enum class Generator { OneDim, Regular };

/// dim Γ(E)(n): (2n-3)!! for a one-dimensional Σ_2-module, n!·Catalan(n-1)
/// for the regular representation.
Integer free_operad_dims(Generator e, std::size_t n);

struct CubicOperadDims {
  std::size_t asscubic4 = 0;
  std::size_t jordan_relation4 = 0;
  std::size_t jord4 = 0;
};

/// Arity-4 dimensions obtained as ranks of the Σ_4-orbits of the relation
/// vectors inside the free operads on one binary generator.
CubicOperadDims cubic_operad_dims();

} // namespace nilalg

#endif
