#ifndef NILALG_RATIONAL_HPP
#define NILALG_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace nilalg {

using Integer = mpz_class;

/// Exact element of Q, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
  Rational() = default;
  Rational(long long n) : q_(static_cast<long>(n)) {}
  Rational(long long num, long long den);
  Rational(const Integer &num, const Integer &den);
  explicit Rational(const Integer &n) : q_(n) {}
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional leading '-' (or '+'); no spaces,
  /// no decimal point, q > 0.
  static Rational parse(std::string_view text);

  std::string str() const { return q_.get_str(); }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class &value() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  /// Combined bit length of numerator and denominator; the pivot heuristic
  /// prefers small values.
  std::size_t bit_size() const;

  Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
  Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
  Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
  Rational &operator/=(const Rational &o);

  /// this += a*b without a temporary Rational.
  void add_product(const Rational &a, const Rational &b);
  void sub_product(const Rational &a, const Rational &b);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

private:
  mpq_class q_;
};

} // namespace nilalg

#endif
