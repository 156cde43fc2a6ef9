#include "nilalg/rational.hpp"

#include "nilalg/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace nilalg {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      return false;
  return true;
}

} // namespace

Rational::Rational(long long num, long long den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  q_.canonicalize();
}

Rational::Rational(const Integer &num, const Integer &den) {
  if (den == 0)
    throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den)))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative)
    n = -n;
  return Rational(n, d);
}

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

void Rational::add_product(const Rational &a, const Rational &b) {
  if (a.is_zero() || b.is_zero())
    return;
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
}

void Rational::sub_product(const Rational &a, const Rational &b) {
  if (a.is_zero() || b.is_zero())
    return;
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
  mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), t.get_mpq_t());
}

} // namespace nilalg
