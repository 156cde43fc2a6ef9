#include "nilalg/operad.hpp"

#include "nilalg/errors.hpp"
#include "nilalg/matrix.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

namespace nilalg {

FormalSeries FormalSeries::identity(std::size_t order) {
  FormalSeries s(order);
  if (order >= 1)
    s.c_[0] = Rational(1);
  return s;
}

Rational FormalSeries::coeff(std::size_t k) const {
  if (k == 0 || k > c_.size())
    return Rational(0);
  return c_[k - 1];
}

FormalSeries FormalSeries::negate_argument() const {
  FormalSeries s = *this;
  for (std::size_t k = 1; k <= s.c_.size(); k += 2)
    s.c_[k - 1] = -s.c_[k - 1];
  return s;
}

FormalSeries FormalSeries::operator-() const {
  FormalSeries s = *this;
  for (auto &c : s.c_)
    c = -c;
  return s;
}

FormalSeries FormalSeries::truncated(std::size_t order) const {
  FormalSeries s(order);
  for (std::size_t k = 1; k <= order; ++k)
    s.c_[k - 1] = coeff(k);
  return s;
}

namespace {

// a * b with both indexed from x^1, truncated at x^order.
std::vector<Rational> multiply(const std::vector<Rational> &a, const std::vector<Rational> &b, std::size_t order) {
  std::vector<Rational> out(order);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.size() && i + j + 2 <= order; ++j)
      out[i + j + 1].add_product(a[i], b[j]);
  }
  return out;
}

} // namespace

FormalSeries series_compose(const FormalSeries &f, const FormalSeries &g) {
  if (f.order() != g.order())
    throw OrderMismatch("series_compose: orders " + std::to_string(f.order()) + " and " +
                        std::to_string(g.order()) + " differ");
  const std::size_t n = f.order();
  std::vector<Rational> out(n);
  std::vector<Rational> power = g.coeffs();
  for (std::size_t k = 1; k <= n; ++k) {
    const Rational fk = f.coeff(k);
    if (!fk.is_zero())
      for (std::size_t i = 0; i < n; ++i)
        out[i].add_product(fk, power[i]);
    if (k < n)
      power = multiply(power, g.coeffs(), n);
  }
  return FormalSeries::from_coeffs(std::move(out));
}

FormalSeries gen_function_2nilp(std::size_t order) {
  if (order < 2)
    throw InvalidArgument("gen_function_2nilp: order must be >= 2");
  FormalSeries s(order);
  s.set(1, Rational(1));
  s.set(2, Rational(1, 2));
  return s;
}

namespace {

std::vector<std::vector<Integer>> pascal(std::size_t n) {
  std::vector<std::vector<Integer>> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    c[i].assign(i + 1, Integer(1));
    for (std::size_t j = 1; j < i; ++j)
      c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

} // namespace

std::vector<Integer> dual_dims(std::size_t kmax) {
  if (kmax < 2)
    throw InvalidArgument("dual_dims: kmax must be >= 2");
  const auto c = pascal(kmax);
  std::vector<Integer> d(kmax + 1, Integer(0));
  d[1] = 1;
  d[2] = 1;
  for (std::size_t m = 3; m <= kmax; ++m) {
    Integer s = 0;
    const std::size_t k = m / 2;
    if (m % 2 == 1) {
      for (std::size_t i = 1; i <= k; ++i)
        s += c[m][i] * d[i] * d[m - i];
    } else {
      for (std::size_t i = 1; i + 1 <= k; ++i)
        s += c[m][i] * d[i] * d[m - i];
      Integer half = c[m][k] * d[k] * d[k];
      s += half / 2;
    }
    d[m] = s;
  }
  return std::vector<Integer>(d.begin() + 1, d.end());
}

FormalSeries dual_series(std::size_t order) {
  const auto d = dual_dims(std::max<std::size_t>(order, 2));
  FormalSeries s(order);
  Integer fact = 1;
  for (std::size_t k = 1; k <= order; ++k) {
    fact *= static_cast<unsigned long>(k);
    s.set(k, Rational(d[k - 1], fact));
  }
  return s;
}

bool koszul_check(const FormalSeries &f, const FormalSeries &fdual, std::size_t order) {
  if (f.order() < order || fdual.order() < order)
    throw OrderMismatch("koszul_check: series shorter than the requested order");
  FormalSeries inner = (-fdual.truncated(order).negate_argument());
  FormalSeries composed = series_compose(f.truncated(order), inner);
  return composed == FormalSeries::identity(order);
}

Integer odd_double_factorial(std::size_t k) {
  Integer r = 1;
  for (std::size_t m = 3; m + 3 <= 2 * k; m += 2)
    r *= static_cast<unsigned long>(m);
  return r;
}

Integer free_operad_dims(Generator e, std::size_t n) {
  if (n < 1)
    throw InvalidArgument("free_operad_dims: n must be >= 1");
  if (e == Generator::OneDim)
    return odd_double_factorial(n);
  // n! * Catalan(n-1)
  const auto c = pascal(2 * n);
  Integer fact = 1;
  for (std::size_t i = 2; i <= n; ++i)
    fact *= static_cast<unsigned long>(i);
  Integer catalan = c[2 * (n - 1)][n - 1] / static_cast<unsigned long>(n);
  return fact * catalan;
}

namespace {

// Binary tree monomial written as nested parentheses over the digits 1..4,
// e.g. "((12)3)4". Each parenthesised group holds exactly two operands.
std::string relabel(const std::string &pattern, const std::vector<int> &sigma) {
  std::string out = pattern;
  for (auto &ch : out)
    if (ch >= '1' && ch <= '9')
      ch = static_cast<char>('0' + sigma[static_cast<std::size_t>(ch - '1')]);
  return out;
}

// Canonical form under commutativity of the product.
std::string commutative_form(const std::string &s, std::size_t &pos) {
  if (s[pos] != '(')
    return std::string(1, s[pos++]);
  ++pos;
  std::string a = commutative_form(s, pos);
  std::string b = commutative_form(s, pos);
  ++pos; // ')'
  if (b < a)
    std::swap(a, b);
  return "(" + a + b + ")";
}

std::string commutative_form(const std::string &s) {
  std::size_t pos = 0;
  return commutative_form(s, pos);
}

using Relation = std::vector<std::pair<int, std::string>>;

std::size_t orbit_rank(const std::vector<Relation> &generators, bool commutative) {
  std::vector<int> sigma{1, 2, 3, 4};
  std::vector<std::map<std::string, Rational>> vecs;
  std::map<std::string, std::size_t> index;
  do {
    for (const auto &rel : generators) {
      std::map<std::string, Rational> v;
      for (const auto &[c, pat] : rel) {
        std::string key = relabel(pat, sigma);
        if (commutative)
          key = commutative_form(key);
        v[key] += Rational(c);
        index.emplace(key, 0);
      }
      vecs.push_back(std::move(v));
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::size_t i = 0;
  for (auto &[k, idx] : index)
    idx = i++;
  ExactMatrix m(vecs.size(), index.size());
  for (std::size_t r = 0; r < vecs.size(); ++r)
    for (const auto &[k, c] : vecs[r])
      m(r, index.at(k)) = c;
  return rank(m);
}

} // namespace

CubicOperadDims cubic_operad_dims() {
  const std::vector<std::string> pentagon{"((12)3)4", "(1(23))4", "1((23)4)", "1(2(34))", "(12)(34)"};
  std::vector<Relation> ass;
  for (std::size_t e = 0; e < pentagon.size(); ++e)
    ass.push_back({{1, pentagon[e]}, {-1, pentagon[(e + 1) % pentagon.size()]}});
  const Relation jordan{{1, "((23)4)1"},  {1, "((31)4)2"},  {1, "((12)4)3"},
                        {-1, "(23)(41)"}, {-1, "(31)(42)"}, {-1, "(12)(43)"}};

  CubicOperadDims out;
  const std::size_t ass_rank = orbit_rank(ass, false);
  out.asscubic4 = static_cast<std::size_t>(free_operad_dims(Generator::Regular, 4).get_ui()) - ass_rank;
  out.jordan_relation4 = orbit_rank({jordan}, true);
  out.jord4 = static_cast<std::size_t>(free_operad_dims(Generator::OneDim, 4).get_ui()) - out.jordan_relation4;
  return out;
}

} // namespace nilalg
