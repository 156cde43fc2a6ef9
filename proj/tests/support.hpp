// Shared helpers for the test suites: random constructions and oracles that
// do not go through the library's own elimination or bracket code.
#ifndef NILALG_TESTS_SUPPORT_HPP
#define NILALG_TESTS_SUPPORT_HPP

#include "nilalg/cochain.hpp"
#include "nilalg/constructors.hpp"
#include "nilalg/matrix.hpp"
#include "nilalg/structure_tensor.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

using nilalg::Rational;
using nilalg::StructureTensor;

inline constexpr std::int64_t kPrime = 1000003;

inline std::int64_t mod(std::int64_t a) {
  a %= kPrime;
  return a < 0 ? a + kPrime : a;
}

inline std::int64_t pow_mod(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b = mod(b);
  while (e > 0) {
    if (e & 1)
      r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

inline std::int64_t to_mod(const Rational &q) {
  const mpz_class num = q.numerator() % kPrime;
  const mpz_class den = q.denominator() % kPrime;
  return mod(num.get_si()) * pow_mod(mod(den.get_si()), kPrime - 2) % kPrime;
}

/// Rank over F_p by plain Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(m[r], m[piv]);
    const std::int64_t inv = pow_mod(m[r][c], kPrime - 2);
    for (auto &x : m[r])
      x = x * inv % kPrime;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const std::int64_t f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        m[i][k] = mod(m[i][k] - f * m[r][k]);
    }
    ++r;
  }
  return r;
}

inline std::vector<std::vector<std::int64_t>> to_mod(const nilalg::ExactMatrix &a) {
  std::vector<std::vector<std::int64_t>> m(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m[i][j] = to_mod(a(i, j));
  return m;
}

/// Dense structure constants as a plain nested array of rationals: C[i][j][k].
using Table = std::vector<std::vector<std::vector<Rational>>>;

inline Table table(const StructureTensor &g) {
  const std::size_t n = g.dim();
  Table t(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (const auto &b : g.brackets())
    for (const auto &term : b.rhs) {
      t[b.i - 1][b.j - 1][term.k - 1] = term.c;
      t[b.j - 1][b.i - 1][term.k - 1] = -term.c;
    }
  return t;
}

/// [u, v] computed straight from the table.
inline std::vector<Rational> br(const Table &t, const std::vector<Rational> &u, const std::vector<Rational> &v) {
  const std::size_t n = t.size();
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (u[i].is_zero() || v[j].is_zero())
        continue;
      for (std::size_t k = 0; k < n; ++k)
        out[k] += u[i] * v[j] * t[i][j][k];
    }
  return out;
}

inline std::vector<Rational> e(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v[i] = 1;
  return v;
}

inline bool zero(const std::vector<Rational> &v) {
  for (const auto &x : v)
    if (!x.is_zero())
      return false;
  return true;
}

/// Nilindex by brute force: smallest p such that every left-normed bracket
/// of p+1 basis vectors vanishes. Returns 0 when none up to `limit`.
inline std::size_t brute_nilindex(const StructureTensor &g, std::size_t limit = 8) {
  const Table t = table(g);
  const std::size_t n = g.dim();
  std::vector<std::vector<Rational>> level;
  for (std::size_t i = 0; i < n; ++i)
    level.push_back(e(n, i));
  for (std::size_t p = 1; p <= limit; ++p) {
    std::vector<std::vector<Rational>> next;
    for (const auto &v : level)
      for (std::size_t i = 0; i < n; ++i) {
        auto w = br(t, v, e(n, i));
        if (!zero(w))
          next.push_back(std::move(w));
      }
    if (next.empty())
      return p;
    // keep the list small: only an independent subset matters
    if (next.size() > 4 * n)
      next = nilalg::independent_subset(next, n);
    level = std::move(next);
  }
  return 0;
}

inline Rational rand_rational(std::mt19937_64 &rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Rational(d(rng));
}

/// Random invertible integer matrix with entries in [-2, 2].
inline nilalg::ExactMatrix random_invertible(std::mt19937_64 &rng, std::size_t n) {
  while (true) {
    nilalg::ExactMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p(i, j) = rand_rational(rng, -2, 2);
    if (nilalg::rank(p) == n)
      return p;
  }
}

/// 2-step algebra: r generators bracketing into c central vectors with random
/// coefficients, disguised by a random change of basis. Never abelian.
inline StructureTensor random_two_step(std::mt19937_64 &rng, std::size_t r, std::size_t c) {
  const std::size_t n = r + c;
  while (true) {
    nilalg::TensorBuilder b(n);
    bool any = false;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        for (std::size_t k = 0; k < c; ++k) {
          Rational v = rand_rational(rng, -2, 2);
          if (!v.is_zero()) {
            b.add(i, j, r + k, v);
            any = true;
          }
        }
    if (any)
      return nilalg::change_basis(b.build(), random_invertible(rng, n));
  }
}

/// 3-step algebra: a 3-step base plus a random 2-step or abelian summand,
/// disguised by a random change of basis.
inline StructureTensor random_three_step(std::mt19937_64 &rng, const std::vector<StructureTensor> &bases) {
  std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1), kind(0, 2);
  StructureTensor g = bases[pick(rng)];
  switch (kind(rng)) {
  case 0:
    g = nilalg::direct_sum(g, StructureTensor(1));
    break;
  case 1:
    g = nilalg::direct_sum(g, random_two_step(rng, 2, 1));
    break;
  default:
    break;
  }
  return nilalg::change_basis(g, random_invertible(rng, g.dim()));
}

/// Random skew 2-cochain with small integer values.
inline nilalg::AlternatingCochain random_cochain(std::mt19937_64 &rng, std::size_t degree, std::size_t n,
                                                 int density_percent = 100) {
  nilalg::AlternatingCochain c(degree, n);
  nilalg::Vector coords(c.size());
  std::uniform_int_distribution<int> pct(0, 99);
  for (auto &x : coords)
    if (pct(rng) < density_percent)
      x = rand_rational(rng);
  return nilalg::AlternatingCochain::from_coords(degree, n, coords);
}

} // namespace testsupport

#endif
