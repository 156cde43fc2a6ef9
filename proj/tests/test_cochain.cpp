#include "nilalg/cochain.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nilalg;

namespace {

int inversion_sign(const Tuple &t) {
  int s = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j])
        return 0;
      if (t[i] > t[j])
        s = -s;
    }
  return s;
}

} // namespace

TEST_CASE("binomials and increasing tuples") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  for (std::size_t n = 0; n <= 7; ++n)
    for (std::size_t m = 0; m <= n + 1; ++m) {
      const auto ts = increasing_tuples(n, m);
      CHECK(ts.size() == binomial(n, m));
      CHECK(std::is_sorted(ts.begin(), ts.end()));
      for (std::size_t r = 0; r < ts.size(); ++r) {
        CHECK(std::adjacent_find(ts[r].begin(), ts[r].end(), std::greater_equal<>()) == ts[r].end());
        CHECK(tuple_rank(n, ts[r]) == r);
      }
    }
  CHECK(increasing_tuples(4, 2).front() == Tuple{0, 1});
  CHECK(increasing_tuples(4, 2).back() == Tuple{2, 3});
}

TEST_CASE("sorting sign matches the inversion count") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::size_t> d(0, 5);
  for (int it = 0; it < 500; ++it) {
    Tuple t(1 + it % 5);
    for (auto &x : t)
      x = d(rng);
    Tuple sorted = t;
    const int s = sort_with_sign(sorted);
    CHECK(s == inversion_sign(t));
    if (s != 0)
      CHECK(std::is_sorted(sorted.begin(), sorted.end()));
  }
}

TEST_CASE("alternating cochains are skew") {
  std::mt19937_64 rng(4);
  const auto c = testsupport::random_cochain(rng, 3, 5);
  CHECK(c.size() == binomial(5, 3) * 5);
  Vector v = c.value({0, 2, 4});
  Vector neg = v;
  for (auto &x : neg)
    x = -x;
  CHECK(c.value({2, 0, 4}) == neg);
  CHECK(c.value({2, 4, 0}) == v);
  CHECK(is_zero(c.value({1, 1, 3})));
  CHECK(AlternatingCochain::from_coords(3, 5, c.coords()) == c);

  AlternatingCochain d(2, 3);
  CHECK(d.is_zero());
  d.set({2, 0}, {1, 2, 3});
  CHECK(d.value({0, 2}) == Vector{-1, -2, -3});
  CHECK_FALSE(d.is_zero());
}

TEST_CASE("evaluation is multilinear and alternating") {
  std::mt19937_64 rng(6);
  const std::size_t n = 4;
  const auto c = testsupport::random_cochain(rng, 2, n);
  for (int it = 0; it < 50; ++it) {
    Vector x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = testsupport::rand_rational(rng);
      y[i] = testsupport::rand_rational(rng);
    }
    // expand in the basis by hand
    Vector expected(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector v = c.value({i, j});
        for (std::size_t k = 0; k < n; ++k)
          expected[k] += x[i] * y[j] * v[k];
      }
    CHECK(c.evaluate({x, y}) == expected);
    CHECK(is_zero(c.evaluate({x, x})));
  }
}

TEST_CASE("multilinear maps") {
  MultilinearMap m(2, 3);
  CHECK(m.is_zero());
  CHECK(m.is_alternating());
  m.value({0, 1}) = {0, 0, 1};
  CHECK_FALSE(m.is_alternating());
  m.value({1, 0}) = {0, 0, -1};
  CHECK(m.is_alternating());
  const auto a = m.to_alternating();
  CHECK(a.value({0, 1}) == Vector{0, 0, 1});
  CHECK(a.value({1, 2}) == Vector{0, 0, 0});
  m.value({2, 2}) = {1, 0, 0};
  CHECK_FALSE(m.is_alternating());
}
