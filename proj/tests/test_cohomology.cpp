#include "nilalg/catalog.hpp"
#include "nilalg/cohomology.hpp"
#include "nilalg/constructors.hpp"
#include "nilalg/errors.hpp"
#include "nilalg/lie.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace nilalg;
using testsupport::Table;

namespace {

using V = std::vector<Rational>;

V plus(V a, const V &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] += b[i];
  return a;
}

V minus(V a, const V &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] -= b[i];
  return a;
}

V neg(V a) {
  for (auto &x : a)
    x = -x;
  return a;
}

Table cochain_table(const AlternatingCochain &phi) {
  const std::size_t n = phi.dim();
  Table t(n, std::vector<V>(n, V(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i][j] = phi.value({i, j});
  return t;
}

// Direct evaluation of the three coboundaries on basis vectors.
struct Oracle {
  Table mu, phi;
  V m(const V &x, const V &y) const { return testsupport::br(mu, x, y); }
  V f(const V &x, const V &y) const { return testsupport::br(phi, x, y); }
  V h(const V &x, const V &y, const V &z) const {
    return minus(plus(minus(m(x, f(y, z)), f(m(x, y), z)), f(x, m(y, z))), m(f(x, y), z));
  }
  V c(const V &x, const V &y, const V &z) const {
    return plus(plus(plus(plus(plus(m(f(x, y), z), m(f(y, z), x)), m(f(z, x), y)), f(m(x, y), z)), f(m(y, z), x)),
                f(m(z, x), y));
  }
  V hc(const V &x, const V &y, const V &z) const { return plus(f(m(x, y), z), m(f(x, y), z)); }
};

bool all_zero_oracle(const Oracle &o, std::size_t n, V (Oracle::*op)(const V &, const V &, const V &) const) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!testsupport::zero((o.*op)(testsupport::e(n, a), testsupport::e(n, b), testsupport::e(n, c))))
          return false;
  return true;
}

// dim Z² over F_p: kernel of φ ↦ δ_HC φ on all basis triples.
std::size_t oracle_z2(const StructureTensor &g) {
  const std::size_t n = g.dim();
  const Table t = testsupport::table(g);
  // unknown φ(a,b)_k for a < b
  auto col = [&](std::size_t a, std::size_t b, std::size_t k) {
    if (a > b)
      std::swap(a, b);
    std::size_t r = 0;
    for (std::size_t x = 0; x < a; ++x)
      r += n - 1 - x;
    r += b - a - 1;
    return r * n + k;
  };
  const std::size_t unknowns = n * (n - 1) / 2 * n;
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t s = 0; s < n; ++s) {
          std::vector<std::int64_t> row(unknowns, 0);
          bool any = false;
          // φ([x,y], z)_s
          for (std::size_t l = 0; l < n; ++l) {
            if (t[x][y][l].is_zero() || l == z)
              continue;
            const auto c = col(l, z, s);
            const std::int64_t sign = l < z ? 1 : -1;
            row[c] = testsupport::mod(row[c] + sign * testsupport::to_mod(t[x][y][l]));
            any = true;
          }
          // [φ(x,y), z]_s
          if (x != y)
            for (std::size_t l = 0; l < n; ++l) {
              if (t[l][z][s].is_zero())
                continue;
              const auto c = col(x, y, l);
              const std::int64_t sign = x < y ? 1 : -1;
              row[c] = testsupport::mod(row[c] + sign * testsupport::to_mod(t[l][z][s]));
              any = true;
            }
          if (any)
            rows.push_back(std::move(row));
        }
  return unknowns - testsupport::rank_mod_p(rows);
}

// rank of f ↦ δf over F_p, assembled from the defining formula.
std::size_t oracle_b2(const StructureTensor &g) {
  const std::size_t n = g.dim();
  const Table t = testsupport::table(g);
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::int64_t> row(n * n, 0);
        // unknown f_{a b}: coefficient of X_a in f(X_b), column a*n+b
        for (std::size_t a = 0; a < n; ++a) {
          row[a * n + x] = testsupport::mod(row[a * n + x] + testsupport::to_mod(t[a][y][s]));
          row[a * n + y] = testsupport::mod(row[a * n + y] + testsupport::to_mod(t[x][a][s]));
          row[s * n + a] = testsupport::mod(row[s * n + a] - testsupport::to_mod(t[x][y][a]));
        }
        rows.push_back(std::move(row));
      }
  return testsupport::rank_mod_p(rows);
}

AlternatingCochain single(std::size_t degree, std::size_t n, const Tuple &args, std::size_t k) {
  AlternatingCochain c(degree, n);
  c.set(args, testsupport::e(n, k));
  return c;
}

std::vector<StructureTensor> lie_catalog() {
  std::vector<StructureTensor> out;
  for (const auto &en : load_catalog())
    if (is_lie(en.tensor))
      out.push_back(en.tensor);
  return out;
}

std::vector<StructureTensor> two_step_catalog() {
  std::vector<StructureTensor> out;
  for (const auto &g : lie_catalog())
    if (nilindex(g) <= 2)
      out.push_back(g);
  return out;
}

} // namespace

TEST_CASE("coboundary examples") {
  const auto h3 = heisenberg(1);
  const auto ab = StructureTensor(3);
  std::mt19937_64 rng(1);
  const auto r = testsupport::random_cochain(rng, 2, 3);
  CHECK(delta_h(ab, r).is_zero());
  CHECK(delta_c(ab, r).is_zero());
  CHECK(delta_hc(ab, r).is_zero());

  const auto central = single(2, 3, {0, 1}, 2);
  CHECK(delta_h(h3, central).is_zero());
  CHECK(delta_c(h3, central).is_zero());
  CHECK(delta_hc(h3, central).is_zero());

  // φ(X1,X2) = X1: δ_H(φ)(X1,X2,X2) = -μ(φ(X1,X2),X2) = -X3
  const auto dh = delta_h(h3, single(2, 3, {0, 1}, 0));
  CHECK_FALSE(dh.is_zero());
  CHECK(dh.value({0, 1, 1}) == V{0, 0, -1});

  // 𝔨5, φ(X2,X4) = X2: δ_HC(φ)(X2,X4,X1) = μ(X2,X1) = -X3
  const auto k5 = k_odd(2);
  const auto dhc = delta_hc(k5, single(2, 5, {1, 3}, 1));
  CHECK_FALSE(dhc.is_zero());
  CHECK(dhc.value({1, 3, 0}) == V{0, 0, -1, 0, 0});

  const auto dc = delta_c(h3, r);
  CHECK(dc.is_alternating());
  CHECK_THROWS_AS(delta_hc(h3, testsupport::random_cochain(rng, 2, 4)), DimensionMismatch);
}

TEST_CASE("coboundaries agree with direct evaluation") {
  std::mt19937_64 rng(8);
  for (const auto &g : lie_catalog()) {
    if (g.dim() > 6)
      continue;
    const std::size_t n = g.dim();
    for (int it = 0; it < 3; ++it) {
      const auto phi = testsupport::random_cochain(rng, 2, n, 40);
      const Oracle o{testsupport::table(g), cochain_table(phi)};
      const auto dh = delta_h(g, phi), dc = delta_c(g, phi), dhc = delta_hc(g, phi);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t c = 0; c < n; ++c) {
            const auto x = testsupport::e(n, a), y = testsupport::e(n, b), z = testsupport::e(n, c);
            CHECK(dh.value({a, b, c}) == o.h(x, y, z));
            CHECK(dc.value({a, b, c}) == o.c(x, y, z));
            CHECK(dhc.value({a, b, c}) == o.hc(x, y, z));
          }
    }
  }
}

TEST_CASE("lemma identities hold pointwise") {
  std::mt19937_64 rng(9);
  for (const auto &g : two_step_catalog()) {
    const std::size_t n = g.dim();
    for (int it = 0; it < 5; ++it) {
      const auto phi = testsupport::random_cochain(rng, 2, n, 30);
      const Oracle o{testsupport::table(g), cochain_table(phi)};
      const auto dh = delta_h(g, phi), dc = delta_c(g, phi), dhc = delta_hc(g, phi);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z) {
            const V rhs1 =
                plus(o.m(o.f(testsupport::e(n, z), testsupport::e(n, x)), testsupport::e(n, y)),
                     o.f(o.m(testsupport::e(n, z), testsupport::e(n, x)), testsupport::e(n, y)));
            CHECK(plus(dc.value({x, y, z}), dh.value({x, y, z})) == rhs1);
            CHECK(dh.value({x, y, z}) == neg(plus(dhc.value({x, y, z}), dhc.value({y, z, x}))));
            CHECK(dc.value({x, y, z}) == plus(plus(dhc.value({x, y, z}), dhc.value({y, z, x})), dhc.value({z, x, y})));
          }
    }
  }
}

TEST_CASE("lemma equivalence on sparse random cochains") {
  std::mt19937_64 rng(10);
  for (const auto &g : {heisenberg(1), heisenberg(2), k_odd(2), k_even(3)}) {
    const Oracle base{testsupport::table(g), {}};
    for (int it = 0; it < 60; ++it) {
      const auto phi = testsupport::random_cochain(rng, 2, g.dim(), it % 3 == 0 ? 5 : 15);
      const bool hc = delta_hc(g, phi).is_zero();
      CHECK(hc == (delta_h(g, phi).is_zero() && delta_c(g, phi).is_zero()));
      Oracle o = base;
      o.phi = cochain_table(phi);
      CHECK(hc == all_zero_oracle(o, g.dim(), &Oracle::hc));
    }
  }
}

TEST_CASE("matrix of the mixed coboundary") {
  const auto m = delta_hc_matrix(heisenberg(1));
  CHECK(m.rows() == 27);
  CHECK(m.cols() == 9);
  CHECK(rank(m) == 6);
  CHECK(m.cols() - rank(m) == 3);
  std::mt19937_64 rng(12);
  const auto g = k_odd(2);
  const auto dm = delta_hc_matrix(g);
  for (int it = 0; it < 10; ++it) {
    const auto phi = testsupport::random_cochain(rng, 2, 5);
    const Vector img = dm * phi.coords();
    const auto d = delta_hc(g, phi);
    std::size_t row = 0;
    for (const auto &pr : increasing_tuples(5, 2))
      for (std::size_t k = 0; k < 5; ++k)
        for (std::size_t s = 0; s < 5; ++s)
          CHECK(img[row++] == d.value({pr[0], pr[1], k})[s]);
  }
}

TEST_CASE("relabelling identity for the degree-2 general coboundary") {
  std::mt19937_64 rng(13);
  for (const auto &g : lie_catalog()) {
    if (g.dim() > 6)
      continue;
    const auto psi = testsupport::random_cochain(rng, 2, g.dim(), 50);
    const auto gen = delta_hc_general(g, psi);
    const auto hc = delta_hc(g, psi);
    for (const auto &t : increasing_tuples(g.dim(), 3))
      CHECK(gen.value(t) == neg(hc.value({t[1], t[2], t[0]})));
  }
}

TEST_CASE("general coboundary examples") {
  std::mt19937_64 rng(14);
  for (std::size_t deg = 1; deg <= 4; ++deg)
    CHECK(delta_hc_general(StructureTensor(5), testsupport::random_cochain(rng, deg, 5)).is_zero());
  // degree 1 on 𝔨5 with ψ = id: only the leading term survives, giving μ0
  const auto k5 = k_odd(2);
  AlternatingCochain id(1, 5);
  for (std::size_t i = 0; i < 5; ++i)
    id.set({i}, testsupport::e(5, i));
  const auto d = delta_hc_general(k5, id);
  for (const auto &t : increasing_tuples(5, 2))
    CHECK(d.value(t) == k5.bracket_basis(t[0], t[1]));
  CHECK_THROWS_AS(delta_hc_general(k5, AlternatingCochain(0, 5)), DegreeOutOfRange);
}

TEST_CASE("general coboundary squares to zero on the k family") {
  for (const auto &g : {heisenberg(1), k_odd(2), k_odd(3), k_even(3)})
    for (std::size_t deg = 1; deg <= 3; ++deg) {
      AlternatingCochain z(deg, g.dim());
      for (std::size_t r = 0; r < z.size(); ++r) {
        Vector c(z.size());
        c[r] = 1;
        const auto psi = AlternatingCochain::from_coords(deg, g.dim(), c);
        CHECK(delta_hc_general(g, delta_hc_general(g, psi)).is_zero());
      }
    }
}

TEST_CASE("general coboundary does not square to zero on h5") {
  const auto h5 = heisenberg(2);
  // ψ(X5) = X1
  const auto psi1 = single(1, 5, {4}, 0);
  CHECK_FALSE(delta_hc_general(h5, delta_hc_general(h5, psi1)).is_zero());
  // ψ(X2,X5) = X2
  const auto psi2 = single(2, 5, {1, 4}, 1);
  CHECK_FALSE(delta_hc_general(h5, delta_hc_general(h5, psi2)).is_zero());
}

TEST_CASE("delta1") {
  const auto h3 = heisenberg(1);
  const auto d = delta1(h3, ExactMatrix::identity(3));
  CHECK(d.value({0, 1}) == V{0, 0, 1});
  CHECK(d.value({0, 2}) == V{0, 0, 0});
  CHECK(d.value({1, 2}) == V{0, 0, 0});
  std::mt19937_64 rng(15);
  CHECK(delta1(StructureTensor(4), testsupport::random_invertible(rng, 4)).is_zero());
  const auto k7 = k_odd(3);
  CHECK(rank(delta1_matrix(k7)) == 49 - derivations_dim(k7));
  // matrix columns are matrix units
  const auto m = delta1_matrix(k7);
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = 0; b < 7; ++b) {
      ExactMatrix f(7, 7);
      f(a, b) = 1;
      CHECK(delta1(k7, f).coords() == m.column(a * 7 + b));
    }
  CHECK_THROWS_AS(delta1(k7, ExactMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("Heisenberg cohomology") {
  for (std::size_t p = 1; p <= 4; ++p) {
    const auto r = cohomology_dims_hc(heisenberg(p));
    CHECK(r.dimZ2 == p * (2 * p + 1));
    CHECK(r.dimB2 == p * (2 * p + 1));
    CHECK(r.dimH2 == 0);
    CHECK(r.rigid_in_2nilp);
    CHECK(rigidity_certificate(heisenberg(p)).verdict == Rigidity::RigidIn2Nilp);
  }
}

TEST_CASE("k family cohomology") {
  for (std::size_t p = 2; p <= 5; ++p)
    CHECK(cohomology_dims_hc(k_odd(p)).dimH2 == p * (p + 1) * (p - 2) / 2);
  CHECK(rigidity_certificate(k_odd(2)).verdict == Rigidity::RigidIn2Nilp);
  const auto c = rigidity_certificate(k_odd(4));
  CHECK(c.verdict == Rigidity::Inconclusive);
  CHECK(c.report.dimH2 == 20);
}

TEST_CASE("cohomology agrees with the modular oracle") {
  std::vector<StructureTensor> algs = two_step_catalog();
  for (std::size_t p = 2; p <= 4; ++p)
    algs.push_back(k_even(p));
  algs.push_back(free_two_step(3));
  std::mt19937_64 rng(16);
  for (int i = 0; i < 4; ++i)
    algs.push_back(testsupport::random_two_step(rng, 3, 2));
  for (const auto &g : algs) {
    CAPTURE(g.name());
    const auto r = cohomology_dims_hc(g);
    CHECK(r.two_step);
    CHECK(r.dimZ2 == oracle_z2(g));
    CHECK(r.dimB2 == oracle_b2(g));
    CHECK(r.dimH2 == r.dimZ2 - r.dimB2);
  }
}

TEST_CASE("cohomology of other inputs") {
  const auto f4 = filiform(4);
  const auto r = cohomology_dims_hc(f4);
  CHECK_FALSE(r.two_step);
  CHECK(r.dimZ2 == oracle_z2(f4));
  CHECK(r.dimB2 <= oracle_b2(f4));
  CHECK_THROWS_AS(rigidity_certificate(f4), Not2Step);
  CHECK_THROWS_AS(cohomology_dims_hc(StructureTensor(3, {{1, 2, {{3, 1}}}, {1, 3, {{1, 1}}}})), NotLie);
  const auto ab = cohomology_dims_hc(StructureTensor(3));
  CHECK(ab.dimZ2 == 9);
  CHECK(ab.dimB2 == 0);
}

TEST_CASE("Chevalley-Eilenberg boundary") {
  const auto n22 = free_two_step(2);
  const auto d2 = ce_boundary(n22, WedgeChain::basis(3, {0, 1}));
  CHECK(d2 == WedgeChain::basis(3, {2}));
  const auto d3 = ce_boundary(n22, WedgeChain::basis(3, {0, 1, 2}));
  CHECK(is_zero(d3.coeffs));
  CHECK(d3.degree == 2);
  CHECK(is_zero(ce_boundary(n22, WedgeChain::basis(3, {1})).coeffs));
  CHECK_THROWS_AS(ce_boundary(n22, WedgeChain::basis(3, {})), DegreeOutOfRange);
  for (std::size_t p = 1; p <= 4; ++p)
    CHECK(rank(ce_boundary_matrix(StructureTensor(4), p)) == 0);
  // signs: ∂(X1∧X2∧X4) on n4_1 = -[X1,X2]∧X4 + ... with [X1,X2]=X3
  const StructureTensor n41(4, {{1, 2, {{3, 1}}}, {1, 3, {{4, 1}}}});
  const auto w = ce_boundary(n41, WedgeChain::basis(4, {0, 1, 3}));
  // (i,j)=(1,2): (-1)^4 [X1,X2]∧X4 = X3∧X4
  Vector expect(6);
  expect[tuple_rank(4, {2, 3})] = 1;
  CHECK(w.coeffs == expect);
}

TEST_CASE("Chevalley-Eilenberg homology") {
  CHECK(ce_homology_dims(free_two_step(2)) == std::vector<std::size_t>{1, 2, 2, 1});
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = ce_homology_dims(StructureTensor(n));
    for (std::size_t p = 0; p <= n; ++p)
      CHECK(m[p] == binomial(n, p));
  }
  const auto m3 = ce_homology_dims(free_two_step(3));
  REQUIRE(m3.size() == 7);
  for (std::size_t p = 0; p <= 6; ++p)
    CHECK(m3[p] == m3[6 - p]);
  CHECK(m3 == std::vector<std::size_t>{1, 3, 8, 12, 8, 3, 1});
  CHECK_THROWS_AS(ce_homology_dims(StructureTensor(3, {{1, 2, {{3, 1}}}, {1, 3, {{1, 1}}}})), NotLie);
}

TEST_CASE("boundary squares to zero on the catalog") {
  for (const auto &g : lie_catalog())
    for (std::size_t p = 2; p <= g.dim(); ++p) {
      const auto prod = ce_boundary_matrix(g, p - 1) * ce_boundary_matrix(g, p);
      CHECK(rank(prod) == 0);
    }
}
