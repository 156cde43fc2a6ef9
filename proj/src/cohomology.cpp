#include "nilalg/cohomology.hpp"

#include "nilalg/errors.hpp"
#include "nilalg/lie.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace nilalg {

namespace {

void check_dims(const StructureTensor &g, const AlternatingCochain &phi, std::size_t degree) {
  if (phi.dim() != g.dim())
    throw DimensionMismatch("cochain dimension differs from algebra dimension");
  if (degree != 0 && phi.degree() != degree)
    throw DimensionMismatch("cochain has degree " + std::to_string(phi.degree()) + ", expected " +
                            std::to_string(degree));
}

// phi on all ordered basis pairs.
std::vector<Vector> phi_table(const AlternatingCochain &phi) {
  const std::size_t n = phi.dim();
  std::vector<Vector> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      t[i * n + j] = phi.value({i, j});
  return t;
}

// mu(v, X_k) accumulated into out with factor c.
void add_mu_left(const StructureTensor &g, Vector &out, const Rational &c, const Vector &v, std::size_t k) {
  const std::size_t n = g.dim();
  for (std::size_t l = 0; l < n; ++l) {
    if (v[l].is_zero())
      continue;
    Rational f = c * v[l];
    for (std::size_t s = 0; s < n; ++s)
      out[s].add_product(f, g.coeff(l, k, s));
  }
}

// phi(v, X_k) accumulated into out with factor c.
void add_phi_left(const std::vector<Vector> &pt, std::size_t n, Vector &out, const Rational &c, const Vector &v,
                  std::size_t k) {
  for (std::size_t l = 0; l < n; ++l) {
    if (v[l].is_zero())
      continue;
    Rational f = c * v[l];
    const Vector &w = pt[l * n + k];
    for (std::size_t s = 0; s < n; ++s)
      out[s].add_product(f, w[s]);
  }
}

using SparseRow = std::map<std::size_t, Rational>;

ExactMatrix dense(const std::vector<SparseRow> &rows, std::size_t cols, bool compact) {
  std::vector<const SparseRow *> keep;
  if (compact) {
    std::set<std::vector<std::pair<std::size_t, Rational>>> seen;
    for (const auto &r : rows) {
      std::vector<std::pair<std::size_t, Rational>> key;
      for (const auto &[c, v] : r)
        if (!v.is_zero())
          key.emplace_back(c, v);
      if (!key.empty() && seen.insert(std::move(key)).second)
        keep.push_back(&r);
    }
  } else {
    for (const auto &r : rows)
      keep.push_back(&r);
  }
  ExactMatrix m(keep.size(), cols);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (const auto &[c, v] : *keep[i])
      m(i, c) = v;
  return m;
}

std::vector<SparseRow> delta_hc_rows(const StructureTensor &g) {
  const std::size_t n = g.dim();
  const auto pairs = increasing_tuples(n, 2);
  std::vector<SparseRow> rows(pairs.size() * n * n);
  auto col = [&](std::size_t a, std::size_t b, std::size_t s) { return tuple_rank(n, {a, b}) * n + s; };
  for (std::size_t pr = 0; pr < pairs.size(); ++pr) {
    const std::size_t i = pairs[pr][0], j = pairs[pr][1];
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t s = 0; s < n; ++s) {
        SparseRow &row = rows[(pr * n + k) * n + s];
        // phi(mu(X_i,X_j), X_k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational &c = g.coeff(i, j, l);
          if (c.is_zero() || l == k)
            continue;
          if (l < k)
            row[col(l, k, s)] += c;
          else
            row[col(k, l, s)] -= c;
        }
        // mu(phi(X_i,X_j), X_k)
        for (std::size_t l = 0; l < n; ++l) {
          const Rational &c = g.coeff(l, k, s);
          if (!c.is_zero())
            row[pr * n + l] += c;
        }
      }
  }
  return rows;
}

std::vector<SparseRow> delta1_rows(const StructureTensor &g) {
  const std::size_t n = g.dim();
  const auto pairs = increasing_tuples(n, 2);
  std::vector<SparseRow> rows(pairs.size() * n);
  for (std::size_t pr = 0; pr < pairs.size(); ++pr) {
    const std::size_t i = pairs[pr][0], j = pairs[pr][1];
    for (std::size_t s = 0; s < n; ++s) {
      SparseRow &row = rows[pr * n + s];
      for (std::size_t a = 0; a < n; ++a) {
        if (const Rational &c = g.coeff(a, j, s); !c.is_zero())
          row[a * n + i] += c;
        if (const Rational &c = g.coeff(i, a, s); !c.is_zero())
          row[a * n + j] += c;
      }
      for (std::size_t l = 0; l < n; ++l)
        if (const Rational &c = g.coeff(i, j, l); !c.is_zero())
          row[s * n + l] -= c;
    }
  }
  return rows;
}

} // namespace

MultilinearMap delta_h(const StructureTensor &g, const AlternatingCochain &phi) {
  check_dims(g, phi, 2);
  const std::size_t n = g.dim();
  const auto pt = phi_table(phi);
  MultilinearMap out(3, n);
  const Rational one(1), minus_one(-1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector &v = out.value({x, y, z});
        // mu(X, phi(Y,Z)) = -mu(phi(Y,Z), X)
        add_mu_left(g, v, minus_one, pt[y * n + z], x);
        add_phi_left(pt, n, v, minus_one, g.bracket_basis(x, y), z);
        // phi(X, mu(Y,Z)) = -phi(mu(Y,Z), X)
        add_phi_left(pt, n, v, minus_one, g.bracket_basis(y, z), x);
        add_mu_left(g, v, minus_one, pt[x * n + y], z);
      }
  return out;
}

MultilinearMap delta_c(const StructureTensor &g, const AlternatingCochain &phi) {
  check_dims(g, phi, 2);
  const std::size_t n = g.dim();
  const auto pt = phi_table(phi);
  MultilinearMap out(3, n);
  const Rational one(1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector &v = out.value({x, y, z});
        const std::size_t a[3] = {x, y, z};
        for (int r = 0; r < 3; ++r) {
          const std::size_t p = a[r], q = a[(r + 1) % 3], s = a[(r + 2) % 3];
          add_mu_left(g, v, one, pt[p * n + q], s);
          add_phi_left(pt, n, v, one, g.bracket_basis(p, q), s);
        }
      }
  return out;
}

MultilinearMap delta_hc(const StructureTensor &g, const AlternatingCochain &phi) {
  check_dims(g, phi, 2);
  const std::size_t n = g.dim();
  const auto pt = phi_table(phi);
  MultilinearMap out(3, n);
  const Rational one(1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector &v = out.value({x, y, z});
        add_phi_left(pt, n, v, one, g.bracket_basis(x, y), z);
        add_mu_left(g, v, one, pt[x * n + y], z);
      }
  return out;
}

AlternatingCochain delta_hc_general(const StructureTensor &g, const AlternatingCochain &psi) {
  check_dims(g, psi, 0);
  const std::size_t deg = psi.degree();
  if (deg < 1)
    throw DegreeOutOfRange("delta_hc_general needs degree >= 1");
  const std::size_t n = g.dim();
  AlternatingCochain out(deg + 1, n);
  // 0-based positions of the first element of each bracketed pair
  std::vector<std::size_t> firsts;
  if (deg % 2 == 0) {
    for (std::size_t i = 1; i <= deg / 2; ++i)
      firsts.push_back(2 * i - 1);
  } else {
    for (std::size_t i = 1; i + 1 <= (deg + 1) / 2; ++i)
      firsts.push_back(2 * i);
  }
  for (const auto &t : increasing_tuples(n, deg + 1)) {
    Vector v(n);
    Tuple rest(t.begin() + 1, t.end());
    Vector inner = psi.value(rest);
    for (std::size_t l = 0; l < n; ++l) {
      if (inner[l].is_zero())
        continue;
      for (std::size_t s = 0; s < n; ++s)
        v[s].add_product(inner[l], g.coeff(t[0], l, s));
    }
    for (std::size_t a : firsts) {
      Vector m = g.bracket_basis(t[a], t[a + 1]);
      Tuple args;
      for (std::size_t q = 0; q < t.size(); ++q)
        if (q != a + 1)
          args.push_back(t[q]);
      for (std::size_t l = 0; l < n; ++l) {
        if (m[l].is_zero())
          continue;
        args[a] = l;
        Vector w = psi.value(args);
        for (std::size_t s = 0; s < n; ++s)
          v[s].add_product(m[l], w[s]);
      }
    }
    out.set(t, v);
  }
  return out;
}

AlternatingCochain delta1(const StructureTensor &g, const ExactMatrix &f) {
  const std::size_t n = g.dim();
  if (f.rows() != n || f.cols() != n)
    throw DimensionMismatch("delta1: linear map size differs from algebra dimension");
  AlternatingCochain out(2, n);
  for (const auto &t : increasing_tuples(n, 2)) {
    Vector fx = f.column(t[0]), fy = f.column(t[1]);
    Vector v = g.bracket(fx, unit_vector(n, t[1]));
    Vector w = g.bracket(unit_vector(n, t[0]), fy);
    Vector m = f * g.bracket_basis(t[0], t[1]);
    for (std::size_t s = 0; s < n; ++s)
      v[s] += w[s] - m[s];
    out.set(t, v);
  }
  return out;
}

ExactMatrix delta_hc_matrix(const StructureTensor &g) {
  const std::size_t n = g.dim();
  return dense(delta_hc_rows(g), binomial(n, 2) * n, false);
}

ExactMatrix delta1_matrix(const StructureTensor &g) {
  const std::size_t n = g.dim();
  return dense(delta1_rows(g), n * n, false);
}

CohomologyReport cohomology_dims_hc(const StructureTensor &g) {
  if (!is_lie(g))
    throw NotLie("cohomology_dims_hc: Jacobi identity fails");
  const std::size_t n = g.dim();
  const std::size_t cochains = binomial(n, 2) * n;
  CohomologyReport r;
  ExactMatrix d = dense(delta_hc_rows(g), cochains, true);
  ExactMatrix m1 = dense(delta1_rows(g), n * n, false);
  r.dimZ2 = cochains - rank(d);
  const std::size_t rank_m1 = rank(m1);
  bool two_step = true;
  try {
    two_step = nilindex(g) <= 2;
  } catch (const NotNilpotent &) {
    two_step = false;
  }
  r.two_step = two_step;
  r.dimB2 = two_step ? rank_m1 : rank_m1 - rank(d * m1);
  r.dimH2 = r.dimZ2 - r.dimB2;
  r.rigid_in_2nilp = r.dimH2 == 0;
  return r;
}

RigidityCertificate rigidity_certificate(const StructureTensor &g) {
  if (nilindex(g) > 2)
    throw Not2Step("rigidity_certificate: algebra is not 2-step nilpotent");
  RigidityCertificate c;
  c.report = cohomology_dims_hc(g);
  c.verdict = c.report.dimH2 == 0 ? Rigidity::RigidIn2Nilp : Rigidity::Inconclusive;
  return c;
}

WedgeChain WedgeChain::basis(std::size_t dim, const Tuple &indices) {
  Tuple t = indices;
  const int s = sort_with_sign(t);
  for (auto i : t)
    if (i >= dim)
      throw IndexOutOfRange("wedge index out of range");
  WedgeChain c{t.size(), dim, Vector(binomial(dim, t.size()))};
  if (s != 0)
    c.coeffs[tuple_rank(dim, t)] = Rational(s);
  return c;
}

ExactMatrix ce_boundary_matrix(const StructureTensor &g, std::size_t p) {
  const std::size_t n = g.dim();
  if (p < 1 || p > n)
    throw DegreeOutOfRange("boundary degree " + std::to_string(p) + " outside 1.." + std::to_string(n));
  const auto cols = increasing_tuples(n, p);
  ExactMatrix m(binomial(n, p - 1), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Tuple &t = cols[c];
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = a + 1; b < p; ++b) {
        // 1-based positions a+1, b+1: sign (-1)^(a+b+3)
        const bool neg = (a + b) % 2 == 0;
        Tuple rest;
        for (std::size_t q = 0; q < p; ++q)
          if (q != a && q != b)
            rest.push_back(t[q]);
        for (std::size_t l = 0; l < n; ++l) {
          const Rational &v = g.coeff(t[a], t[b], l);
          if (v.is_zero())
            continue;
          Tuple full{l};
          full.insert(full.end(), rest.begin(), rest.end());
          const int s = sort_with_sign(full);
          if (s == 0)
            continue;
          Rational &entry = m(tuple_rank(n, full), c);
          if ((s < 0) != neg)
            entry -= v;
          else
            entry += v;
        }
      }
  }
  return m;
}

WedgeChain ce_boundary(const StructureTensor &g, const WedgeChain &chain) {
  const std::size_t n = g.dim();
  if (chain.dim != n)
    throw DimensionMismatch("chain dimension differs from algebra dimension");
  if (chain.coeffs.size() != binomial(n, chain.degree))
    throw DimensionMismatch("chain has the wrong number of coefficients");
  ExactMatrix m = ce_boundary_matrix(g, chain.degree);
  return WedgeChain{chain.degree - 1, n, m * chain.coeffs};
}

std::vector<std::size_t> ce_homology_dims(const StructureTensor &g) {
  if (!is_lie(g))
    throw NotLie("ce_homology_dims: Jacobi identity fails");
  const std::size_t n = g.dim();
  std::vector<std::size_t> r(n + 2, 0);
  ExactMatrix prev;
  for (std::size_t p = 1; p <= n; ++p) {
    ExactMatrix m = ce_boundary_matrix(g, p);
    if (p >= 2 && !(prev * m).is_zero())
      throw std::logic_error("boundary does not square to zero");
    r[p] = rank(m);
    prev = std::move(m);
  }
  std::vector<std::size_t> out(n + 1);
  for (std::size_t p = 0; p <= n; ++p)
    out[p] = binomial(n, p) - r[p] - r[p + 1];
  return out;
}

} // namespace nilalg
