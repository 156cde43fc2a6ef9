#include "nilalg/deformation.hpp"

#include "nilalg/cohomology.hpp"
#include "nilalg/constructors.hpp"
#include "nilalg/errors.hpp"
#include "nilalg/lie.hpp"

#include <string>

namespace nilalg {

namespace {

bool is_two_step(const StructureTensor &g) {
  try {
    return nilindex(g) <= 2;
  } catch (const Error &) {
    return false;
  }
}

std::vector<Vector> center_basis(const StructureTensor &g) {
  const std::size_t n = g.dim();
  ExactMatrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const ExactMatrix ad = g.ad(unit_vector(n, j));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        m(j * n + r, c) = ad(r, c);
  }
  return nullspace_basis(m);
}

} // namespace

bool phi_square_zero(const AlternatingCochain &phi) {
  const std::size_t n = phi.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      Vector v = phi.value({x, y});
      if (is_zero(v))
        continue;
      for (std::size_t z = 0; z < n; ++z)
        if (!is_zero(phi.evaluate({v, unit_vector(n, z)})))
          return false;
    }
  return true;
}

StructureTensor linear_deformation(const DeformationProblem &d) {
  const std::size_t n = d.base.dim();
  if (d.direction.dim() != n || d.direction.degree() != 2)
    throw DimensionMismatch("deformation direction must be a 2-cochain on the base");
  TensorBuilder b(n);
  for (const auto &t : increasing_tuples(n, 2)) {
    Vector v = d.base.bracket_basis(t[0], t[1]);
    Vector w = d.direction.value(t);
    for (std::size_t k = 0; k < n; ++k)
      v[k].add_product(d.t, w[k]);
    b.add(t[0], t[1], v);
  }
  return b.build();
}

DeformationConditions deformation_conditions(const DeformationProblem &d) {
  if (d.direction.dim() != d.base.dim() || d.direction.degree() != 2)
    throw DimensionMismatch("deformation direction must be a 2-cochain on the base");
  if (!is_two_step(d.base))
    throw BaseNot2Step("deformation base is not a 2-step nilpotent Lie algebra");
  DeformationConditions c;
  c.phi_square_zero = phi_square_zero(d.direction);
  c.delta_h_zero = delta_h(d.base, d.direction).is_zero();
  c.delta_c_zero = delta_c(d.base, d.direction).is_zero();
  c.stays_2step = c.phi_square_zero && c.delta_h_zero && c.delta_c_zero;
  c.direct_2step = true;
  for (int t : {1, 2})
    c.direct_2step = c.direct_2step && is_two_step(linear_deformation({d.base, d.direction, Rational(t)}));
  return c;
}

AlternatingCochain difference_cochain(const StructureTensor &nu, const StructureTensor &mu) {
  const std::size_t n = mu.dim();
  if (nu.dim() != n)
    throw DimensionMismatch("difference_cochain: dimensions differ");
  AlternatingCochain phi(2, n);
  for (const auto &t : increasing_tuples(n, 2)) {
    Vector v = nu.bracket_basis(t[0], t[1]);
    Vector w = mu.bracket_basis(t[0], t[1]);
    for (std::size_t k = 0; k < n; ++k)
      v[k] -= w[k];
    phi.set(t, v);
  }
  return phi;
}

MaximalDeformation extract_deformation_maximal(const StructureTensor &g, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.dim();
  if (n < 2)
    throw CharSeqMismatch("algebra too small for a maximal characteristic sequence");
  const bool odd = n % 2 == 1;
  const std::size_t p = n / 2;
  Partition expected;
  expected.parts.assign(odd ? p : p - 1, 2);
  expected.parts.push_back(1);
  if (!odd)
    expected.parts.push_back(1);
  if (!is_two_step(g))
    throw CharSeqMismatch("algebra is not 2-step nilpotent");
  CharSequence cs = characteristic_sequence(g, samples, seed);
  if (cs.parts != expected)
    throw CharSeqMismatch("characteristic sequence " + cs.parts.str() + " differs from " + expected.str());

  const Vector &x1 = cs.vector;
  const ExactMatrix a = g.ad(x1);
  // complement of ker(ad X1), taken from the standard basis in order
  std::vector<Vector> span = nullspace_basis(a);
  std::vector<Vector> w;
  const std::size_t m = odd ? p : p - 1;
  for (std::size_t j = 0; j < n && w.size() < m; ++j) {
    Vector e = unit_vector(n, j);
    if (!in_span(span, e, n)) {
      span.push_back(e);
      w.push_back(std::move(e));
    }
  }
  std::vector<Vector> cols{x1};
  for (const auto &v : w) {
    cols.push_back(v);
    cols.push_back(a * v);
  }
  if (!odd) {
    // last vector from the centre when possible, so that φ vanishes on it
    std::vector<Vector> taken{x1};
    for (const auto &v : w)
      taken.push_back(a * v);
    std::vector<Vector> candidates = center_basis(g);
    for (auto &v : nullspace_basis(a))
      candidates.push_back(std::move(v));
    for (const auto &v : candidates)
      if (!in_span(taken, v, n)) {
        cols.push_back(v);
        break;
      }
  }
  MaximalDeformation out;
  out.basis_change = ExactMatrix::from_columns(n, cols);
  const StructureTensor h = change_basis(g, out.basis_change);
  out.model = odd ? k_odd(p) : k_even(p);
  out.phi = difference_cochain(h, out.model);
  out.cocycle = delta_hc(out.model, out.phi).is_zero();
  out.square_zero = phi_square_zero(out.phi);
  return out;
}

StructureTensor build_family_F(const FamilyCoefficients &c) {
  const int p = static_cast<int>(c.p);
  if (p < 1)
    throw IndexOutOfRange("family F needs p >= 1");
  TensorBuilder b(2 * c.p + 1);
  for (int i = 1; i <= p; ++i)
    b.add(0, static_cast<std::size_t>(2 * i - 1), static_cast<std::size_t>(2 * i), 1);
  for (const auto &[key, v] : c.a) {
    const auto [x, y, z] = key;
    const std::string label = "a^" + std::to_string(z) + "_{" + std::to_string(x) + "," + std::to_string(y) + "}";
    if (x % 2 != 0 || y % 2 != 0 || z % 2 != 1 || x >= y)
      throw IndexOutOfRange(label + ": indices must be (2i, 2j, 2k+1) with i < j");
    const int i = x / 2, j = y / 2, k = (z - 1) / 2;
    bool ok = false;
    if (i == 1 && j == 2)
      ok = k >= 3 && k <= p;
    else if (i == 1)
      ok = j >= 3 && j <= p && k >= 2 && k <= p;
    else
      ok = i >= 2 && j <= p && k >= 1 && k <= p;
    if (!ok)
      throw IndexOutOfRange(label + " is outside the family for p = " + std::to_string(p));
    b.add(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(y - 1), static_cast<std::size_t>(z - 1), v);
  }
  return b.build("F" + std::to_string(2 * p + 1));
}

bool variety_membership(const StructureTensor &g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t s = 0; s < n; ++s) {
          Rational sum;
          for (std::size_t l = 0; l < n; ++l)
            sum.add_product(g.coeff(i, j, l), g.coeff(l, k, s));
          if (!sum.is_zero())
            return false;
        }
  return true;
}

} // namespace nilalg
