#include "nilalg/constructors.hpp"

#include "nilalg/errors.hpp"

#include <string>

namespace nilalg {

StructureTensor heisenberg(std::size_t p) {
  if (p < 1)
    throw InvalidArgument("heisenberg: p must be >= 1");
  const std::size_t n = 2 * p + 1;
  TensorBuilder b(n);
  for (std::size_t i = 0; i < p; ++i)
    b.add(2 * i, 2 * i + 1, n - 1, 1);
  return b.build("h" + std::to_string(n));
}

StructureTensor k_odd(std::size_t p) {
  if (p < 1)
    throw InvalidArgument("k_odd: p must be >= 1");
  const std::size_t n = 2 * p + 1;
  TensorBuilder b(n);
  for (std::size_t i = 1; i <= p; ++i)
    b.add(0, 2 * i - 1, 2 * i, 1);
  return b.build("k" + std::to_string(n));
}

StructureTensor k_even(std::size_t p) {
  if (p < 1)
    throw InvalidArgument("k_even: p must be >= 1");
  const std::size_t n = 2 * p;
  TensorBuilder b(n);
  for (std::size_t i = 1; i + 1 <= p; ++i)
    b.add(0, 2 * i - 1, 2 * i, 1);
  return b.build("k" + std::to_string(n));
}

StructureTensor free_two_step(std::size_t r) {
  if (r < 2)
    throw InvalidArgument("free_two_step: r must be >= 2");
  const std::size_t n = r + r * (r - 1) / 2;
  TensorBuilder b(n);
  std::size_t k = r;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t c = a + 1; c < r; ++c)
      b.add(a, c, k++, 1);
  return b.build("N(2," + std::to_string(r) + ")");
}

StructureTensor filiform(std::size_t n) {
  if (n < 2)
    throw InvalidArgument("filiform: n must be >= 2");
  TensorBuilder b(n);
  for (std::size_t i = 1; i + 1 < n; ++i)
    b.add(0, i, i + 1, 1);
  return b.build("L" + std::to_string(n));
}

StructureTensor change_basis(const StructureTensor &g, const ExactMatrix &p) {
  const std::size_t n = g.dim();
  if (p.rows() != n || p.cols() != n)
    throw DimensionMismatch("change_basis: matrix size differs from algebra dimension");
  auto pinv = inverse(p);
  if (!pinv)
    throw SingularBasisChange("change_basis: matrix is singular");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j)
    cols.push_back(p.column(j));
  TensorBuilder b(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      Vector v = g.bracket(cols[a], cols[c]);
      if (!is_zero(v))
        b.add(a, c, (*pinv) * v);
    }
  return b.build(g.name());
}

StructureTensor direct_sum(const StructureTensor &g1, const StructureTensor &g2) {
  const std::size_t n1 = g1.dim(), n = n1 + g2.dim();
  TensorBuilder b(n);
  for (const auto &br : g1.brackets())
    for (const auto &t : br.rhs)
      b.add(static_cast<std::size_t>(br.i - 1), static_cast<std::size_t>(br.j - 1),
            static_cast<std::size_t>(t.k - 1), t.c);
  for (const auto &br : g2.brackets())
    for (const auto &t : br.rhs)
      b.add(n1 + static_cast<std::size_t>(br.i - 1), n1 + static_cast<std::size_t>(br.j - 1),
            n1 + static_cast<std::size_t>(t.k - 1), t.c);
  std::string name = g1.name().empty() || g2.name().empty() ? std::string{} : g1.name() + "+" + g2.name();
  return b.build(name);
}

} // namespace nilalg
