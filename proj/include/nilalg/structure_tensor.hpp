#ifndef NILALG_STRUCTURE_TENSOR_HPP
#define NILALG_STRUCTURE_TENSOR_HPP

#include "nilalg/matrix.hpp"
#include "nilalg/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nilalg {

/// One summand c*X_k of a bracket right-hand side. `k` is 1-indexed, as in
/// the interchange format and the usual X_1..X_n notation.
struct Term {
  int k = 0;
  Rational c;
};

/// [X_i, X_j] = sum of rhs, with 1-indexed i < j.
struct BracketSpec {
  int i = 0;
  int j = 0;
  std::vector<Term> rhs;
};

/// Structure constants C_ij^k of an anticommutative bilinear product on
/// Q^n. Only pairs i < j are stored conceptually; [X_j, X_i] = -[X_i, X_j]
/// and [X_i, X_i] = 0 hold by construction. Immutable once built.
///
/// Index arguments of the accessors are 0-based.
class StructureTensor {
public:
  StructureTensor() = default;
  /// Abelian algebra of the given dimension.
  explicit StructureTensor(std::size_t dim, std::string name = {});
  /// Throws IndexOutOfRange for i >= j or indices outside 1..dim.
  StructureTensor(std::size_t dim, std::span<const BracketSpec> brackets, std::string name = {});
  StructureTensor(std::size_t dim, std::initializer_list<BracketSpec> brackets, std::string name = {})
      : StructureTensor(dim, std::span<const BracketSpec>(brackets.begin(), brackets.size()),
                        std::move(name)) {}

  std::size_t dim() const { return dim_; }
  const std::string &name() const { return name_; }
  StructureTensor renamed(std::string name) const;

  /// C_ij^k with the antisymmetric extension.
  const Rational &coeff(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector &x, const Vector &y) const;
  /// Matrix of ad x: column j holds [x, X_j].
  ExactMatrix ad(const Vector &x) const;

  /// Nonzero brackets with i < j, 1-indexed, in lexicographic pair order.
  std::vector<BracketSpec> brackets() const;
  bool is_abelian() const;

  friend bool operator==(const StructureTensor &a, const StructureTensor &b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

private:
  friend class TensorBuilder;

  std::size_t dim_ = 0;
  std::string name_;
  std::vector<Rational> c_; // dim^3, fully antisymmetrised
};

/// Mutable accumulator for structure constants; indices are 0-based.
class TensorBuilder {
public:
  explicit TensorBuilder(std::size_t dim);

  /// Adds c to C_ij^k (and -c to C_ji^k). Requires i != j.
  TensorBuilder &add(std::size_t i, std::size_t j, std::size_t k, const Rational &c);
  /// Adds the vector v to [X_i, X_j].
  TensorBuilder &add(std::size_t i, std::size_t j, const Vector &v);

  std::size_t dim() const { return t_.dim_; }
  StructureTensor build(std::string name = {}) const;

private:
  StructureTensor t_;
};

} // namespace nilalg

#endif
