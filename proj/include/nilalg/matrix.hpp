#ifndef NILALG_MATRIX_HPP
#define NILALG_MATRIX_HPP

#include "nilalg/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace nilalg {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector &v);

/// Dense row-major matrix over Q.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static ExactMatrix identity(std::size_t n);
  /// Matrix whose j-th column is cols[j]; all columns must have length `rows`.
  static ExactMatrix from_columns(std::size_t rows, const std::vector<Vector> &cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational &operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational &operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;

  ExactMatrix transpose() const;
  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b);
  friend Vector operator*(const ExactMatrix &a, const Vector &v);
  friend bool operator==(const ExactMatrix &, const ExactMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Non-increasing list of positive block sizes. Ordered lexicographically,
/// which is the order used to maximise characteristic sequences.
struct Partition {
  std::vector<std::size_t> parts;

  std::size_t sum() const;
  std::string str() const;
  friend auto operator<=>(const Partition &, const Partition &) = default;
};

std::size_t rank(const ExactMatrix &m);

/// Basis of {x : m x = 0}, one vector per free column of the reduced
/// echelon form; each vector has a 1 in its free coordinate.
std::vector<Vector> nullspace_basis(const ExactMatrix &m);

/// Linearly independent subset of the given vectors spanning the same space,
/// chosen greedily in input order.
std::vector<Vector> independent_subset(const std::vector<Vector> &vectors, std::size_t dim);

/// True when v lies in span(basis).
bool in_span(const std::vector<Vector> &basis, const Vector &v, std::size_t dim);

std::optional<ExactMatrix> inverse(const ExactMatrix &m);

/// Jordan block sizes of a nilpotent matrix from the rank staircase: the
/// number of blocks of size >= k is rank(a^(k-1)) - rank(a^k).
/// Throws NotNilpotent when no power up to the dimension vanishes.
Partition jordan_partition_nilpotent(const ExactMatrix &a);

} // namespace nilalg

#endif
