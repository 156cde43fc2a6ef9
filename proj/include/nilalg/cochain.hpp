#ifndef NILALG_COCHAIN_HPP
#define NILALG_COCHAIN_HPP

#include "nilalg/matrix.hpp"

#include <cstddef>
#include <vector>

namespace nilalg {

using Tuple = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);

/// All strictly increasing m-tuples of {0..n-1} in lexicographic order.
std::vector<Tuple> increasing_tuples(std::size_t n, std::size_t m);

/// Position of an increasing tuple in increasing_tuples(n, t.size()).
std::size_t tuple_rank(std::size_t n, const Tuple &t);

/// Sorts `t` in place and returns the sign of the sorting permutation, or 0
/// when an index repeats.
int sort_with_sign(Tuple &t);

/// Skew n-linear map g^n -> g. Values are stored on increasing basis tuples
/// in lexicographic order; coordinate (tuple, k) lives at rank*dim + k.
class AlternatingCochain {
public:
  AlternatingCochain() = default;
  AlternatingCochain(std::size_t degree, std::size_t dim);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return coords_.size(); }

  /// Value on an arbitrary basis tuple: signed by the sorting permutation,
  /// zero on repeated indices.
  Vector value(Tuple args) const;
  /// Multilinear evaluation on arbitrary vectors.
  Vector evaluate(const std::vector<Vector> &args) const;

  /// Sets the value on `args` (and, by skew-symmetry, on its permutations).
  void set(Tuple args, const Vector &v);

  const Vector &coords() const { return coords_; }
  static AlternatingCochain from_coords(std::size_t degree, std::size_t dim, Vector coords);

  bool is_zero() const;
  friend bool operator==(const AlternatingCochain &, const AlternatingCochain &) = default;

private:
  std::size_t degree_ = 0;
  std::size_t dim_ = 0;
  Vector coords_;
};

/// Unrestricted n-linear map g^n -> g, stored densely on all basis tuples.
class MultilinearMap {
public:
  MultilinearMap() = default;
  MultilinearMap(std::size_t degree, std::size_t dim);

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return dim_; }

  const Vector &value(const Tuple &args) const;
  Vector &value(const Tuple &args);

  bool is_zero() const;
  bool is_alternating() const;
  /// Restriction to increasing tuples.
  AlternatingCochain to_alternating() const;

private:
  std::size_t index(const Tuple &args) const;

  std::size_t degree_ = 0;
  std::size_t dim_ = 0;
  std::vector<Vector> values_;
};

} // namespace nilalg

#endif
