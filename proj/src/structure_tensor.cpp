#include "nilalg/structure_tensor.hpp"

#include "nilalg/errors.hpp"

#include <algorithm>

namespace nilalg {

StructureTensor::StructureTensor(std::size_t dim, std::string name)
    : dim_(dim), name_(std::move(name)), c_(dim * dim * dim) {}

StructureTensor::StructureTensor(std::size_t dim, std::span<const BracketSpec> brackets, std::string name)
    : StructureTensor(dim, std::move(name)) {
  const int n = static_cast<int>(dim);
  for (const auto &b : brackets) {
    if (b.i < 1 || b.j > n || b.i >= b.j)
      throw IndexOutOfRange("bracket [X" + std::to_string(b.i) + ",X" + std::to_string(b.j) +
                            "] needs 1 <= i < j <= " + std::to_string(n));
    for (const auto &t : b.rhs) {
      if (t.k < 1 || t.k > n)
        throw IndexOutOfRange("bracket output index " + std::to_string(t.k) + " outside 1.." +
                              std::to_string(n));
      const auto i = static_cast<std::size_t>(b.i - 1), j = static_cast<std::size_t>(b.j - 1),
                 k = static_cast<std::size_t>(t.k - 1);
      c_[(i * dim_ + j) * dim_ + k] += t.c;
      c_[(j * dim_ + i) * dim_ + k] -= t.c;
    }
  }
}

StructureTensor StructureTensor::renamed(std::string name) const {
  StructureTensor t = *this;
  t.name_ = std::move(name);
  return t;
}

Vector StructureTensor::bracket_basis(std::size_t i, std::size_t j) const {
  auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector StructureTensor::bracket(const Vector &x, const Vector &y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionMismatch("bracket: vector length differs from algebra dimension");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero())
        continue;
      Rational xy = x[i] * y[j];
      const Rational *row = &c_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k)
        out[k].add_product(xy, row[k]);
    }
  }
  return out;
}

ExactMatrix StructureTensor::ad(const Vector &x) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Vector col(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero())
        continue;
      for (std::size_t k = 0; k < dim_; ++k)
        col[k].add_product(x[i], coeff(i, j, k));
    }
    for (std::size_t k = 0; k < dim_; ++k)
      m(k, j) = std::move(col[k]);
  }
  return m;
}

std::vector<BracketSpec> StructureTensor::brackets() const {
  std::vector<BracketSpec> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      BracketSpec b{static_cast<int>(i + 1), static_cast<int>(j + 1), {}};
      for (std::size_t k = 0; k < dim_; ++k)
        if (!coeff(i, j, k).is_zero())
          b.rhs.push_back({static_cast<int>(k + 1), coeff(i, j, k)});
      if (!b.rhs.empty())
        out.push_back(std::move(b));
    }
  return out;
}

bool StructureTensor::is_abelian() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational &x) { return x.is_zero(); });
}

TensorBuilder::TensorBuilder(std::size_t dim) : t_(dim) {}

TensorBuilder &TensorBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Rational &c) {
  const std::size_t n = t_.dim_;
  if (i >= n || j >= n || k >= n || i == j)
    throw IndexOutOfRange("TensorBuilder::add: index out of range or i == j");
  t_.c_[(i * n + j) * n + k] += c;
  t_.c_[(j * n + i) * n + k] -= c;
  return *this;
}

TensorBuilder &TensorBuilder::add(std::size_t i, std::size_t j, const Vector &v) {
  if (v.size() != t_.dim_)
    throw DimensionMismatch("TensorBuilder::add: vector length mismatch");
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero())
      add(i, j, k, v[k]);
  return *this;
}

StructureTensor TensorBuilder::build(std::string name) const { return t_.renamed(std::move(name)); }

} // namespace nilalg
