#include "nilalg/cochain.hpp"

#include "nilalg/errors.hpp"

#include <algorithm>

namespace nilalg {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

std::vector<Tuple> increasing_tuples(std::size_t n, std::size_t m) {
  std::vector<Tuple> out;
  if (m > n)
    return out;
  Tuple t(m);
  for (std::size_t i = 0; i < m; ++i)
    t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t pos = m;
    while (pos > 0 && t[pos - 1] == n - m + pos - 1)
      --pos;
    if (pos == 0)
      return out;
    ++t[pos - 1];
    for (std::size_t i = pos; i < m; ++i)
      t[i] = t[i - 1] + 1;
  }
}

std::size_t tuple_rank(std::size_t n, const Tuple &t) {
  const std::size_t m = t.size();
  std::size_t r = 0, prev = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t v = prev; v < t[i]; ++v)
      r += binomial(n - v - 1, m - i - 1);
    prev = t[i] + 1;
  }
  return r;
}

int sort_with_sign(Tuple &t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i)
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j])
        return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  return sign;
}

AlternatingCochain::AlternatingCochain(std::size_t degree, std::size_t dim)
    : degree_(degree), dim_(dim), coords_(binomial(dim, degree) * dim) {}

AlternatingCochain AlternatingCochain::from_coords(std::size_t degree, std::size_t dim, Vector coords) {
  AlternatingCochain c(degree, dim);
  if (coords.size() != c.coords_.size())
    throw DimensionMismatch("cochain coordinate vector has the wrong length");
  c.coords_ = std::move(coords);
  return c;
}

Vector AlternatingCochain::value(Tuple args) const {
  if (args.size() != degree_)
    throw DimensionMismatch("cochain evaluated on a tuple of the wrong length");
  Vector out(dim_);
  const int s = sort_with_sign(args);
  if (s == 0)
    return out;
  const std::size_t base = tuple_rank(dim_, args) * dim_;
  for (std::size_t k = 0; k < dim_; ++k)
    out[k] = s > 0 ? coords_[base + k] : -coords_[base + k];
  return out;
}

Vector AlternatingCochain::evaluate(const std::vector<Vector> &args) const {
  if (args.size() != degree_)
    throw DimensionMismatch("cochain evaluated on the wrong number of arguments");
  for (const auto &a : args)
    if (a.size() != dim_)
      throw DimensionMismatch("cochain argument has the wrong length");
  Vector out(dim_);
  Tuple t(degree_);
  // Expand over all basis tuples with nonzero coefficient product.
  auto rec = [&](auto &&self, std::size_t pos, const Rational &c) -> void {
    if (pos == degree_) {
      Vector v = value(t);
      for (std::size_t k = 0; k < dim_; ++k)
        out[k].add_product(c, v[k]);
      return;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      if (args[pos][i].is_zero())
        continue;
      t[pos] = i;
      self(self, pos + 1, c * args[pos][i]);
    }
  };
  rec(rec, 0, Rational(1));
  return out;
}

void AlternatingCochain::set(Tuple args, const Vector &v) {
  if (args.size() != degree_ || v.size() != dim_)
    throw DimensionMismatch("cochain set: wrong tuple or vector length");
  const int s = sort_with_sign(args);
  if (s == 0)
    throw InvalidArgument("cochain set: repeated index");
  const std::size_t base = tuple_rank(dim_, args) * dim_;
  for (std::size_t k = 0; k < dim_; ++k)
    coords_[base + k] = s > 0 ? v[k] : -v[k];
}

bool AlternatingCochain::is_zero() const { return nilalg::is_zero(coords_); }

MultilinearMap::MultilinearMap(std::size_t degree, std::size_t dim) : degree_(degree), dim_(dim) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < degree; ++i)
    count *= dim;
  values_.assign(count, Vector(dim));
}

std::size_t MultilinearMap::index(const Tuple &args) const {
  if (args.size() != degree_)
    throw DimensionMismatch("multilinear map evaluated on a tuple of the wrong length");
  std::size_t idx = 0;
  for (auto a : args)
    idx = idx * dim_ + a;
  return idx;
}

const Vector &MultilinearMap::value(const Tuple &args) const { return values_[index(args)]; }
Vector &MultilinearMap::value(const Tuple &args) { return values_[index(args)]; }

bool MultilinearMap::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vector &v) { return nilalg::is_zero(v); });
}

bool MultilinearMap::is_alternating() const {
  Tuple t(degree_, 0);
  for (std::size_t idx = 0; idx < values_.size(); ++idx) {
    std::size_t rest = idx;
    for (std::size_t pos = degree_; pos-- > 0;) {
      t[pos] = rest % dim_;
      rest /= dim_;
    }
    Tuple sorted = t;
    const int s = sort_with_sign(sorted);
    const Vector &v = values_[idx];
    if (s == 0) {
      if (!nilalg::is_zero(v))
        return false;
      continue;
    }
    const Vector &w = values_[index(sorted)];
    for (std::size_t k = 0; k < dim_; ++k)
      if (v[k] != (s > 0 ? w[k] : -w[k]))
        return false;
  }
  return true;
}

AlternatingCochain MultilinearMap::to_alternating() const {
  AlternatingCochain c(degree_, dim_);
  for (const auto &t : increasing_tuples(dim_, degree_))
    c.set(t, value(t));
  return c;
}

} // namespace nilalg
