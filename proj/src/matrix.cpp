#include "nilalg/matrix.hpp"

#include "nilalg/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilalg {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector &v) {
  return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x.is_zero(); });
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("ExactMatrix: ragged initializer");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::size_t rows, const std::vector<Vector> &cols) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw std::invalid_argument("ExactMatrix::from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r)
      m(r, c) = cols[c][r];
  }
  return m;
}

Vector ExactMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    v[r] = (*this)(r, c);
  return v;
}

Vector ExactMatrix::row(std::size_t r) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational &x) { return x.is_zero(); });
}

ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("matrix product: inner dimensions differ");
  ExactMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational &aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        p(i, j).add_product(aik, b(k, j));
    }
  return p;
}

Vector operator*(const ExactMatrix &a, const Vector &v) {
  if (a.cols_ != v.size())
    throw DimensionMismatch("matrix-vector product: size mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      out[i].add_product(a(i, k), v[k]);
  return out;
}

std::size_t Partition::sum() const {
  std::size_t s = 0;
  for (auto p : parts)
    s += p;
  return s;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i)
    os << (i ? "," : "") << parts[i];
  os << ')';
  return os.str();
}

namespace {

struct Echelon {
  std::vector<Vector> rows;           // first `pivots.size()` rows are the pivot rows
  std::vector<std::size_t> pivots;    // pivot column of each pivot row
};

// Gaussian elimination over Q. Pivots are searched in the first `cols`
// columns and chosen among the candidate rows by smallest bit size; row
// operations span the whole row but only visit the nonzero columns of the
// pivot row, which keeps the structured, sparse matrices met here cheap.
// With `reduced` the pivot rows are normalised and cleared above as well.
Echelon eliminate(std::vector<Vector> rows, std::size_t cols, bool reduced) {
  Echelon e;
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_size = 0;
    for (std::size_t i = r; i < rows.size(); ++i) {
      const Rational &x = rows[i][c];
      if (x.is_zero())
        continue;
      std::size_t s = x.bit_size();
      if (best == rows.size() || s < best_size) {
        best = i;
        best_size = s;
        if (s <= 2)
          break;
      }
    }
    if (best == rows.size())
      continue;
    std::swap(rows[r], rows[best]);
    Vector &prow = rows[r];
    if (reduced && prow[c] != Rational(1)) {
      Rational inv = Rational(1) / prow[c];
      for (std::size_t j = c; j < prow.size(); ++j)
        if (!prow[j].is_zero())
          prow[j] *= inv;
    }
    nz.clear();
    for (std::size_t j = c; j < prow.size(); ++j)
      if (!prow[j].is_zero())
        nz.push_back(j);
    Rational pivot_inv = Rational(1) / prow[c];
    for (std::size_t i = reduced ? 0 : r + 1; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero())
        continue;
      Rational factor = rows[i][c] * pivot_inv;
      Vector &row = rows[i];
      for (std::size_t j : nz)
        row[j].sub_product(factor, prow[j]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(rows);
  return e;
}

std::vector<Vector> to_rows(const ExactMatrix &m) {
  std::vector<Vector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool any = false;
    for (std::size_t c = 0; c < m.cols() && !any; ++c)
      any = !m(r, c).is_zero();
    if (any)
      rows.push_back(m.row(r));
  }
  return rows;
}

} // namespace

std::size_t rank(const ExactMatrix &m) {
  return eliminate(to_rows(m), m.cols(), false).pivots.size();
}

std::vector<Vector> nullspace_basis(const ExactMatrix &m) {
  Echelon e = eliminate(to_rows(m), m.cols(), true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots)
    is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free])
      continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      v[e.pivots[k]] = -e.rows[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> independent_subset(const std::vector<Vector> &vectors, std::size_t dim) {
  std::vector<Vector> chosen;
  std::vector<Vector> reduced_basis; // echelon rows of the chosen vectors
  std::vector<std::size_t> pivots;
  for (const auto &v : vectors) {
    if (v.size() != dim)
      throw DimensionMismatch("independent_subset: vector length mismatch");
    Vector w = v;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      const Rational &x = w[pivots[k]];
      if (x.is_zero())
        continue;
      Rational f = x / reduced_basis[k][pivots[k]];
      for (std::size_t j = 0; j < dim; ++j)
        w[j].sub_product(f, reduced_basis[k][j]);
    }
    auto it = std::find_if(w.begin(), w.end(), [](const Rational &x) { return !x.is_zero(); });
    if (it == w.end())
      continue;
    pivots.push_back(static_cast<std::size_t>(it - w.begin()));
    reduced_basis.push_back(std::move(w));
    chosen.push_back(v);
  }
  return chosen;
}

bool in_span(const std::vector<Vector> &basis, const Vector &v, std::size_t dim) {
  std::vector<Vector> all = basis;
  all.push_back(v);
  return independent_subset(all, dim).size() == independent_subset(basis, dim).size();
}

std::optional<ExactMatrix> inverse(const ExactMatrix &m) {
  if (!m.is_square())
    return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<Vector> rows(n, Vector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      rows[i][j] = m(i, j);
    rows[i][n + i] = 1;
  }
  Echelon e = eliminate(std::move(rows), n, true);
  if (e.pivots.size() != n)
    return std::nullopt;
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = e.rows[i][n + j];
  return inv;
}

Partition jordan_partition_nilpotent(const ExactMatrix &a) {
  if (!a.is_square())
    throw DimensionMismatch("jordan_partition_nilpotent: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<std::size_t> ranks{n};
  ExactMatrix power = ExactMatrix::identity(n);
  while (ranks.back() != 0) {
    if (ranks.size() > n)
      throw NotNilpotent("matrix has no vanishing power up to its dimension");
    power = power * a;
    ranks.push_back(rank(power));
  }
  // at_least[k-1] = number of blocks of size >= k
  std::vector<std::size_t> at_least;
  for (std::size_t k = 1; k < ranks.size(); ++k)
    at_least.push_back(ranks[k - 1] - ranks[k]);
  Partition p;
  for (std::size_t k = at_least.size(); k-- > 0;) {
    std::size_t exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
    p.parts.insert(p.parts.end(), exact, k + 1);
  }
  return p;
}

} // namespace nilalg
