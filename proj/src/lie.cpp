#include "nilalg/lie.hpp"

#include "nilalg/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>

namespace nilalg {

namespace {

Vector basis(std::size_t n, std::size_t i) { return unit_vector(n, i); }

Vector sum(Vector a, const Vector &b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    a[k] += b[k];
  return a;
}

Vector diff(Vector a, const Vector &b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    a[k] -= b[k];
  return a;
}

// Products involving at least one basis vector, read off the structure constants.
class BasisProducts {
public:
  explicit BasisProducts(const StructureTensor &g) : g_(g), n_(g.dim()), table_(n_ * n_) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t c = 0; c < n_; ++c)
        table_[a * n_ + c] = g.bracket_basis(a, c);
  }
  const Vector &at(std::size_t a, std::size_t c) const { return table_[a * n_ + c]; }
  // [v, X_c]
  Vector right(const Vector &v, std::size_t c) const {
    Vector out(n_);
    for (std::size_t l = 0; l < n_; ++l)
      if (!v[l].is_zero())
        for (std::size_t k = 0; k < n_; ++k)
          out[k].add_product(v[l], g_.coeff(l, c, k));
    return out;
  }
  // [X_a, v]
  Vector left(std::size_t a, const Vector &v) const {
    Vector out(n_);
    for (std::size_t l = 0; l < n_; ++l)
      if (!v[l].is_zero())
        for (std::size_t k = 0; k < n_; ++k)
          out[k].add_product(v[l], g_.coeff(a, l, k));
    return out;
  }

private:
  const StructureTensor &g_;
  std::size_t n_;
  std::vector<Vector> table_;
};

// Iterate over all n^m tuples of basis indices; stops early when f returns false.
bool for_all_tuples(std::size_t n, std::size_t m, const std::function<bool(const std::vector<std::size_t> &)> &f) {
  if (n == 0)
    return true;
  std::vector<std::size_t> t(m, 0);
  while (true) {
    if (!f(t))
      return false;
    bool advanced = false;
    for (std::size_t pos = m; pos-- > 0;) {
      if (++t[pos] < n) {
        advanced = true;
        break;
      }
      t[pos] = 0;
    }
    if (!advanced)
      return true;
  }
}

void require_lie(const StructureTensor &g) {
  auto defects = jacobi_defect(g);
  if (!defects.empty()) {
    const auto &t = defects.front().triple;
    throw NotLie("Jacobi identity fails on (X" + std::to_string(t[0] + 1) + ",X" + std::to_string(t[1] + 1) +
                 ",X" + std::to_string(t[2] + 1) + ")");
  }
}

// Full binary trees with a fixed number of leaves; leaves are read left to right.
struct Tree {
  std::shared_ptr<const Tree> left, right; // both null for a leaf

  bool leaf() const { return !left; }
  std::string key() const { return leaf() ? "x" : "(" + left->key() + right->key() + ")"; }
};
using TreePtr = std::shared_ptr<const Tree>;

std::vector<TreePtr> all_trees(std::size_t leaves) {
  if (leaves == 1)
    return {std::make_shared<Tree>()};
  std::vector<TreePtr> out;
  for (std::size_t l = 1; l < leaves; ++l)
    for (const auto &a : all_trees(l))
      for (const auto &b : all_trees(leaves - l))
        out.push_back(std::make_shared<Tree>(Tree{a, b}));
  return out;
}

// Trees reachable by one rotation ((A B) C) -> (A (B C)) at any node.
std::vector<TreePtr> rotations(const TreePtr &t) {
  std::vector<TreePtr> out;
  if (t->leaf())
    return out;
  if (!t->left->leaf()) {
    auto inner = std::make_shared<Tree>(Tree{t->left->right, t->right});
    out.push_back(std::make_shared<Tree>(Tree{t->left->left, inner}));
  }
  for (const auto &l : rotations(t->left))
    out.push_back(std::make_shared<Tree>(Tree{l, t->right}));
  for (const auto &r : rotations(t->right))
    out.push_back(std::make_shared<Tree>(Tree{t->left, r}));
  return out;
}

Vector evaluate_tree(const StructureTensor &g, const Tree &t, const std::vector<std::size_t> &args, std::size_t &pos) {
  if (t.leaf())
    return basis(g.dim(), args[pos++]);
  Vector l = evaluate_tree(g, *t.left, args, pos);
  Vector r = evaluate_tree(g, *t.right, args, pos);
  if (is_zero(l) || is_zero(r))
    return zero_vector(g.dim());
  return g.bracket(l, r);
}

} // namespace

std::vector<JacobiDefect> jacobi_defect(const StructureTensor &g) {
  const std::size_t n = g.dim();
  std::vector<JacobiDefect> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector a = g.bracket(g.bracket_basis(i, j), basis(n, k));
        Vector b = g.bracket(g.bracket_basis(j, k), basis(n, i));
        Vector c = g.bracket(g.bracket_basis(k, i), basis(n, j));
        Vector s = sum(sum(std::move(a), b), c);
        if (!is_zero(s))
          out.push_back({{i, j, k}, std::move(s)});
      }
  return out;
}

bool is_lie(const StructureTensor &g) { return jacobi_defect(g).empty(); }

std::vector<Vector> derived_algebra_basis(const StructureTensor &g) {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      gens.push_back(g.bracket_basis(i, j));
  return independent_subset(gens, g.dim());
}

SubspaceChain lower_central_series(const StructureTensor &g) {
  require_lie(g);
  const std::size_t n = g.dim();
  SubspaceChain chain{{n}};
  std::vector<Vector> current;
  for (std::size_t i = 0; i < n; ++i)
    current.push_back(basis(n, i));
  while (chain.dims.back() != 0) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto &v : current)
        gens.push_back(g.bracket(basis(n, i), v));
    current = independent_subset(gens, n);
    if (current.size() == chain.dims.back())
      break;
    chain.dims.push_back(current.size());
  }
  return chain;
}

std::size_t nilindex(const StructureTensor &g) {
  auto chain = lower_central_series(g);
  if (chain.dims.back() != 0)
    throw NotNilpotent("descending central series stabilises at dimension " +
                       std::to_string(chain.dims.back()));
  return chain.dims.size() - 1;
}

bool check_associative(const StructureTensor &g) {
  const std::size_t n = g.dim();
  return for_all_tuples(n, 3, [&](const std::vector<std::size_t> &t) {
    Vector left = g.bracket(g.bracket_basis(t[0], t[1]), basis(n, t[2]));
    Vector right = g.bracket(basis(n, t[0]), g.bracket_basis(t[1], t[2]));
    return left == right;
  });
}

// With A(u,v,w) = (uv)w - u(vw) the five edges read
//   ((xy)z)t - (x(yz))t = [A(x,y,z), t]     (x(yz))t - x((yz)t) = A(x, yz, t)
//   x((yz)t) - x(y(zt)) = [x, A(y,z,t)]     x(y(zt)) - (xy)(zt) = -A(x, y, zt)
//   (xy)(zt) - ((xy)z)t = -A(xy, z, t)
// so they hold iff A is central on basis triples and vanishes whenever one
// argument runs over a basis of [g,g].
bool check_cubic_associative(const StructureTensor &g) {
  const std::size_t n = g.dim();
  const BasisProducts b(g);
  auto idx = [n](std::size_t a, std::size_t c, std::size_t d) { return (a * n + c) * n + d; };
  std::vector<Vector> outer(n * n * n); // (X_a X_c) X_d
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t d = 0; d < n; ++d)
        outer[idx(a, c, d)] = b.right(b.at(a, c), d);
  // [(X_a X_c), u]
  auto outer_with = [&](std::size_t a, std::size_t c, const Vector &u) {
    Vector out(n);
    for (std::size_t l = 0; l < n; ++l)
      if (!u[l].is_zero())
        for (std::size_t k = 0; k < n; ++k)
          out[k].add_product(u[l], outer[idx(a, c, l)][k]);
    return out;
  };

  std::vector<Vector> products;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c)
      products.push_back(b.at(a, c));
  const std::vector<Vector> derived = independent_subset(products, n);

  // rows whose common kernel is the centre
  std::vector<Vector> ad_rows;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t k = 0; k < n; ++k) {
      Vector row(n);
      for (std::size_t l = 0; l < n; ++l)
        row[l] = g.coeff(l, c, k);
      ad_rows.push_back(std::move(row));
    }
  const std::vector<Vector> center_eqs = independent_subset(ad_rows, n);
  auto central = [&](const Vector &v) {
    for (const auto &row : center_eqs) {
      Rational s;
      for (std::size_t l = 0; l < n; ++l)
        s.add_product(row[l], v[l]);
      if (!s.is_zero())
        return false;
    }
    return true;
  };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!central(diff(outer[idx(x, y, z)], b.left(x, b.at(y, z)))))
          return false;
  for (const auto &u : derived)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        // A(x, u, y)
        if (!is_zero(diff(b.right(b.left(x, u), y), b.left(x, b.right(u, y)))))
          return false;
        // A(x, y, u)
        if (!is_zero(diff(outer_with(x, y, u), b.left(x, b.left(y, u)))))
          return false;
        // A(u, x, y) = [[u,x],y] + [(X_x X_y), u]
        if (!is_zero(sum(b.right(b.right(u, x), y), outer_with(x, y, u))))
          return false;
      }
  return true;
}

bool check_p_associative(const StructureTensor &g, std::size_t p) {
  if (p < 2)
    throw InvalidArgument("check_p_associative requires p >= 2");
  const auto trees = all_trees(p + 1);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < trees.size(); ++i)
    index.emplace(trees[i]->key(), i);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (const auto &r : rotations(trees[i]))
      edges.emplace_back(i, index.at(r->key()));

  return for_all_tuples(g.dim(), p + 1, [&](const std::vector<std::size_t> &t) {
    std::vector<Vector> values;
    values.reserve(trees.size());
    for (const auto &tree : trees) {
      std::size_t pos = 0;
      values.push_back(evaluate_tree(g, *tree, t, pos));
    }
    return std::all_of(edges.begin(), edges.end(),
                       [&](const auto &e) { return values[e.first] == values[e.second]; });
  });
}

bool check_Gi_associative(const StructureTensor &g, int i) {
  // Elements of each subgroup as (permutation of (x,y,z), sign).
  using Perm = std::array<std::size_t, 3>;
  struct Elem {
    Perm perm;
    int sign;
  };
  static const std::vector<std::vector<Elem>> groups = {
      {{{0, 1, 2}, 1}},
      {{{0, 1, 2}, 1}, {{1, 0, 2}, -1}},
      {{{0, 1, 2}, 1}, {{0, 2, 1}, -1}},
      {{{0, 1, 2}, 1}, {{2, 1, 0}, -1}},
      {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}},
      {{{0, 1, 2}, 1}, {{1, 2, 0}, 1}, {{2, 0, 1}, 1}, {{1, 0, 2}, -1}, {{0, 2, 1}, -1}, {{2, 1, 0}, -1}},
  };
  if (i < 1 || i > 6)
    throw InvalidArgument("G_i index must lie in 1..6");
  const auto &group = groups[static_cast<std::size_t>(i - 1)];
  const std::size_t n = g.dim();
  const BasisProducts b(g);
  std::vector<Vector> assoc(n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        assoc[(x * n + y) * n + z] = diff(b.right(b.at(x, y), z), b.left(x, b.at(y, z)));
  auto associator = [&](std::size_t x, std::size_t y, std::size_t z) -> const Vector & {
    return assoc[(x * n + y) * n + z];
  };
  return for_all_tuples(n, 3, [&](const std::vector<std::size_t> &t) {
    Vector total = zero_vector(n);
    for (const auto &e : group) {
      const Vector &a = associator(t[e.perm[0]], t[e.perm[1]], t[e.perm[2]]);
      total = e.sign > 0 ? sum(std::move(total), a) : diff(std::move(total), a);
    }
    return is_zero(total);
  });
}

bool check_triple_total_associative(const StructureTensor &g) {
  const std::size_t n = g.dim();
  auto m = [&](const Vector &x, const Vector &y, const Vector &z) { return g.bracket(g.bracket(x, y), z); };
  return for_all_tuples(n, 5, [&](const std::vector<std::size_t> &t) {
    const Vector x = basis(n, t[0]), y = basis(n, t[1]), z = basis(n, t[2]), u = basis(n, t[3]),
                 v = basis(n, t[4]);
    Vector a = m(m(x, y, z), u, v);
    Vector b = m(x, m(y, z, u), v);
    Vector c = m(x, y, m(z, u, v));
    return a == b && b == c;
  });
}

CharSequence characteristic_sequence(const StructureTensor &g, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.dim();
  require_lie(g);
  if (g.is_abelian()) {
    CharSequence cs;
    cs.parts.parts.assign(n, 1);
    cs.vector = n ? basis(n, 0) : Vector{};
    return cs;
  }
  nilindex(g); // throws NotNilpotent
  const auto derived = derived_algebra_basis(g);

  CharSequence best;
  bool have = false;
  auto consider = [&](const Vector &x) {
    if (in_span(derived, x, n))
      return false;
    Partition p = jordan_partition_nilpotent(g.ad(x));
    if (!have || p > best.parts) {
      best.parts = std::move(p);
      best.vector = x;
      have = true;
    }
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    consider(basis(n, i));

  std::mt19937_64 rng(seed);
  std::size_t taken = 0;
  for (std::size_t attempt = 0; taken < samples && attempt < 8 * samples + 8; ++attempt) {
    Vector x(n);
    for (auto &c : x)
      c = static_cast<long long>(rng() % 7) - 3;
    if (consider(x))
      ++taken;
  }
  best.sampled = samples > 0;
  return best;
}

std::size_t derivations_dim(const StructureTensor &g) {
  const std::size_t n = g.dim();
  // unknown (a, b) is the X_a-coordinate of f(X_b), column a*n + b
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  ExactMatrix sys(pairs * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t s = 0; s < n; ++s, ++row) {
        for (std::size_t l = 0; l < n; ++l)
          sys(row, s * n + l) += g.coeff(i, j, l);
        for (std::size_t a = 0; a < n; ++a) {
          sys(row, a * n + i) -= g.coeff(a, j, s);
          sys(row, a * n + j) -= g.coeff(i, a, s);
        }
      }
  return n * n - rank(sys);
}

StructureTensor basis_subalgebra(const StructureTensor &g, const std::vector<std::size_t> &indices) {
  const std::size_t m = indices.size();
  std::vector<long> position(g.dim(), -1);
  for (std::size_t a = 0; a < m; ++a) {
    if (indices[a] >= g.dim())
      throw IndexOutOfRange("basis_subalgebra: index out of range");
    position[indices[a]] = static_cast<long>(a);
  }
  TensorBuilder b(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = a + 1; c < m; ++c) {
      Vector v = g.bracket_basis(indices[a], indices[c]);
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
          continue;
        if (position[k] < 0)
          throw InvalidArgument("basis_subalgebra: span is not closed under the bracket");
        b.add(a, c, static_cast<std::size_t>(position[k]), v[k]);
      }
    }
  return b.build(g.name().empty() ? std::string{} : g.name() + "|sub");
}

} // namespace nilalg
