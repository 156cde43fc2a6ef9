#ifndef NILALG_COHOMOLOGY_HPP
#define NILALG_COHOMOLOGY_HPP

#include "nilalg/cochain.hpp"
#include "nilalg/matrix.hpp"
#include "nilalg/structure_tensor.hpp"

#include <cstddef>
#include <vector>

namespace nilalg {

/// δ_H(φ)(X,Y,Z) = μ(X,φ(Y,Z)) - φ(μ(X,Y),Z) + φ(X,μ(Y,Z)) - μ(φ(X,Y),Z).
/// The result is not skew in general, so it is returned on all basis triples.
MultilinearMap delta_h(const StructureTensor &g, const AlternatingCochain &phi);

/// Six-term Chevalley coboundary
///   μ(φ(X,Y),Z) + μ(φ(Y,Z),X) + μ(φ(Z,X),Y) + φ(μ(X,Y),Z) + φ(μ(Y,Z),X) + φ(μ(Z,X),Y).
MultilinearMap delta_c(const StructureTensor &g, const AlternatingCochain &phi);

/// δ_HC(φ)(X,Y,Z) = φ(μ(X,Y),Z) + μ(φ(X,Y),Z).
MultilinearMap delta_hc(const StructureTensor &g, const AlternatingCochain &phi);

/// General mixed coboundary of a degree-n cochain, evaluated on increasing
/// (n+1)-tuples. For n = 2p:
///   μ(X1, ψ(X2..X_{2p+1})) + Σ_{i=1..p} ψ(X1..X_{2i-1}, μ(X_{2i},X_{2i+1}), ..)
/// and for n = 2p-1 the sum runs over the pairs (X_{2i+1},X_{2i+2}), i < p.
AlternatingCochain delta_hc_general(const StructureTensor &g, const AlternatingCochain &psi);

/// δf(X,Y) = μ(fX,Y) + μ(X,fY) - f(μ(X,Y)) for f given as an n×n matrix.
AlternatingCochain delta1(const StructureTensor &g, const ExactMatrix &f);

/// Matrix of φ ↦ δ_HC(φ). Columns: cochain coordinates (pair rank, k).
/// Rows: (pair (i<j) rank, third argument, output index), lexicographic.
ExactMatrix delta_hc_matrix(const StructureTensor &g);

/// Matrix of f ↦ δf. Column a*n+b is the matrix unit f(X_b) = X_a; rows are
/// cochain coordinates (pair rank, output index).
ExactMatrix delta1_matrix(const StructureTensor &g);

struct CohomologyReport {
  std::size_t dimZ2 = 0;
  std::size_t dimB2 = 0;
  std::size_t dimH2 = 0;
  bool rigid_in_2nilp = false;
  /// False when the input is not 2-step; then dimB2 counts B² ∩ Z².
  bool two_step = true;
};

/// Throws NotLie.
CohomologyReport cohomology_dims_hc(const StructureTensor &g);

enum class Rigidity { RigidIn2Nilp, Inconclusive };

struct RigidityCertificate {
  Rigidity verdict = Rigidity::Inconclusive;
  CohomologyReport report;
};

/// Throws Not2Step when nilindex(g) > 2.
RigidityCertificate rigidity_certificate(const StructureTensor &g);

/// Element of Λ^p g in the basis X_{i1} ∧ ... ∧ X_{ip}, i1 < ... < ip,
/// lexicographic.
struct WedgeChain {
  std::size_t degree = 0;
  std::size_t dim = 0;
  Vector coeffs;

  static WedgeChain basis(std::size_t dim, const Tuple &indices);
  friend bool operator==(const WedgeChain &, const WedgeChain &) = default;
};

/// ∂_p(x1∧...∧xp) = Σ_{i<j} (-1)^{i+j+1} [xi,xj] ∧ x1 ∧ .. x̂i .. x̂j .. ∧ xp.
/// Throws DegreeOutOfRange unless 1 <= p <= dim.
WedgeChain ce_boundary(const StructureTensor &g, const WedgeChain &chain);

/// Matrix of ∂_p : Λ^p -> Λ^{p-1}.
ExactMatrix ce_boundary_matrix(const StructureTensor &g, std::size_t p);

/// m_0..m_n. Throws NotLie; throws std::logic_error if ∂∘∂ ≠ 0.
std::vector<std::size_t> ce_homology_dims(const StructureTensor &g);

} // namespace nilalg

#endif
