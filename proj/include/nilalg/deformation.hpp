#ifndef NILALG_DEFORMATION_HPP
#define NILALG_DEFORMATION_HPP

#include "nilalg/cochain.hpp"
#include "nilalg/matrix.hpp"
#include "nilalg/structure_tensor.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>

namespace nilalg {

/// μ = μ0 + tφ.
struct DeformationProblem {
  StructureTensor base;
  AlternatingCochain direction;
  Rational t{1};
};

struct DeformationConditions {
  bool phi_square_zero = false; // φ(φ(X,Y),Z) = 0
  bool delta_h_zero = false;
  bool delta_c_zero = false;
  /// Conjunction of the three conditions.
  bool stays_2step = false;
  /// μ0 + tφ satisfies Jacobi and has nilindex <= 2 for t = 1 and t = 2.
  bool direct_2step = false;
};

/// Throws BaseNot2Step, DimensionMismatch.
DeformationConditions deformation_conditions(const DeformationProblem &d);

/// Brackets μ0(X_i,X_j) + t φ(X_i,X_j); nothing is checked.
StructureTensor linear_deformation(const DeformationProblem &d);

/// φ(φ(X,Y),Z) = 0 on all basis triples.
bool phi_square_zero(const AlternatingCochain &phi);

/// 2-cochain with φ(X_i,X_j) = ν(X_i,X_j) - μ(X_i,X_j).
AlternatingCochain difference_cochain(const StructureTensor &nu, const StructureTensor &mu);

struct MaximalDeformation {
  /// Columns are the new basis vectors in old coordinates.
  ExactMatrix basis_change;
  /// k_{2p+1} or k_{2p}.
  StructureTensor model;
  AlternatingCochain phi;
  bool cocycle = false;     // δ_HC φ = 0
  bool square_zero = false; // φ∘φ = 0
};

/// Normal form g ≅ model + φ for a 2-step algebra with characteristic sequence
/// (2,...,2,1) in dimension 2p+1 or (2,...,2,1,1) in dimension 2p. Throws
/// CharSeqMismatch otherwise.
MaximalDeformation extract_deformation_maximal(const StructureTensor &g, std::size_t samples = 16,
                                               std::uint64_t seed = 0);

/// Coefficients a^{2k+1}_{2i,2j} of the family F, keyed by the 1-based
/// triple (2i, 2j, 2k+1). Allowed keys:
///   (2, 4, 2k+1)     3 <= k <= p
///   (2, 2i, 2k+1)    3 <= i <= p, 2 <= k <= p
///   (2i, 2j, 2k+1)   2 <= i < j <= p, 1 <= k <= p
struct FamilyCoefficients {
  std::size_t p = 0;
  std::map<std::array<int, 3>, Rational> a;
};

/// [X_1, X_{2i}] = X_{2i+1} plus the coefficient brackets. Throws IndexOutOfRange.
StructureTensor build_family_F(const FamilyCoefficients &c);

/// Σ_l C_ij^l C_lk^s = 0 for all i, j, k, s.
bool variety_membership(const StructureTensor &g);

} // namespace nilalg

#endif
