#ifndef NILALG_LIE_HPP
#define NILALG_LIE_HPP

#include "nilalg/matrix.hpp"
#include "nilalg/structure_tensor.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace nilalg {

/// A basis triple (0-based, i < j < k) where the Jacobi sum is nonzero.
struct JacobiDefect {
  std::array<std::size_t, 3> triple;
  Vector value;
};

/// Dimensions of C^0 = g, C^(k+1) = [g, C^k], up to stabilisation.
struct SubspaceChain {
  std::vector<std::size_t> dims;
};

/// c(g) together with the element of g \ [g,g] that realises it.
struct CharSequence {
  Partition parts;
  Vector vector;
  /// True when the maximum was searched over random combinations too, i.e.
  /// it is a generic-attainment surrogate for the max over g \ [g,g].
  bool sampled = false;
};

std::vector<JacobiDefect> jacobi_defect(const StructureTensor &g);
bool is_lie(const StructureTensor &g);

/// Basis (column vectors) of [g, g].
std::vector<Vector> derived_algebra_basis(const StructureTensor &g);

/// Throws NotLie when the Jacobi identity fails.
SubspaceChain lower_central_series(const StructureTensor &g);

/// Smallest p with C^p(g) = 0. Throws NotLie / NotNilpotent.
std::size_t nilindex(const StructureTensor &g);

/// [[x,y],z] = [x,[y,z]] on all basis triples.
bool check_associative(const StructureTensor &g);

/// The five pentagon relations ((xy)z)t=(x(yz))t, (x(yz))t=x((yz)t),
/// x((yz)t)=x(y(zt)), x(y(zt))=(xy)(zt), (xy)(zt)=((xy)z)t on basis 4-tuples.
bool check_cubic_associative(const StructureTensor &g);

/// Agreement of every pair of parenthesisations of a (p+1)-fold product that
/// differ by one rotation (an associahedron edge), on all basis tuples.
/// Requires p >= 2.
bool check_p_associative(const StructureTensor &g, std::size_t p);

/// G_i-associativity of the bracket, i in 1..6: the associator
/// A(x,y,z) = (xy)z - x(yz) summed with signs over the subgroup
///   G1 = {id}, G2 = <(12)>, G3 = <(23)>, G4 = <(13)>, G5 = A3, G6 = S3
/// must vanish on all basis triples.
bool check_Gi_associative(const StructureTensor &g, int i);

/// (xyz)tu = x(yzt)u = xy(ztu) for the ternary product [[x,y],z].
bool check_triple_total_associative(const StructureTensor &g);

/// Lexicographic maximum of the Jordan type of ad X, over the basis vectors
/// outside [g,g] and `samples` random integer combinations (coefficients in
/// [-3,3]) outside [g,g], drawn from a generator seeded with `seed`.
/// Abelian input yields (1,...,1). Throws NotLie / NotNilpotent.
CharSequence characteristic_sequence(const StructureTensor &g, std::size_t samples = 16,
                                     std::uint64_t seed = 0);

/// dim of {f : f[x,y] = [f x, y] + [x, f y]}.
std::size_t derivations_dim(const StructureTensor &g);

/// Subalgebra spanned by the given basis vectors (0-based indices), in the
/// induced basis. Throws InvalidArgument when the span is not closed.
StructureTensor basis_subalgebra(const StructureTensor &g, const std::vector<std::size_t> &indices);

} // namespace nilalg

#endif
