#ifndef NILALG_CONSTRUCTORS_HPP
#define NILALG_CONSTRUCTORS_HPP

#include "nilalg/matrix.hpp"
#include "nilalg/structure_tensor.hpp"

#include <cstddef>

namespace nilalg {

/// h_{2p+1}: [X_{2i-1}, X_{2i}] = X_{2p+1}, 1 <= i <= p.
StructureTensor heisenberg(std::size_t p);

/// k_{2p+1}: [X_1, X_{2i}] = X_{2i+1}, 1 <= i <= p.
StructureTensor k_odd(std::size_t p);

/// k_{2p}: [X_1, X_{2i}] = X_{2i+1}, 1 <= i <= p-1.
StructureTensor k_even(std::size_t p);

/// Free 2-step nilpotent algebra on r generators, V_r + Λ²V_r. Basis order is
/// e_1..e_r followed by e_a ∧ e_b (a < b) in lexicographic order, and
/// [e_a, e_b] = e_a ∧ e_b. Requires r >= 2.
StructureTensor free_two_step(std::size_t r);

/// Model filiform algebra: [X_1, X_i] = X_{i+1}, 2 <= i <= n-1. Requires n >= 2.
StructureTensor filiform(std::size_t n);

/// Structure constants in the basis Y_j = sum_i P_ij X_i (the columns of P),
/// i.e. the product f^-1 ∘ mu ∘ (f × f) for f = P. Throws SingularBasisChange.
StructureTensor change_basis(const StructureTensor &g, const ExactMatrix &p);

/// g1 ⊕ g2 with the basis of g1 first.
StructureTensor direct_sum(const StructureTensor &g1, const StructureTensor &g2);

} // namespace nilalg

#endif
