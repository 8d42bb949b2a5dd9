#ifndef FLOWBCH_BCH_HPP
#define FLOWBCH_BCH_HPP

#include <array>

#include "flowbch/algebra.hpp"

namespace flowbch {

/// Closed-form Z(A,B) for the Heisenberg algebra, the generator of
/// "flow of A for unit time, then flow of B":
///   alpha = a + abar, beta = b + bbar,
///   zeta = (abar b - a bbar)/2 + z + zbar.
AlgebraElement bch_heisenberg(const AlgebraElement& A, const AlgebraElement& B);

/// Closed-form Z(A,B) for the contact Heisenberg algebra, same composition
/// semantics (flow of A first). Removable limits (c, cbar, gamma -> 0) are
/// handled by the phi kernels; reduces to bch_heisenberg as the s
/// coefficients vanish.
AlgebraElement bch_contact_heisenberg(const AlgebraElement& A, const AlgebraElement& B);

/// Closed-form Z(A,B) = log(exp A . exp B) for the quadratic symplectic
/// algebra in its 2x2 Hamiltonian-matrix realization; equivalently the
/// generator of "flow of B first, then flow of A". Throws branch_error when
/// the half-trace x <= -1 ("outside exponential image").
AlgebraElement bch_quadratic_symplectic(const AlgebraElement& A, const AlgebraElement& B);

/// Closed-form Z(A,B) for the quadratic contact algebra, generator of
/// "flow of A first, then flow of B" (witness: Z(s, 1) = s + e/(e-1) 1).
/// With vanishing s and constant parts this reduces to the quadratic
/// symplectic map with swapped arguments.
AlgebraElement bch_quadratic_contact(const AlgebraElement& A, const AlgebraElement& B);

/// The half-trace x of the composed 2x2 map that bch_quadratic_symplectic
/// inverts, for branch inspection.
BranchReport qsa_branch(const AlgebraElement& A, const AlgebraElement& B);

using Su2Triple = std::array<double, 3>;
using Su2TripleC = std::array<cdouble, 3>;

/// su(2) composition via the complexified quadratic symplectic map,
/// Z = log(exp A . exp B) in the 2x2 Pauli realization. Real inputs give a
/// real triple; an imaginary residue above 1e-10 throws branch_error.
Su2Triple bch_su2c(const Su2Triple& mu, const Su2Triple& nu);

/// Complex-coefficient version of the same map.
Su2TripleC bch_su2c(const Su2TripleC& mu, const Su2TripleC& nu);

/// Dispatch on the element's algebra (su2c expects real triples packed as
/// coefficients).
AlgebraElement bch(const AlgebraElement& A, const AlgebraElement& B);

}  // namespace flowbch

#endif
