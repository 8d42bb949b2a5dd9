#ifndef FLOWBCH_ORACLE_HPP
#define FLOWBCH_ORACLE_HPP

#include "flowbch/algebra.hpp"

namespace flowbch {

/// Matrix images of the basis of one algebra.
///   Heisenberg: the CHA 4x4 matrices restricted to (q, p, 1)
///   CHA:        the 4x4 upper-triangular realization
///   QSA:        the 2x2 Hamiltonian (flow) matrices
///   QCA:        the 5x5 adjoint representation (centerless, hence faithful)
///   su2c:       the 2x2 Pauli realization
struct Representation {
  AlgebraId algebra;
  std::size_t dim;
  std::vector<SquareMatrix> basis_images;
};

const Representation& representation(AlgebraId id);

/// Scaling-and-squaring exponential; relative error ~1e-13 for small dims.
SquareMatrix matrix_exp(const SquareMatrix& M);

/// Principal logarithm by inverse scaling-and-squaring (Denman-Beavers
/// square roots, then a log series). Throws branch_error("non-principal
/// logarithm") when the spectrum touches the closed negative real axis.
SquareMatrix matrix_log(const SquareMatrix& M);

/// Principal square root (Denman-Beavers).
SquareMatrix matrix_sqrt(const SquareMatrix& M);

SquareMatrix matrix_inverse(const SquareMatrix& M);

/// Linear extension of the basis images.
SquareMatrix represent(const AlgebraElement& x);

/// Least-squares left inverse of represent; throws when the residual
/// exceeds 1e-9 ("not in algebra image").
AlgebraElement project(const SquareMatrix& M, AlgebraId algebra);

/// Ground-truth Z(A,B) through the matrix representation, in the composed-
/// flow order: project(log(exp(rep B) . exp(rep A))). Witness:
/// bch_matrix_oracle(q, p) = q + p - 1/2 on the Heisenberg algebra.
AlgebraElement bch_matrix_oracle(const AlgebraElement& A, const AlgebraElement& B);

/// Truncated series for the same composition order:
///   order 1:  A + B
///   order 2:  + [B,A]/2
///   order 3:  + ([B,[B,A]] + [A,[A,B]])/12
///   order 4:  - [A,[B,[B,A]]]/24
AlgebraElement dynkin_series(const AlgebraElement& A, const AlgebraElement& B, int order);

/// Ground-truth Z(A,B) extracted from the composed exact flows (flow of A
/// first, then flow of B): the (q,p) block through matrix_log, the s-sector
/// coefficients from probing s0 in {0,1}.
AlgebraElement generator_extraction_oracle(const AlgebraElement& A, const AlgebraElement& B);

}  // namespace flowbch

#endif
