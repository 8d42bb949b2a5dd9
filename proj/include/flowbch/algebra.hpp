#ifndef FLOWBCH_ALGEBRA_HPP
#define FLOWBCH_ALGEBRA_HPP

#include <complex>
#include <string>
#include <vector>

#include "flowbch/kernels.hpp"
#include "flowbch/poly.hpp"

namespace flowbch {

using cdouble = std::complex<double>;

/// The five supported algebras, each with a fixed ordered basis:
///   Heisenberg          (q, p, 1)
///   ContactHeisenberg   (q, p, s, 1)
///   QuadraticSymplectic (q^2, p^2, qp)
///   QuadraticContact    (q^2, p^2, qp, s, 1)
///   Su2Complexified     (Sigma1, Sigma2, Sigma3), complex coefficients
enum class AlgebraId { Heisenberg, ContactHeisenberg, QuadraticSymplectic, QuadraticContact, Su2Complexified };

std::size_t basis_dim(AlgebraId id);
bool is_contact(AlgebraId id);   ///< realized by contact Hamiltonians on (q,p,s)
bool is_complex(AlgebraId id);   ///< complex scalar field
std::string algebra_tag(AlgebraId id);
AlgebraId algebra_from_tag(const std::string& tag);

/// The basis Hamiltonian function of slot i, as a polynomial in (q,p,s).
/// Su2Complexified basis elements are complex combinations of quadratics.
Poly basis_poly(AlgebraId id, std::size_t i);

/// Coefficient vector over the fixed basis of one algebra. Coefficients are
/// stored as complex; all non-su2c algebras keep them real.
struct AlgebraElement {
  AlgebraId algebra;
  std::vector<cdouble> coeffs;

  AlgebraElement(AlgebraId id, std::vector<cdouble> c);
  AlgebraElement(AlgebraId id, const std::vector<double>& c);
  static AlgebraElement zero(AlgebraId id);
  static AlgebraElement basis(AlgebraId id, std::size_t i);

  double real_coeff(std::size_t i) const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(cdouble c) const;

  /// The Hamiltonian function this element represents.
  Poly to_poly() const;
};

/// Dense square matrix, real or complex entries, dims 2..5 in this library.
struct SquareMatrix {
  std::size_t dim = 0;
  std::vector<cdouble> entries;  // row-major
  bool real_valued = true;

  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t d, bool real = true);
  static SquareMatrix identity(std::size_t d, bool real = true);

  cdouble& at(std::size_t i, std::size_t j) { return entries[i * dim + j]; }
  cdouble at(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }

  SquareMatrix operator+(const SquareMatrix& o) const;
  SquareMatrix operator-(const SquareMatrix& o) const;
  SquareMatrix operator*(const SquareMatrix& o) const;
  SquareMatrix scaled(cdouble c) const;
  cdouble trace() const;
  double norm1() const;     ///< max column sum of absolute values
  double max_abs() const;
  bool finite() const;
};

/// Structure constants c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k,
/// derived from the coordinate Jacobi bracket of the basis polynomials.
struct StructureTable {
  AlgebraId algebra;
  std::vector<cdouble> c;  // flattened [i][j][k]

  cdouble at(std::size_t i, std::size_t j, std::size_t k) const;
};

/// The (cached) derived structure table of an algebra.
const StructureTable& structure_table(AlgebraId id);

/// Jacobi bracket of two elements of the same algebra via the derived
/// structure constants. Throws algebra_mismatch otherwise.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// Matrix of ad_x on coefficient vectors: adjoint_matrix(x) * coeffs(y)
/// equals coeffs of bracket(x, y).
SquareMatrix adjoint_matrix(const AlgebraElement& x);

/// Killing form b(x,y) = Tr(ad_x ad_y). Real algebras give a real value.
cdouble killing_form(const AlgebraElement& x, const AlgebraElement& y);

/// Pseudo-distance d(x,y) = b(x-y, x-y)^2 (|.|^2 of the complex value for
/// su2c). Zero at x = y, symmetric, possibly degenerate.
double trace_distance(const AlgebraElement& x, const AlgebraElement& y);

}  // namespace flowbch

#endif
