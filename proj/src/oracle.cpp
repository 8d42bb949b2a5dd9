#include "flowbch/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "flowbch/flows.hpp"
#include "flowbch/kernels.hpp"

namespace flowbch {

namespace {

SquareMatrix from_rows(std::size_t dim, std::initializer_list<double> rows) {
  SquareMatrix m(dim, true);
  std::size_t i = 0;
  for (double v : rows) m.entries[i++] = v;
  return m;
}

Representation build_representation(AlgebraId id) {
  switch (id) {
    case AlgebraId::ContactHeisenberg:
    case AlgebraId::Heisenberg: {
      const SquareMatrix q = from_rows(4, {0, 0, 0, 0,  0, 0, 1, 0,  0, 0, 0, 1,  0, 0, 0, 0});
      const SquareMatrix p = from_rows(4, {0, 0, -1, 0, 0, 0, 0, 0,  0, 0, 0, 0,  0, 0, 0, 0});
      const SquareMatrix s = from_rows(4, {0, 0, 0, 0,  0, -1, 0, 0, 0, 0, 0, 0,  0, 0, 0, 1});
      const SquareMatrix one = from_rows(4, {0, 0, 0, 1, 0, 0, 0, 0,  0, 0, 0, 0,  0, 0, 0, 0});
      if (id == AlgebraId::Heisenberg) return {id, 4, {q, p, one}};
      return {id, 4, {q, p, s, one}};
    }
    case AlgebraId::QuadraticSymplectic: {
      const SquareMatrix q2 = from_rows(2, {0, 0, -2, 0});
      const SquareMatrix p2 = from_rows(2, {0, 2, 0, 0});
      const SquareMatrix qp = from_rows(2, {1, 0, 0, -1});
      return {id, 2, {q2, p2, qp}};
    }
    case AlgebraId::QuadraticContact: {
      Representation rep{id, 5, {}};
      for (std::size_t i = 0; i < 5; ++i)
        rep.basis_images.push_back(adjoint_matrix(AlgebraElement::basis(id, i)));
      return rep;
    }
    case AlgebraId::Su2Complexified: {
      const cdouble I{0.0, 1.0};
      SquareMatrix s1(2, false), s2(2, false), s3(2, false);
      s1.at(0, 1) = I; s1.at(1, 0) = I;        // i sigma1
      s2.at(0, 1) = -1.0; s2.at(1, 0) = 1.0;   // -i sigma2
      s3.at(0, 0) = I; s3.at(1, 1) = -I;       // i sigma3
      return {id, 2, {s1, s2, s3}};
    }
  }
  throw std::logic_error("unknown algebra");
}

}  // namespace

const Representation& representation(AlgebraId id) {
  static const Representation heis = build_representation(AlgebraId::Heisenberg);
  static const Representation cha = build_representation(AlgebraId::ContactHeisenberg);
  static const Representation qsa = build_representation(AlgebraId::QuadraticSymplectic);
  static const Representation qca = build_representation(AlgebraId::QuadraticContact);
  static const Representation su2c = build_representation(AlgebraId::Su2Complexified);
  switch (id) {
    case AlgebraId::Heisenberg: return heis;
    case AlgebraId::ContactHeisenberg: return cha;
    case AlgebraId::QuadraticSymplectic: return qsa;
    case AlgebraId::QuadraticContact: return qca;
    case AlgebraId::Su2Complexified: return su2c;
  }
  throw std::logic_error("unknown algebra");
}

SquareMatrix matrix_exp(const SquareMatrix& M) {
  if (!M.finite()) throw std::invalid_argument("non-finite matrix");
  int squarings = 0;
  double scale = M.norm1();
  while (scale > 0.25 && squarings < 60) {
    scale *= 0.5;
    ++squarings;
  }
  const double factor = std::ldexp(1.0, -squarings);
  SquareMatrix X = M.scaled(factor);
  SquareMatrix term = SquareMatrix::identity(M.dim, M.real_valued);
  SquareMatrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * X).scaled(1.0 / k);
    sum = sum + term;
    if (term.max_abs() < 1e-20) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  if (!sum.finite()) throw std::overflow_error("exponential overflow");
  return sum;
}

SquareMatrix matrix_inverse(const SquareMatrix& M) {
  const std::size_t n = M.dim;
  SquareMatrix a = M;
  SquareMatrix inv = SquareMatrix::identity(n, M.real_valued);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
    if (std::abs(a.at(piv, col)) < 1e-300) throw std::runtime_error("singular matrix");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.entries[piv * n + j], a.entries[col * n + j]);
        std::swap(inv.entries[piv * n + j], inv.entries[col * n + j]);
      }
    const cdouble d = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cdouble f = a.at(r, col);
      if (f == cdouble{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  inv.real_valued = M.real_valued;
  return inv;
}

SquareMatrix matrix_sqrt(const SquareMatrix& M) {
  SquareMatrix Y = M;
  SquareMatrix Z = SquareMatrix::identity(M.dim, M.real_valued);
  double prev_change = std::numeric_limits<double>::infinity();
  int stalled = 0;
  for (int it = 0; it < 100; ++it) {
    SquareMatrix Yn, Zn;
    try {
      Yn = (Y + matrix_inverse(Z)).scaled(0.5);
      Zn = (Z + matrix_inverse(Y)).scaled(0.5);
    } catch (const std::runtime_error&) {
      throw branch_error("non-principal logarithm");
    }
    const double change = (Yn - Y).max_abs();
    Y = Yn;
    Z = Zn;
    if (!Y.finite()) throw branch_error("non-principal logarithm");
    // Quadratic convergence ends on a round-off plateau whose height scales
    // with the conditioning; stop there rather than demanding eps.
    const bool tiny = change < 1e-14 * std::max(1.0, Y.max_abs());
    stalled = (it > 3 && change >= 0.5 * prev_change) ? stalled + 1 : 0;
    prev_change = change;
    if (tiny || stalled >= 2) {
      const SquareMatrix check = Y * Y - M;
      if (check.max_abs() > 1e-7 * std::max(1.0, M.max_abs()))
        throw branch_error("non-principal logarithm");
      return Y;
    }
  }
  throw branch_error("non-principal logarithm");
}

SquareMatrix matrix_log(const SquareMatrix& M) {
  const SquareMatrix I = SquareMatrix::identity(M.dim, M.real_valued);
  SquareMatrix X = M;
  int k = 0;
  while ((X - I).norm1() > 0.1 && k < 60) {
    X = matrix_sqrt(X);
    ++k;
  }
  if ((X - I).norm1() > 0.1) throw branch_error("non-principal logarithm");
  const SquareMatrix E = X - I;
  SquareMatrix power = E;
  SquareMatrix sum = E;
  for (int j = 2; j <= 40; ++j) {
    power = power * E;
    sum = sum + power.scaled((j % 2 == 0 ? -1.0 : 1.0) / j);
    if (power.max_abs() < 1e-20) break;
  }
  SquareMatrix L = sum.scaled(std::ldexp(1.0, k));
  // Defensive round-trip: a spectrum that slipped past the square roots
  // surfaces here.
  if ((matrix_exp(L) - M).max_abs() > 1e-8 * std::max(1.0, M.max_abs()))
    throw branch_error("non-principal logarithm");
  return L;
}

SquareMatrix represent(const AlgebraElement& x) {
  const auto& rep = representation(x.algebra);
  SquareMatrix m(rep.dim, !is_complex(x.algebra));
  for (std::size_t i = 0; i < rep.basis_images.size(); ++i)
    m = m + rep.basis_images[i].scaled(x.coeffs[i]);
  return m;
}

AlgebraElement project(const SquareMatrix& M, AlgebraId algebra) {
  const auto& rep = representation(algebra);
  const std::size_t n = rep.basis_images.size();
  // Normal equations over the complex Frobenius inner product.
  SquareMatrix gram(n, false);
  std::vector<cdouble> rhs(n, 0.0);
  auto dot = [](const SquareMatrix& a, const SquareMatrix& b) {
    cdouble sum = 0.0;
    for (std::size_t i = 0; i < a.entries.size(); ++i)
      sum += std::conj(a.entries[i]) * b.entries[i];
    return sum;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram.at(i, j) = dot(rep.basis_images[i], rep.basis_images[j]);
    rhs[i] = dot(rep.basis_images[i], M);
  }
  const SquareMatrix ginv = matrix_inverse(gram);
  std::vector<cdouble> coeffs(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) coeffs[i] += ginv.at(i, j) * rhs[j];

  SquareMatrix recon(rep.dim, false);
  for (std::size_t i = 0; i < n; ++i) recon = recon + rep.basis_images[i].scaled(coeffs[i]);
  if ((recon - M).max_abs() > 1e-9 * std::max(1.0, M.max_abs()))
    throw std::runtime_error("not in algebra image");
  if (!is_complex(algebra))
    for (auto& c : coeffs) c = cdouble(c.real(), 0.0);
  return AlgebraElement(algebra, coeffs);
}

AlgebraElement bch_matrix_oracle(const AlgebraElement& A, const AlgebraElement& B) {
  if (A.algebra != B.algebra) throw algebra_mismatch("algebra mismatch");
  const SquareMatrix P = matrix_exp(represent(B)) * matrix_exp(represent(A));
  return project(matrix_log(P), A.algebra);
}

AlgebraElement dynkin_series(const AlgebraElement& A, const AlgebraElement& B, int order) {
  if (A.algebra != B.algebra) throw algebra_mismatch("algebra mismatch");
  if (order < 1 || order > 4) throw std::invalid_argument("unsupported order");
  AlgebraElement Z = A + B;
  if (order >= 2) Z = Z + bracket(B, A).scaled(0.5);
  if (order >= 3)
    Z = Z + (bracket(B, bracket(B, A)) + bracket(A, bracket(A, B))).scaled(1.0 / 12.0);
  if (order >= 4) Z = Z + bracket(A, bracket(B, bracket(B, A))).scaled(-1.0 / 24.0);
  return Z;
}

namespace {

// Affine time-1 flow of a Heisenberg/CHA element as a 4x4 matrix on
// (q, p, s, 1); the generator of the composed map projects back onto the
// algebra through the linearized vector field
//   d/dt (q,p,s,1) = ((0,0,0,b), (0,-c,0,-a), (-a,0,-c,-z), 0) (q,p,s,1).
SquareMatrix affine_flow_matrix(const AlgebraElement& H) {
  SquareMatrix T(4, true);
  const ContactState base = exact_flow(H, ContactState{0.0, 0.0, 0.0}, 1.0);
  const ContactState cols[3] = {exact_flow(H, ContactState{1.0, 0.0, 0.0}, 1.0),
                                exact_flow(H, ContactState{0.0, 1.0, 0.0}, 1.0),
                                exact_flow(H, ContactState{0.0, 0.0, 1.0}, 1.0)};
  for (int j = 0; j < 3; ++j) {
    T.at(0, j) = cols[j].q - base.q;
    T.at(1, j) = cols[j].p - base.p;
    T.at(2, j) = cols[j].s - base.s;
  }
  T.at(0, 3) = base.q;
  T.at(1, 3) = base.p;
  T.at(2, 3) = base.s;
  T.at(3, 3) = 1.0;
  return T;
}

AlgebraElement extract_affine(const AlgebraElement& A, const AlgebraElement& B) {
  const SquareMatrix G = matrix_log(affine_flow_matrix(B) * affine_flow_matrix(A));
  const double b = G.at(0, 3).real();
  const double a = -G.at(1, 3).real();
  const double c = -G.at(1, 1).real();
  const double z = -G.at(2, 3).real();
  if (A.algebra == AlgebraId::Heisenberg)
    return AlgebraElement(AlgebraId::Heisenberg, std::vector<double>{a, b, z});
  return AlgebraElement(AlgebraId::ContactHeisenberg, std::vector<double>{a, b, c, z});
}

AlgebraElement extract_qsa(const AlgebraElement& A, const AlgebraElement& B) {
  auto compose = [&](const SymplecticState& x) {
    return exact_flow(B, exact_flow(A, x, 1.0), 1.0);
  };
  const SymplecticState e1 = compose({1.0, 0.0}), e2 = compose({0.0, 1.0});
  SquareMatrix P(2, true);
  P.at(0, 0) = e1.q; P.at(0, 1) = e2.q;
  P.at(1, 0) = e1.p; P.at(1, 1) = e2.p;
  const SquareMatrix Z = matrix_log(P);
  return AlgebraElement(AlgebraId::QuadraticSymplectic,
                        std::vector<double>{-0.5 * Z.at(1, 0).real(), 0.5 * Z.at(0, 1).real(),
                                            Z.at(0, 0).real()});
}

AlgebraElement extract_qca(const AlgebraElement& A, const AlgebraElement& B) {
  auto compose = [&](const ContactState& x) {
    return exact_flow(B, exact_flow(A, x, 1.0), 1.0);
  };
  // s-sector: with (q0,p0) = 0 the composed map is affine in s alone.
  const double s_at0 = compose({0.0, 0.0, 0.0}).s;
  const double s_at1 = compose({0.0, 0.0, 1.0}).s;
  const double decay = s_at1 - s_at0;
  if (!(decay > 0.0)) throw branch_error("non-principal logarithm");
  const double delta = -std::log(decay);
  const double zeta = -s_at0 / phi1(-delta);

  // (q,p) block is linear and independent of s; strip the conformal factor.
  const ContactState f0 = compose({0.0, 0.0, 0.0});
  const ContactState f1 = compose({1.0, 0.0, 0.0});
  const ContactState f2 = compose({0.0, 1.0, 0.0});
  SquareMatrix P(2, true);
  P.at(0, 0) = f1.q - f0.q; P.at(0, 1) = f2.q - f0.q;
  P.at(1, 0) = f1.p - f0.p; P.at(1, 1) = f2.p - f0.p;
  const SquareMatrix Pt = P.scaled(std::exp(0.5 * delta));
  const SquareMatrix Ct = matrix_log(Pt);
  const double alpha = -0.5 * Ct.at(1, 0).real();
  const double beta = 0.5 * Ct.at(0, 1).real();
  const double gamma = Ct.at(0, 0).real() - 0.5 * delta;
  return AlgebraElement(AlgebraId::QuadraticContact,
                        std::vector<double>{alpha, beta, gamma, delta, zeta});
}

AlgebraElement extract_su2c(const AlgebraElement& A, const AlgebraElement& B) {
  const SquareMatrix P = matrix_exp(represent(B)) * matrix_exp(represent(A));
  return project(matrix_log(P), AlgebraId::Su2Complexified);
}

}  // namespace

AlgebraElement generator_extraction_oracle(const AlgebraElement& A, const AlgebraElement& B) {
  if (A.algebra != B.algebra) throw algebra_mismatch("algebra mismatch");
  switch (A.algebra) {
    case AlgebraId::Heisenberg:
    case AlgebraId::ContactHeisenberg: return extract_affine(A, B);
    case AlgebraId::QuadraticSymplectic: return extract_qsa(A, B);
    case AlgebraId::QuadraticContact: return extract_qca(A, B);
    case AlgebraId::Su2Complexified: return extract_su2c(A, B);
  }
  throw std::logic_error("unknown algebra");
}

}  // namespace flowbch
