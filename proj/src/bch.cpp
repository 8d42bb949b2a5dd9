#include "flowbch/bch.hpp"

#include <cmath>

#include "flowbch/kernels.hpp"

namespace flowbch {

namespace {

void require_same(const AlgebraElement& A, const AlgebraElement& B, AlgebraId id) {
  if (A.algebra != id || B.algebra != id) throw algebra_mismatch("algebra mismatch");
}

template <typename T>
struct M2 {
  T a11{}, a12{}, a21{}, a22{};

  M2 operator*(const M2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }
  T det() const { return a11 * a22 - a12 * a21; }
};

// Generator Z with exp(Z) = exp(L) exp(R) for traceless 2x2 L, R:
// the product is x I + W with x the half-trace, and Z = g(x) W.
template <typename T>
M2<T> gen2x2(const M2<T>& L, const M2<T>& R) {
  const T CL = entire_C(L.det()), SL = entire_S(L.det());
  const T CR = entire_C(R.det()), SR = entire_S(R.det());
  M2<T> P{CL + SL * L.a11, SL * L.a12, SL * L.a21, CL + SL * L.a22};
  const M2<T> Re{CR + SR * R.a11, SR * R.a12, SR * R.a21, CR + SR * R.a22};
  P = P * Re;
  const T x = (P.a11 + P.a22) / 2.0;
  const T g = branch_g(x);
  return {g * (P.a11 - x), g * P.a12, g * P.a21, g * (P.a22 - x)};
}

M2<double> qsa_matrix(const AlgebraElement& H) {
  const double a = H.real_coeff(0), b = H.real_coeff(1), c = H.real_coeff(2);
  return {c, 2.0 * b, -2.0 * a, -c};
}

}  // namespace

AlgebraElement bch_heisenberg(const AlgebraElement& A, const AlgebraElement& B) {
  require_same(A, B, AlgebraId::Heisenberg);
  const double a = A.real_coeff(0), b = A.real_coeff(1), z = A.real_coeff(2);
  const double ab = B.real_coeff(0), bb = B.real_coeff(1), zb = B.real_coeff(2);
  return AlgebraElement(AlgebraId::Heisenberg,
                        std::vector<double>{a + ab, b + bb, 0.5 * (-a * bb + ab * b) + z + zb});
}

AlgebraElement bch_contact_heisenberg(const AlgebraElement& A, const AlgebraElement& B) {
  require_same(A, B, AlgebraId::ContactHeisenberg);
  const double a = A.real_coeff(0), b = A.real_coeff(1), c = A.real_coeff(2), z = A.real_coeff(3);
  const double ab = B.real_coeff(0), bb = B.real_coeff(1), cb = B.real_coeff(2), zb = B.real_coeff(3);
  const double gamma = c + cb;
  const double beta = b + bb;
  const double ec = std::exp(-cb);
  const double E = phi1(-c), Eb = phi1(-cb), Eg = phi1(-gamma);
  const double F = phi2(-c), Fb = phi2(-cb), Fg = phi2(-gamma);
  const double alpha = (a * ec * E + ab * Eb) / Eg;
  const double zeta =
      (z * ec * E + zb * Eb + a * b * ec * F + ab * b * Eb + ab * bb * Fb - alpha * beta * Fg) / Eg;
  return AlgebraElement(AlgebraId::ContactHeisenberg, std::vector<double>{alpha, beta, gamma, zeta});
}

AlgebraElement bch_quadratic_symplectic(const AlgebraElement& A, const AlgebraElement& B) {
  require_same(A, B, AlgebraId::QuadraticSymplectic);
  const auto Z = gen2x2(qsa_matrix(A), qsa_matrix(B));
  return AlgebraElement(AlgebraId::QuadraticSymplectic,
                        std::vector<double>{-0.5 * Z.a21, 0.5 * Z.a12, Z.a11});
}

BranchReport qsa_branch(const AlgebraElement& A, const AlgebraElement& B) {
  require_same(A, B, AlgebraId::QuadraticSymplectic);
  const auto L = qsa_matrix(A), R = qsa_matrix(B);
  const double CL = entire_C(L.det()), SL = entire_S(L.det());
  const double CR = entire_C(R.det()), SR = entire_S(R.det());
  const M2<double> PL{CL + SL * L.a11, SL * L.a12, SL * L.a21, CL + SL * L.a22};
  const M2<double> PR{CR + SR * R.a11, SR * R.a12, SR * R.a21, CR + SR * R.a22};
  const auto P = PL * PR;
  return classify_branch((P.a11 + P.a22) / 2.0);
}

AlgebraElement bch_quadratic_contact(const AlgebraElement& A, const AlgebraElement& B) {
  require_same(A, B, AlgebraId::QuadraticContact);
  const double a = A.real_coeff(0), b = A.real_coeff(1), c = A.real_coeff(2), d = A.real_coeff(3),
               z = A.real_coeff(4);
  const double ab = B.real_coeff(0), bb = B.real_coeff(1), cb = B.real_coeff(2),
               db = B.real_coeff(3), zb = B.real_coeff(4);
  const double delta = d + db;
  const double zeta = (z * std::exp(-db) * phi1(-d) + zb * phi1(-db)) / phi1(-delta);

  // (q,p) sector: the composed map is e^{-delta/2} exp(Btilde) exp(Atilde)
  // with the trace-adjusted blocks; its generator is Ctilde - (delta/2) I.
  const M2<double> At{c + 0.5 * d, 2.0 * b, -2.0 * a, -c - 0.5 * d};
  const M2<double> Bt{cb + 0.5 * db, 2.0 * bb, -2.0 * ab, -cb - 0.5 * db};
  const auto Ct = gen2x2(Bt, At);
  const double gamma = Ct.a11 - 0.5 * delta;
  return AlgebraElement(AlgebraId::QuadraticContact,
                        std::vector<double>{-0.5 * Ct.a21, 0.5 * Ct.a12, gamma, delta, zeta});
}

Su2TripleC bch_su2c(const Su2TripleC& mu, const Su2TripleC& nu) {
  const cdouble I{0.0, 1.0};
  auto to_mat = [&](const Su2TripleC& m) {
    return M2<cdouble>{I * m[2], I * m[0] - m[1], I * m[0] + m[1], -I * m[2]};
  };
  const auto Z = gen2x2(to_mat(mu), to_mat(nu));
  // Invert a = -i mu1/2 - mu2/2 = -Z21/2, b = i mu1/2 - mu2/2 = Z12/2, c = i mu3 = Z11.
  const cdouble av = -0.5 * Z.a21, bv = 0.5 * Z.a12, cv = Z.a11;
  return {(bv - av) / I, -(av + bv), cv / I};
}

Su2Triple bch_su2c(const Su2Triple& mu, const Su2Triple& nu) {
  const Su2TripleC zc = bch_su2c(Su2TripleC{mu[0], mu[1], mu[2]}, Su2TripleC{nu[0], nu[1], nu[2]});
  Su2Triple out;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(zc[i].imag()) > 1e-10)
      throw branch_error("outside principal branch / not in exponential image");
    out[i] = zc[i].real();
  }
  return out;
}

AlgebraElement bch(const AlgebraElement& A, const AlgebraElement& B) {
  if (A.algebra != B.algebra) throw algebra_mismatch("algebra mismatch");
  switch (A.algebra) {
    case AlgebraId::Heisenberg: return bch_heisenberg(A, B);
    case AlgebraId::ContactHeisenberg: return bch_contact_heisenberg(A, B);
    case AlgebraId::QuadraticSymplectic: return bch_quadratic_symplectic(A, B);
    case AlgebraId::QuadraticContact: return bch_quadratic_contact(A, B);
    case AlgebraId::Su2Complexified: {
      const auto z = bch_su2c(Su2TripleC{A.coeffs[0], A.coeffs[1], A.coeffs[2]},
                              Su2TripleC{B.coeffs[0], B.coeffs[1], B.coeffs[2]});
      return AlgebraElement(AlgebraId::Su2Complexified, std::vector<cdouble>{z[0], z[1], z[2]});
    }
  }
  throw std::logic_error("unknown algebra");
}

}  // namespace flowbch
