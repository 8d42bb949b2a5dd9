#include "flowbch/flows.hpp"

#include <cmath>
#include <stdexcept>

#include "flowbch/kernels.hpp"

namespace flowbch {

namespace {

void require_contact(const AlgebraElement& H) {
  if (!is_contact(H.algebra)) throw std::invalid_argument("not a contact algebra element");
}

struct Mat2 {
  double a11, a12, a21, a22;
};

// Kernels for the integrated quadratic flow factors, rho = det(Atilde) t^2.
// K2 = (1 - C(4 rho)) / (2 rho), K3 = (3/2)(1 - S(4 rho)) / rho, both entire.
double kernel_K2(double rho) {
  if (std::abs(rho) < 0.01) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 10; ++k) {
      term *= -4.0 * rho / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
      sum += term;
      if (std::abs(term) < 1e-22) break;
    }
    return sum;
  }
  return (1.0 - entire_C(4.0 * rho)) / (2.0 * rho);
}

double kernel_K3(double rho) {
  if (std::abs(rho) < 0.01) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 10; ++k) {
      term *= -4.0 * rho / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
      sum += term;
      if (std::abs(term) < 1e-22) break;
    }
    return sum;
  }
  return 1.5 * (1.0 - entire_S(4.0 * rho)) / rho;
}

ContactState heisenberg_flow(double a, double b, double z, const ContactState& x0, double t) {
  return {x0.q + b * t, x0.p - a * t, x0.s - 0.5 * a * b * t * t - (a * x0.q + z) * t};
}

// q(t) = q0 + bt, p(t) = e^{-ct} p0 - a t phi1(-ct),
// s(t) = e^{-ct} s0 - (a q0 + z) t phi1(-ct) - a b t^2 phi2(-ct).
ContactState cha_flow(double a, double b, double c, double z, const ContactState& x0, double t) {
  const double e = std::exp(-c * t);
  const double p1 = phi1(-c * t), p2 = phi2(-c * t);
  return {x0.q + b * t, e * x0.p - a * t * p1,
          e * x0.s - (a * x0.q + z) * t * p1 - a * b * t * t * p2};
}

// Time-t map of the traceless block: C(D t^2) I + t S(D t^2) A, D = det A.
Mat2 traceless_exp(const Mat2& A, double t) {
  const double D = A.a11 * A.a22 - A.a12 * A.a21;
  const double rho = D * t * t;
  const double C = entire_C(rho), S = t * entire_S(rho);
  return {C + S * A.a11, S * A.a12, S * A.a21, C + S * A.a22};
}

// Full QCA flow; QSA and the lifted flow are the d = z = 0 cases.
ContactState qca_flow(double a, double b, double c, double d, double z, const ContactState& x0,
                      double t) {
  const Mat2 At{c + 0.5 * d, 2.0 * b, -2.0 * a, -c - 0.5 * d};
  const double conf = std::exp(-0.5 * d * t);
  const Mat2 R = traceless_exp(At, t);
  const double q1 = conf * (R.a11 * x0.q + R.a12 * x0.p);
  const double p1 = conf * (R.a21 * x0.q + R.a22 * x0.p);

  // s(t) = e^{-dt} [ s0 - z t phi1(dt) + x0^T (Q I1 + (At^T Q + Q At) I2 + At^T Q At I3) x0 ]
  // with Q = diag(-a, b); the conformal factors of the quadratic terms cancel
  // against the memory kernel exactly.
  const double D = At.a11 * At.a22 - At.a12 * At.a21;
  const double rho = D * t * t;
  const double I1 = 0.5 * t * (1.0 + entire_S(4.0 * rho));
  const double I2 = 0.5 * t * t * kernel_K2(rho);
  const double I3 = (t * t * t / 3.0) * kernel_K3(rho);

  const Mat2 Q{-a, 0.0, 0.0, b};
  const Mat2 AtTQ{At.a11 * Q.a11, At.a21 * Q.a22, At.a12 * Q.a11, At.a22 * Q.a22};
  const Mat2 QAt{Q.a11 * At.a11, Q.a11 * At.a12, Q.a22 * At.a21, Q.a22 * At.a22};
  const Mat2 AtTQAt{AtTQ.a11 * At.a11 + AtTQ.a12 * At.a21, AtTQ.a11 * At.a12 + AtTQ.a12 * At.a22,
                    AtTQ.a21 * At.a11 + AtTQ.a22 * At.a21, AtTQ.a21 * At.a12 + AtTQ.a22 * At.a22};

  auto quad = [&](const Mat2& M) {
    return M.a11 * x0.q * x0.q + (M.a12 + M.a21) * x0.q * x0.p + M.a22 * x0.p * x0.p;
  };
  const double qsum = I1 * quad(Q) + I2 * (quad(AtTQ) + quad(QAt)) + I3 * quad(AtTQAt);
  const double s1 = std::exp(-d * t) * (x0.s - z * t * phi1(d * t) + qsum);
  return {q1, p1, s1};
}

TangentVector field_at(const AlgebraElement& H, const ContactState& x) {
  const Poly h = H.to_poly();
  const double Hp = h.dp().eval(x.q, x.p, x.s).real();
  const double Hq = h.dq().eval(x.q, x.p, x.s).real();
  const double Hs = h.ds().eval(x.q, x.p, x.s).real();
  const double Hv = h.eval(x.q, x.p, x.s).real();
  return {Hp, -Hq - x.p * Hs, x.p * Hp - Hv};
}

}  // namespace

TangentVector contact_vector_field(const AlgebraElement& H, const ContactState& x) {
  require_contact(H);
  return field_at(H, x);
}

ContactState exact_flow(const AlgebraElement& H, const ContactState& x0, double t) {
  switch (H.algebra) {
    case AlgebraId::Heisenberg:
      return heisenberg_flow(H.real_coeff(0), H.real_coeff(1), H.real_coeff(2), x0, t);
    case AlgebraId::ContactHeisenberg:
      return cha_flow(H.real_coeff(0), H.real_coeff(1), H.real_coeff(2), H.real_coeff(3), x0, t);
    case AlgebraId::QuadraticContact:
      return qca_flow(H.real_coeff(0), H.real_coeff(1), H.real_coeff(2), H.real_coeff(3),
                      H.real_coeff(4), x0, t);
    default:
      throw std::invalid_argument("not a contact algebra element");
  }
}

SymplecticState exact_flow(const AlgebraElement& H, const SymplecticState& x0, double t) {
  if (H.algebra != AlgebraId::QuadraticSymplectic)
    throw std::invalid_argument("symplectic flow requires a quadratic symplectic element");
  const double a = H.real_coeff(0), b = H.real_coeff(1), c = H.real_coeff(2);
  const Mat2 M{c, 2.0 * b, -2.0 * a, -c};
  const Mat2 R = traceless_exp(M, t);
  return {R.a11 * x0.q + R.a12 * x0.p, R.a21 * x0.q + R.a22 * x0.p};
}

AlgebraElement lift_qsa(const AlgebraElement& H) {
  if (H.algebra != AlgebraId::QuadraticSymplectic)
    throw std::invalid_argument("lift expects a quadratic symplectic element");
  return AlgebraElement(AlgebraId::QuadraticContact,
                        std::vector<cdouble>{H.coeffs[0], H.coeffs[1], H.coeffs[2], 0.0, 0.0});
}

ContactState rk4_flow(const AlgebraElement& H, const ContactState& x0, double t, int n_steps) {
  require_contact(H);
  if (n_steps < 1) throw std::invalid_argument("n_steps must be positive");
  const double h = t / n_steps;
  ContactState x = x0;
  for (int i = 0; i < n_steps; ++i) {
    const TangentVector k1 = field_at(H, x);
    const TangentVector k2 =
        field_at(H, {x.q + 0.5 * h * k1.dq, x.p + 0.5 * h * k1.dp, x.s + 0.5 * h * k1.ds});
    const TangentVector k3 =
        field_at(H, {x.q + 0.5 * h * k2.dq, x.p + 0.5 * h * k2.dp, x.s + 0.5 * h * k2.ds});
    const TangentVector k4 = field_at(H, {x.q + h * k3.dq, x.p + h * k3.dp, x.s + h * k3.ds});
    x.q += h / 6.0 * (k1.dq + 2.0 * k2.dq + 2.0 * k3.dq + k4.dq);
    x.p += h / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
    x.s += h / 6.0 * (k1.ds + 2.0 * k2.ds + 2.0 * k3.ds + k4.ds);
    if (!std::isfinite(x.q) || !std::isfinite(x.p) || !std::isfinite(x.s))
      throw std::runtime_error("divergent trajectory");
  }
  return x;
}

SymplecticState rk4_flow(const AlgebraElement& H, const SymplecticState& x0, double t, int n_steps) {
  if (H.algebra != AlgebraId::QuadraticSymplectic)
    throw std::invalid_argument("symplectic flow requires a quadratic symplectic element");
  if (n_steps < 1) throw std::invalid_argument("n_steps must be positive");
  const double a = H.real_coeff(0), b = H.real_coeff(1), c = H.real_coeff(2);
  auto f = [&](const SymplecticState& x) {
    return SymplecticState{c * x.q + 2.0 * b * x.p, -2.0 * a * x.q - c * x.p};
  };
  const double h = t / n_steps;
  SymplecticState x = x0;
  for (int i = 0; i < n_steps; ++i) {
    const auto k1 = f(x);
    const auto k2 = f({x.q + 0.5 * h * k1.q, x.p + 0.5 * h * k1.p});
    const auto k3 = f({x.q + 0.5 * h * k2.q, x.p + 0.5 * h * k2.p});
    const auto k4 = f({x.q + h * k3.q, x.p + h * k3.p});
    x.q += h / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q);
    x.p += h / 6.0 * (k1.p + 2.0 * k2.p + 2.0 * k3.p + k4.p);
    if (!std::isfinite(x.q) || !std::isfinite(x.p))
      throw std::runtime_error("divergent trajectory");
  }
  return x;
}

double jacobi_bracket_at(const AlgebraElement& f, const AlgebraElement& g, const ContactState& x) {
  return jacobi_bracket(f.to_poly(), g.to_poly()).eval(x.q, x.p, x.s).real();
}

}  // namespace flowbch
