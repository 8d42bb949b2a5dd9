#ifndef FLOWBCH_FLOWS_HPP
#define FLOWBCH_FLOWS_HPP

#include "flowbch/algebra.hpp"

namespace flowbch {

/// Point of the contact phase space with form ds - p dq.
struct ContactState {
  double q = 0.0, p = 0.0, s = 0.0;
};

/// Point of the symplectic plane.
struct SymplecticState {
  double q = 0.0, p = 0.0;
};

struct TangentVector {
  double dq = 0.0, dp = 0.0, ds = 0.0;
};

/// Contact Hamiltonian vector field at x:
///   (dH/dp, -dH/dq - p dH/ds, p dH/dp - H).
/// H must live in a contact-realized algebra (Heisenberg, CHA, QCA).
TangentVector contact_vector_field(const AlgebraElement& H, const ContactState& x);

/// Exact time-t flow of H, in closed form up to round-off. Removable
/// parameter limits are handled by series kernels, never by non-finite
/// values. Contact overload: Heisenberg, CHA, QCA.
ContactState exact_flow(const AlgebraElement& H, const ContactState& x0, double t);

/// Symplectic overload: QSA only.
SymplecticState exact_flow(const AlgebraElement& H, const SymplecticState& x0, double t);

/// Embeds a QSA element into QCA (zero s and constant parts) so its flow can
/// be lifted to the contact space with ds/dt = b p^2 - a q^2.
AlgebraElement lift_qsa(const AlgebraElement& H);

/// Classical RK4 applied n_steps times to the exact vector field.
ContactState rk4_flow(const AlgebraElement& H, const ContactState& x0, double t, int n_steps);
SymplecticState rk4_flow(const AlgebraElement& H, const SymplecticState& x0, double t, int n_steps);

/// Coordinate Jacobi bracket {f,g} evaluated at x. Pointwise on the
/// polynomial representatives; f and g may come from different algebras.
double jacobi_bracket_at(const AlgebraElement& f, const AlgebraElement& g, const ContactState& x);

}  // namespace flowbch

#endif
