#ifndef FLOWBCH_SPLITTING_HPP
#define FLOWBCH_SPLITTING_HPP

#include <string>
#include <vector>

#include "flowbch/bch.hpp"
#include "flowbch/flows.hpp"

namespace flowbch {

/// Damped harmonic oscillator H = p^2/(2m) + k q^2/2 + gamma s.
struct OscillatorParams {
  double m = 1.0;
  double k = 1.0;
  double gamma = 0.0;
};

enum class Permutation { TVC, TCV, VCT, VTC, CTV, CVT };

const std::vector<Permutation>& all_permutations();
std::string permutation_name(Permutation p);
Permutation permutation_from_name(const std::string& name);

/// One splitting step: the permutation names the exponential factors left to
/// right, so the right-most piece acts on the state first. Order 2 is the
/// symmetric composition with half steps on the outer pieces.
struct IntegratorSpec {
  Permutation permutation = Permutation::TVC;
  double tau = 0.1;
  OscillatorParams params;
  int order = 1;
};

/// The three splitting pieces T = p^2/(2m), V = k q^2/2, C = gamma s as
/// quadratic contact elements.
AlgebraElement piece_T(const OscillatorParams& params);
AlgebraElement piece_V(const OscillatorParams& params);
AlgebraElement piece_C(const OscillatorParams& params);

/// Applies one step of the splitting integrator to x0.
ContactState splitting_map(const IntegratorSpec& spec, const ContactState& x0);

/// The exact Hamiltonian whose time-tau flow equals one splitting step,
/// obtained by folding bch_quadratic_contact over the executed pieces and
/// dividing by tau. Its s coefficient equals gamma. Branch failures throw
/// branch_error("timestep outside convergence region").
AlgebraElement modified_hamiltonian(const IntegratorSpec& spec);

/// Modified Hamiltonian of the symplectic map exp(tau X_T) exp(tau X_V) for
/// the undamped unit oscillator, with its defining-property residual and the
/// ratio of a(tau) to Omega(tau) = 2 arccos(1 - tau^2/2)/(tau sqrt(4-tau^2)).
struct HoModified {
  double a = 0.0, b = 0.0, c = 0.0;
  double defining_residual = 0.0;
  double omega_ratio = 0.0;
};

HoModified ho_modified_hamiltonian_symplectic(double tau);

/// One sweep row; status is "ok" or the branch failure reason, in which case
/// the coefficient and distance fields are NaN except d = gamma.
struct SweepRecord {
  Permutation permutation;
  double gamma = 0.0;
  double tau = 0.0;
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double distance = 0.0;
  std::string status = "ok";
};

/// Trace distances between the oscillator Hamiltonian (m = k = 1) and the
/// modified Hamiltonians, one record per (permutation, gamma, tau), sorted
/// by (gamma, tau, permutation). Rows are independent; `parallel` switches
/// the OpenMP evaluation on.
std::vector<SweepRecord> distance_sweep(const std::vector<double>& gammas,
                                        const std::vector<double>& tau_grid,
                                        const std::vector<Permutation>& perms,
                                        bool parallel = true);

/// Log-spaced grid used by the sweep defaults (200 points in [1e-2, 1]).
std::vector<double> log_tau_grid(double tau_min, double tau_max, int n_points);

/// CSV with header perm,gamma,tau,a,b,c,d,distance,status, 17 significant
/// digits, LF line endings.
std::string sweep_to_csv(const std::vector<SweepRecord>& records);

}  // namespace flowbch

#endif
