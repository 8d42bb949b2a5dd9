#include "flowbch/splitting.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "flowbch/kernels.hpp"

namespace flowbch {

namespace {

constexpr AlgebraId kQca = AlgebraId::QuadraticContact;

struct Step {
  const AlgebraElement* piece;
  double dt;
};

// Pieces in execution order (the permutation string reads right to left).
std::vector<Step> executed_steps(const IntegratorSpec& spec, const AlgebraElement& T,
                                 const AlgebraElement& V, const AlgebraElement& C) {
  const std::string name = permutation_name(spec.permutation);
  auto piece_of = [&](char ch) -> const AlgebraElement* {
    return ch == 'T' ? &T : (ch == 'V' ? &V : &C);
  };
  std::vector<Step> steps;
  if (spec.order == 1) {
    for (int i = 2; i >= 0; --i) steps.push_back({piece_of(name[i]), spec.tau});
  } else if (spec.order == 2) {
    steps.push_back({piece_of(name[0]), 0.5 * spec.tau});
    steps.push_back({piece_of(name[1]), 0.5 * spec.tau});
    steps.push_back({piece_of(name[2]), spec.tau});
    steps.push_back({piece_of(name[1]), 0.5 * spec.tau});
    steps.push_back({piece_of(name[0]), 0.5 * spec.tau});
  } else {
    throw std::invalid_argument("order must be 1 or 2");
  }
  return steps;
}

}  // namespace

const std::vector<Permutation>& all_permutations() {
  static const std::vector<Permutation> perms = {Permutation::TVC, Permutation::TCV,
                                                 Permutation::VCT, Permutation::VTC,
                                                 Permutation::CTV, Permutation::CVT};
  return perms;
}

std::string permutation_name(Permutation p) {
  switch (p) {
    case Permutation::TVC: return "TVC";
    case Permutation::TCV: return "TCV";
    case Permutation::VCT: return "VCT";
    case Permutation::VTC: return "VTC";
    case Permutation::CTV: return "CTV";
    case Permutation::CVT: return "CVT";
  }
  throw std::logic_error("unknown permutation");
}

Permutation permutation_from_name(const std::string& name) {
  for (Permutation p : all_permutations())
    if (permutation_name(p) == name) return p;
  throw std::invalid_argument("unknown permutation: " + name);
}

AlgebraElement piece_T(const OscillatorParams& params) {
  return AlgebraElement(kQca, std::vector<double>{0.0, 0.5 / params.m, 0.0, 0.0, 0.0});
}

AlgebraElement piece_V(const OscillatorParams& params) {
  return AlgebraElement(kQca, std::vector<double>{0.5 * params.k, 0.0, 0.0, 0.0, 0.0});
}

AlgebraElement piece_C(const OscillatorParams& params) {
  return AlgebraElement(kQca, std::vector<double>{0.0, 0.0, 0.0, params.gamma, 0.0});
}

ContactState splitting_map(const IntegratorSpec& spec, const ContactState& x0) {
  if (spec.tau <= 0.0) throw std::invalid_argument("tau must be positive");
  if (spec.params.m <= 0.0 || spec.params.k <= 0.0)
    throw std::invalid_argument("oscillator parameters must be positive");
  const AlgebraElement T = piece_T(spec.params), V = piece_V(spec.params), C = piece_C(spec.params);
  ContactState x = x0;
  for (const Step& st : executed_steps(spec, T, V, C)) x = exact_flow(*st.piece, x, st.dt);
  return x;
}

AlgebraElement modified_hamiltonian(const IntegratorSpec& spec) {
  const AlgebraElement T = piece_T(spec.params), V = piece_V(spec.params), C = piece_C(spec.params);
  const auto steps = executed_steps(spec, T, V, C);
  try {
    AlgebraElement Z = steps[0].piece->scaled(steps[0].dt);
    for (std::size_t i = 1; i < steps.size(); ++i)
      Z = bch_quadratic_contact(Z, steps[i].piece->scaled(steps[i].dt));
    for (auto& c : Z.coeffs) c /= spec.tau;  // true division keeps d = gamma exact
    return Z;
  } catch (const branch_error&) {
    throw branch_error("timestep outside convergence region");
  }
}

HoModified ho_modified_hamiltonian_symplectic(double tau) {
  if (!(tau > 0.0 && tau < 2.0)) throw branch_error("outside arccos domain");
  const AlgebraElement T(AlgebraId::QuadraticSymplectic, std::vector<double>{0.0, 0.5, 0.0});
  const AlgebraElement V(AlgebraId::QuadraticSymplectic, std::vector<double>{0.5, 0.0, 0.0});
  const AlgebraElement Z = bch_quadratic_symplectic(T.scaled(tau), V.scaled(tau));
  HoModified out;
  out.a = Z.real_coeff(0) / tau;
  out.b = Z.real_coeff(1) / tau;
  out.c = Z.real_coeff(2) / tau;

  // Defining property: the time-tau flow of the modified Hamiltonian equals
  // the S1 map ((1 - tau^2, tau), (-tau, 1)).
  const AlgebraElement H(AlgebraId::QuadraticSymplectic, std::vector<double>{out.a, out.b, out.c});
  double resid = 0.0;
  const SymplecticState probes[2] = {{1.0, 0.0}, {0.0, 1.0}};
  const double s1[2][2] = {{1.0 - tau * tau, tau}, {-tau, 1.0}};
  for (int j = 0; j < 2; ++j) {
    const SymplecticState y = exact_flow(H, probes[j], tau);
    resid = std::max(resid, std::abs(y.q - s1[0][j]));
    resid = std::max(resid, std::abs(y.p - s1[1][j]));
  }
  out.defining_residual = resid;

  const double omega = 2.0 * std::acos(1.0 - 0.5 * tau * tau) / (tau * std::sqrt(4.0 - tau * tau));
  out.omega_ratio = out.a / omega;
  return out;
}

std::vector<double> log_tau_grid(double tau_min, double tau_max, int n_points) {
  if (!(tau_min > 0.0 && tau_max > tau_min) || n_points < 2)
    throw std::invalid_argument("bad tau grid");
  std::vector<double> grid(n_points);
  const double lmin = std::log(tau_min), lmax = std::log(tau_max);
  for (int i = 0; i < n_points; ++i)
    grid[i] = std::exp(lmin + (lmax - lmin) * i / double(n_points - 1));
  return grid;
}

namespace {

SweepRecord sweep_row(Permutation perm, double gamma, double tau) {
  SweepRecord rec;
  rec.permutation = perm;
  rec.gamma = gamma;
  rec.tau = tau;
  rec.d = gamma;
  IntegratorSpec spec{perm, tau, OscillatorParams{1.0, 1.0, gamma}, 1};
  try {
    const AlgebraElement H_mod = modified_hamiltonian(spec);
    const AlgebraElement H(kQca, std::vector<double>{0.5, 0.5, 0.0, gamma, 0.0});
    rec.a = H_mod.real_coeff(0);
    rec.b = H_mod.real_coeff(1);
    rec.c = H_mod.real_coeff(2);
    rec.d = H_mod.real_coeff(3);
    rec.distance = trace_distance(H, H_mod);
  } catch (const branch_error& e) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    rec.a = rec.b = rec.c = nan;
    rec.distance = nan;
    rec.status = e.what();
  }
  return rec;
}

}  // namespace

std::vector<SweepRecord> distance_sweep(const std::vector<double>& gammas,
                                        const std::vector<double>& tau_grid,
                                        const std::vector<Permutation>& perms, bool parallel) {
  // Row layout fixes the (gamma, tau, perm) sort order up front, so the
  // parallel fill is deterministic.
  struct Job {
    Permutation perm;
    double gamma, tau;
  };
  std::vector<Job> jobs;
  jobs.reserve(gammas.size() * tau_grid.size() * perms.size());
  for (double g : gammas)
    for (double tau : tau_grid)
      for (Permutation p : perms) jobs.push_back({p, g, tau});

  std::vector<SweepRecord> rows(jobs.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < long(jobs.size()); ++i)
      rows[i] = sweep_row(jobs[i].perm, jobs[i].gamma, jobs[i].tau);
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i)
      rows[i] = sweep_row(jobs[i].perm, jobs[i].gamma, jobs[i].tau);
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
  std::string out = "perm,gamma,tau,a,b,c,d,distance,status\n";
  char buf[256];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%s\n",
                  permutation_name(r.permutation).c_str(), r.gamma, r.tau, r.a, r.b, r.c, r.d,
                  r.distance, r.status.c_str());
    out += buf;
  }
  return out;
}

}  // namespace flowbch
