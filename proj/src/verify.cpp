#include "flowbch/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "flowbch/bch.hpp"
#include "flowbch/flows.hpp"
#include "flowbch/oracle.hpp"
#include "flowbch/splitting.hpp"

namespace flowbch {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1))) {
  next();
  next();
}

std::uint64_t TrialRng::next() {
  // splitmix64 step
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double TrialRng::uniform(double lo, double hi) {
  const double u = double(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int TrialRng::uniform_int(int lo, int hi) {
  return lo + int(next() % std::uint64_t(hi - lo + 1));
}

namespace {

const AlgebraId kRealAlgebras[] = {AlgebraId::Heisenberg, AlgebraId::ContactHeisenberg,
                                   AlgebraId::QuadraticSymplectic, AlgebraId::QuadraticContact};
const AlgebraId kAllAlgebras[] = {AlgebraId::Heisenberg, AlgebraId::ContactHeisenberg,
                                  AlgebraId::QuadraticSymplectic, AlgebraId::QuadraticContact,
                                  AlgebraId::Su2Complexified};

AlgebraElement random_element(AlgebraId id, TrialRng& rng, double lo = -2.0, double hi = 2.0) {
  std::vector<cdouble> c(basis_dim(id));
  for (auto& v : c) v = rng.uniform(lo, hi);
  return AlgebraElement(id, std::move(c));
}

ContactState random_state(TrialRng& rng, double bound = 1.0) {
  return {rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
}

double elem_dist(const AlgebraElement& x, const AlgebraElement& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    worst = std::max(worst, std::abs(x.coeffs[i] - y.coeffs[i]));
  return worst;
}

double elem_norm(const AlgebraElement& x) {
  double worst = 0.0;
  for (const auto& v : x.coeffs) worst = std::max(worst, std::abs(v));
  return worst;
}

double rel_dist(const AlgebraElement& x, const AlgebraElement& y) {
  return elem_dist(x, y) / std::max(1.0, std::max(elem_norm(x), elem_norm(y)));
}

// Runs `trial` over [0, n) with per-trial RNG streams and residual max-reduce.
CheckResult run_trials(const std::string& name, int n, double tol, const VerifyConfig& cfg,
                       const std::function<double(TrialRng&)>& trial) {
  CheckResult out{name, n, 0, 0.0, tol};
  std::vector<double> residuals(n, 0.0);
  if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int i = 0; i < n; ++i) {
      TrialRng rng(cfg.seed, std::uint64_t(i) + std::hash<std::string>{}(name));
      residuals[i] = trial(rng);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      TrialRng rng(cfg.seed, std::uint64_t(i) + std::hash<std::string>{}(name));
      residuals[i] = trial(rng);
    }
  }
  for (double r : residuals) {
    out.worst_residual = std::max(out.worst_residual, r);
    if (!(r <= tol)) ++out.failures;
  }
  return out;
}

CheckResult single_check(const std::string& name, double residual, double tol) {
  CheckResult out{name, 1, residual <= tol ? 0 : 1, residual, tol};
  return out;
}

}  // namespace

SuiteReport verify_brackets(const VerifyConfig& cfg) {
  SuiteReport rep{"brackets", {}};

  for (AlgebraId id : kAllAlgebras) {
    rep.checks.push_back(run_trials(
        "antisymmetry/" + algebra_tag(id), cfg.trials, 1e-12, cfg, [id](TrialRng& rng) {
          const auto x = random_element(id, rng), y = random_element(id, rng);
          const auto sum = bracket(x, y) + bracket(y, x);
          return std::max(elem_norm(sum), elem_norm(bracket(x, x)));
        }));
  }

  for (AlgebraId id : kAllAlgebras) {
    const std::size_t n = basis_dim(id);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const auto ei = AlgebraElement::basis(id, i), ej = AlgebraElement::basis(id, j),
                     ek = AlgebraElement::basis(id, k);
          const auto cyc = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                           bracket(ek, bracket(ei, ej));
          worst = std::max(worst, elem_norm(cyc));
        }
    rep.checks.push_back(single_check("jacobi_identity/" + algebra_tag(id), worst, 1e-12));
  }

  // Structure constants against the pointwise coordinate bracket.
  for (AlgebraId id : kRealAlgebras) {
    const std::size_t n = basis_dim(id);
    rep.checks.push_back(run_trials(
        "structure_pointwise/" + algebra_tag(id), 100, 1e-10, cfg, [id, n](TrialRng& rng) {
          const ContactState x = random_state(rng, 2.0);
          double worst = 0.0;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
              const auto ei = AlgebraElement::basis(id, i), ej = AlgebraElement::basis(id, j);
              const double lhs = jacobi_bracket_at(ei, ej, x);
              const auto br = bracket(ei, ej);
              const double rhs = br.to_poly().eval(x.q, x.p, x.s).real();
              worst = std::max(worst, std::abs(lhs - rhs));
            }
          return worst;
        }));
  }

  {
    const auto q = AlgebraElement::basis(AlgebraId::Heisenberg, 0);
    const auto p = AlgebraElement::basis(AlgebraId::Heisenberg, 1);
    const auto one = AlgebraElement::basis(AlgebraId::Heisenberg, 2);
    rep.checks.push_back(single_check("spot/heisenberg_qp", elem_dist(bracket(q, p), one), 1e-15));
  }
  {
    const auto one = AlgebraElement::basis(AlgebraId::ContactHeisenberg, 3);
    const auto s = AlgebraElement::basis(AlgebraId::ContactHeisenberg, 2);
    rep.checks.push_back(single_check("spot/cha_1s", elem_dist(bracket(one, s), one), 1e-15));
  }
  {
    const auto q2 = AlgebraElement::basis(AlgebraId::QuadraticSymplectic, 0);
    const auto p2 = AlgebraElement::basis(AlgebraId::QuadraticSymplectic, 1);
    const auto qp = AlgebraElement::basis(AlgebraId::QuadraticSymplectic, 2);
    rep.checks.push_back(
        single_check("spot/qsa_q2p2", elem_dist(bracket(q2, p2), qp.scaled(4.0)), 1e-15));
  }
  {
    const auto s1 = AlgebraElement::basis(AlgebraId::Su2Complexified, 0);
    const auto s2 = AlgebraElement::basis(AlgebraId::Su2Complexified, 1);
    const auto s3 = AlgebraElement::basis(AlgebraId::Su2Complexified, 2);
    rep.checks.push_back(
        single_check("spot/su2c_sigma", elem_dist(bracket(s1, s2), s3.scaled(2.0)), 1e-13));
  }

  // Leibniz anomaly {f, gh} = g{f,h} + h{f,g} + gh{1,f} on QCA basis
  // functions; the correction term carries the Reeb derivative of f.
  rep.checks.push_back(run_trials("leibniz_anomaly/qca", 100, 1e-10, cfg, [](TrialRng& rng) {
    const AlgebraId id = AlgebraId::QuadraticContact;
    const ContactState x = random_state(rng, 1.5);
    double worst = 0.0;
    for (int rep_i = 0; rep_i < 5; ++rep_i) {
      const Poly f = basis_poly(id, std::size_t(rng.uniform_int(0, 4)));
      const Poly g = basis_poly(id, std::size_t(rng.uniform_int(0, 4)));
      const Poly h = basis_poly(id, std::size_t(rng.uniform_int(0, 4)));
      const Poly one = Poly::constant(1.0);
      const Poly lhs = jacobi_bracket(f, g * h);
      const Poly rhs = g * jacobi_bracket(f, h) + h * jacobi_bracket(f, g) +
                       g * h * jacobi_bracket(one, f);
      worst = std::max(worst, std::abs((lhs - rhs).eval(x.q, x.p, x.s)));
    }
    return worst;
  }));

  for (AlgebraId id : kAllAlgebras) {
    rep.checks.push_back(run_trials(
        "killing_invariance/" + algebra_tag(id), cfg.trials / 4 + 1, 1e-10, cfg,
        [id](TrialRng& rng) {
          const auto x = random_element(id, rng), y = random_element(id, rng),
                     z = random_element(id, rng);
          const cdouble lhs = killing_form(bracket(z, x), y) + killing_form(x, bracket(z, y));
          const cdouble sym = killing_form(x, y) - killing_form(y, x);
          return std::max(std::abs(lhs), std::abs(sym));
        }));
  }
  {
    const auto qp = AlgebraElement::basis(AlgebraId::QuadraticSymplectic, 2);
    rep.checks.push_back(
        single_check("spot/killing_qsa_qp", std::abs(killing_form(qp, qp) - 8.0), 1e-13));
    const auto qp5 = AlgebraElement::basis(AlgebraId::QuadraticContact, 2);
    const auto zero5 = AlgebraElement::zero(AlgebraId::QuadraticContact);
    rep.checks.push_back(single_check(
        "spot/trace_distance_qca_qp", std::abs(trace_distance(qp5, zero5) - 64.0), 1e-12));
  }

  for (AlgebraId id : kAllAlgebras) {
    rep.checks.push_back(run_trials(
        "adjoint_homomorphism/" + algebra_tag(id), 100, 1e-12, cfg, [id](TrialRng& rng) {
          const auto x = random_element(id, rng), y = random_element(id, rng);
          const auto lhs = adjoint_matrix(bracket(x, y));
          const auto rhs = adjoint_matrix(x) * adjoint_matrix(y) -
                           adjoint_matrix(y) * adjoint_matrix(x);
          return (lhs - rhs).max_abs();
        }));
  }

  rep.checks.push_back(run_trials("trace_distance_axioms", cfg.trials / 4 + 1, 1e-12, cfg,
                                  [](TrialRng& rng) {
                                    const auto id = AlgebraId::QuadraticContact;
                                    const auto x = random_element(id, rng),
                                               y = random_element(id, rng);
                                    const double dxx = trace_distance(x, x);
                                    const double asym =
                                        std::abs(trace_distance(x, y) - trace_distance(y, x));
                                    return std::max(dxx, asym);
                                  }));
  return rep;
}

SuiteReport verify_flows(const VerifyConfig& cfg) {
  SuiteReport rep{"flows", {}};

  // Hamiltonian decay law H(x(t)) = H(x0) e^{-ct} with c the s coefficient.
  for (AlgebraId id : {AlgebraId::ContactHeisenberg, AlgebraId::QuadraticContact}) {
    rep.checks.push_back(run_trials(
        "decay_law/" + algebra_tag(id), cfg.trials / 4 + 1, 1e-9, cfg, [id](TrialRng& rng) {
          const auto H = random_element(id, rng);
          const ContactState x0 = random_state(rng);
          const double c = id == AlgebraId::ContactHeisenberg ? H.real_coeff(2) : H.real_coeff(3);
          const double H0 = H.to_poly().eval(x0.q, x0.p, x0.s).real();
          double worst = 0.0;
          for (double t : {0.3, 1.0}) {
            const ContactState xt = exact_flow(H, x0, t);
            const double Ht = H.to_poly().eval(xt.q, xt.p, xt.s).real();
            worst = std::max(worst,
                             std::abs(Ht - H0 * std::exp(-c * t)) / std::max(1.0, std::abs(H0)));
          }
          return worst;
        }));
  }

  // Vector-field commutator against the bracket, by central differences.
  for (AlgebraId id : {AlgebraId::Heisenberg, AlgebraId::ContactHeisenberg,
                       AlgebraId::QuadraticContact}) {
    const std::size_t n = basis_dim(id);
    rep.checks.push_back(run_trials(
        "field_bracket_compat/" + algebra_tag(id), 50, 1e-6, cfg, [id, n](TrialRng& rng) {
          const ContactState x = random_state(rng);
          const double h = 1e-5;
          auto field = [&](const AlgebraElement& H, const ContactState& y) {
            return contact_vector_field(H, y);
          };
          double worst = 0.0;
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
              const auto f = AlgebraElement::basis(id, i), g = AlgebraElement::basis(id, j);
              // (J_f Xg - J_g Xf) at x, with J by central differences.
              auto jac_times = [&](const AlgebraElement& H, const TangentVector& v) {
                const ContactState xp{x.q + h * v.dq, x.p + h * v.dp, x.s + h * v.ds};
                const ContactState xm{x.q - h * v.dq, x.p - h * v.dp, x.s - h * v.ds};
                const TangentVector fp = field(H, xp), fm = field(H, xm);
                return TangentVector{(fp.dq - fm.dq) / (2 * h), (fp.dp - fm.dp) / (2 * h),
                                     (fp.ds - fm.ds) / (2 * h)};
              };
              const TangentVector Xf = field(f, x), Xg = field(g, x);
              const TangentVector t1 = jac_times(f, Xg), t2 = jac_times(g, Xf);
              const TangentVector want = field(bracket(f, g), x);
              worst = std::max({worst, std::abs(t1.dq - t2.dq - want.dq),
                                std::abs(t1.dp - t2.dp - want.dp),
                                std::abs(t1.ds - t2.ds - want.ds)});
            }
          return worst;
        }));
  }

  // Exact flows against RK4 at n = 1e4 steps.
  for (AlgebraId id : kRealAlgebras) {
    rep.checks.push_back(run_trials(
        "exact_vs_rk4/" + algebra_tag(id), 100, 1e-8, cfg, [id](TrialRng& rng) {
          const auto H = random_element(id, rng);
          if (id == AlgebraId::QuadraticSymplectic) {
            const SymplecticState x0{rng.uniform(-1, 1), rng.uniform(-1, 1)};
            const auto a = exact_flow(H, x0, 1.0);
            const auto b = rk4_flow(H, x0, 1.0, 10000);
            return std::max(std::abs(a.q - b.q), std::abs(a.p - b.p));
          }
          const ContactState x0 = random_state(rng);
          const auto a = exact_flow(H, x0, 1.0);
          const auto b = rk4_flow(H, x0, 1.0, 10000);
          return std::max({std::abs(a.q - b.q), std::abs(a.p - b.p), std::abs(a.s - b.s)});
        }));
  }

  // Flow group property at mixed times.
  for (AlgebraId id : {AlgebraId::Heisenberg, AlgebraId::ContactHeisenberg,
                       AlgebraId::QuadraticContact}) {
    rep.checks.push_back(run_trials(
        "group_property/" + algebra_tag(id), cfg.trials / 4 + 1, 1e-11, cfg, [id](TrialRng& rng) {
          const auto H = random_element(id, rng);
          const ContactState x0 = random_state(rng);
          const double t1 = rng.uniform(-1, 1), t2 = rng.uniform(-1, 1);
          const ContactState one = exact_flow(H, x0, t1 + t2);
          const ContactState two = exact_flow(H, exact_flow(H, x0, t1), t2);
          return std::max({std::abs(one.q - two.q), std::abs(one.p - two.p),
                           std::abs(one.s - two.s)});
        }));
  }

  // RK4 global order: error ratio ~16 per step-count doubling.
  {
    const AlgebraElement H(AlgebraId::ContactHeisenberg, std::vector<double>{1, 1, 1, 0});
    const ContactState x0{0.4, -0.3, 0.2};
    const ContactState ref = exact_flow(H, x0, 1.0);
    double prev = 0.0, worst_ratio_err = 0.0;
    for (int n : {10, 20, 40, 80}) {
      const ContactState y = rk4_flow(H, x0, 1.0, n);
      const double err = std::max({std::abs(y.q - ref.q), std::abs(y.p - ref.p),
                                   std::abs(y.s - ref.s)});
      if (prev > 0.0) {
        const double ratio = prev / err;
        worst_ratio_err = std::max(worst_ratio_err, std::abs(ratio - 16.0));
      }
      prev = err;
    }
    rep.checks.push_back(single_check("rk4_order4_ratio_near_16", worst_ratio_err, 4.0));
  }

  // Spot values.
  {
    const AlgebraElement Hs(AlgebraId::ContactHeisenberg, std::vector<double>{0, 0, 1, 0});
    const TangentVector v = contact_vector_field(Hs, ContactState{1, 2, 3});
    const double resid = std::max({std::abs(v.dq), std::abs(v.dp + 2.0), std::abs(v.ds + 3.0)});
    rep.checks.push_back(single_check("spot/field_H=s", resid, 1e-15));

    const AlgebraElement Hh(AlgebraId::Heisenberg, std::vector<double>{1.5, -0.5, 0.25});
    const ContactState y = exact_flow(Hh, ContactState{0, 0, 0}, 1.0);
    const double r2 = std::max({std::abs(y.q + 0.5), std::abs(y.p + 1.5),
                                std::abs(y.s - (-0.5 * 1.5 * -0.5 - 0.25))});
    rep.checks.push_back(single_check("spot/heisenberg_flow", r2, 1e-14));

    // CHA with c ~ 0 follows the Heisenberg formulas.
    const AlgebraElement Hc(AlgebraId::ContactHeisenberg, std::vector<double>{1.0, 2.0, 1e-12, 0.5});
    const AlgebraElement Hh2(AlgebraId::Heisenberg, std::vector<double>{1.0, 2.0, 0.5});
    const ContactState a = exact_flow(Hc, ContactState{0.3, 0.7, -0.2}, 1.0);
    const ContactState b = exact_flow(Hh2, ContactState{0.3, 0.7, -0.2}, 1.0);
    const double r3 = std::max({std::abs(a.q - b.q), std::abs(a.p - b.p), std::abs(a.s - b.s)});
    rep.checks.push_back(single_check("spot/cha_small_c_limit", r3, 1e-9));
  }
  return rep;
}

namespace {

// Reference composed-flow generator for the flow-identity check, evaluated in
// each algebra's documented composition order.
double flow_identity_residual(AlgebraId id, const AlgebraElement& Z, const AlgebraElement& A,
                              const AlgebraElement& B, TrialRng& rng) {
  if (id == AlgebraId::QuadraticSymplectic) {
    // Z = log(exp A exp B): B's flow acts first.
    const SymplecticState x0{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const SymplecticState lhs = exact_flow(Z, x0, 1.0);
    const SymplecticState rhs = exact_flow(A, exact_flow(B, x0, 1.0), 1.0);
    return std::max(std::abs(lhs.q - rhs.q), std::abs(lhs.p - rhs.p));
  }
  const ContactState x0 = random_state(rng);
  const ContactState lhs = exact_flow(Z, x0, 1.0);
  const ContactState rhs = exact_flow(B, exact_flow(A, x0, 1.0), 1.0);
  return std::max({std::abs(lhs.q - rhs.q), std::abs(lhs.p - rhs.p), std::abs(lhs.s - rhs.s)});
}

}  // namespace

SuiteReport verify_bch(const VerifyConfig& cfg) {
  SuiteReport rep{"bch", {}};
  const double tol = cfg.tolerance;

  rep.checks.push_back(run_trials(
      "heisenberg_vs_series2", cfg.trials, 1e-12, cfg, [](TrialRng& rng) {
        const auto A = random_element(AlgebraId::Heisenberg, rng);
        const auto B = random_element(AlgebraId::Heisenberg, rng);
        return elem_dist(bch_heisenberg(A, B), dynkin_series(A, B, 2));
      }));

  rep.checks.push_back(run_trials(
      "cha_vs_matrix_oracle", cfg.trials, tol, cfg, [](TrialRng& rng) {
        const auto A = random_element(AlgebraId::ContactHeisenberg, rng);
        const auto B = random_element(AlgebraId::ContactHeisenberg, rng);
        return rel_dist(bch_contact_heisenberg(A, B), bch_matrix_oracle(A, B));
      }));

  // Product-order closed forms against the composed-flow oracles: the oracle
  // takes swapped arguments (log(exp A exp B) = oracle of "B first").
  rep.checks.push_back(run_trials(
      "qsa_vs_matrix_oracle", cfg.trials, tol, cfg, [](TrialRng& rng) {
        for (int attempt = 0; attempt < 64; ++attempt) {
          const auto A = random_element(AlgebraId::QuadraticSymplectic, rng);
          const auto B = random_element(AlgebraId::QuadraticSymplectic, rng);
          if (qsa_branch(A, B).x_value <= -0.9) continue;
          try {
            return rel_dist(bch_quadratic_symplectic(A, B), bch_matrix_oracle(B, A));
          } catch (const branch_error&) {
            continue;
          }
        }
        throw std::runtime_error("no in-branch sample found");
      }));

  rep.checks.push_back(run_trials(
      "qca_vs_generator_extraction", cfg.trials, tol, cfg, [](TrialRng& rng) {
        for (int attempt = 0; attempt < 64; ++attempt) {
          const auto A = random_element(AlgebraId::QuadraticContact, rng);
          const auto B = random_element(AlgebraId::QuadraticContact, rng);
          try {
            return rel_dist(bch_quadratic_contact(A, B), generator_extraction_oracle(A, B));
          } catch (const branch_error&) {
            continue;
          }
        }
        throw std::runtime_error("no in-branch sample found");
      }));

  rep.checks.push_back(run_trials(
      "su2c_vs_matrix_oracle", cfg.trials, tol, cfg, [](TrialRng& rng) {
        for (int attempt = 0; attempt < 64; ++attempt) {
          const auto A = random_element(AlgebraId::Su2Complexified, rng, -1.2, 1.2);
          const auto B = random_element(AlgebraId::Su2Complexified, rng, -1.2, 1.2);
          try {
            return rel_dist(bch(A, B), bch_matrix_oracle(B, A));
          } catch (const branch_error&) {
            continue;
          }
        }
        throw std::runtime_error("no in-branch sample found");
      }));

  // Convention witnesses.
  {
    const AlgebraElement s(AlgebraId::QuadraticContact, std::vector<double>{0, 0, 0, 1, 0});
    const AlgebraElement one(AlgebraId::QuadraticContact, std::vector<double>{0, 0, 0, 0, 1});
    const auto Z = bch_quadratic_contact(s, one);
    const double e = std::exp(1.0);
    const AlgebraElement want(AlgebraId::QuadraticContact,
                              std::vector<double>{0, 0, 0, 1, e / (e - 1.0)});
    rep.checks.push_back(single_check("witness/qca_s_one", elem_dist(Z, want), 1e-12));
  }
  {
    const AlgebraElement qp(AlgebraId::QuadraticSymplectic, std::vector<double>{0, 0, 1});
    const AlgebraElement q2(AlgebraId::QuadraticSymplectic, std::vector<double>{1, 0, 0});
    const auto Z = bch_quadratic_symplectic(qp, q2);
    const double e2 = std::exp(2.0);
    const AlgebraElement want(AlgebraId::QuadraticSymplectic,
                              std::vector<double>{2.0 / (e2 - 1.0), 0, 1});
    rep.checks.push_back(single_check("witness/qsa_qp_q2", elem_dist(Z, want), 1e-12));
  }
  {
    const double h = std::acos(-1.0) / 2.0;
    const auto Z = bch_su2c(Su2Triple{h, 0, 0}, Su2Triple{0, h, 0});
    const double resid = std::max({std::abs(Z[0]), std::abs(Z[1]), std::abs(Z[2] - h)});
    rep.checks.push_back(single_check("witness/su2c_quarter_turns", resid, 1e-10));
  }
  {
    const AlgebraElement A(AlgebraId::Heisenberg, std::vector<double>{1, 2, 0});
    const AlgebraElement B(AlgebraId::Heisenberg, std::vector<double>{3, -1, 0});
    const AlgebraElement want(AlgebraId::Heisenberg, std::vector<double>{4, 1, 3.5});
    rep.checks.push_back(
        single_check("witness/heisenberg_example", elem_dist(bch_heisenberg(A, B), want), 1e-14));
  }

  // Identity factor and commuting arguments.
  for (AlgebraId id : kAllAlgebras) {
    rep.checks.push_back(run_trials(
        "identity_and_double/" + algebra_tag(id), 50, 1e-10, cfg, [id](TrialRng& rng) {
          const auto A = random_element(id, rng, -0.8, 0.8);
          const auto zero = AlgebraElement::zero(id);
          const double r1 = elem_dist(bch(A, zero), A);
          const double r2 = elem_dist(bch(zero, A), A);
          const double r3 = elem_dist(bch(A, A), A.scaled(2.0));
          return std::max({r1, r2, r3});
        }));
  }

  // Group inverse identity Z(B,A) = -Z(-A,-B).
  for (AlgebraId id : kAllAlgebras) {
    rep.checks.push_back(run_trials(
        "swap_inverse_identity/" + algebra_tag(id), 100, 1e-10, cfg, [id](TrialRng& rng) {
          for (int attempt = 0; attempt < 64; ++attempt) {
            const auto A = random_element(id, rng, -1.0, 1.0);
            const auto B = random_element(id, rng, -1.0, 1.0);
            try {
              return elem_dist(bch(B, A), bch(A.scaled(-1.0), B.scaled(-1.0)).scaled(-1.0));
            } catch (const branch_error&) {
              continue;
            }
          }
          throw std::runtime_error("no in-branch sample found");
        }));
  }

  // Flow identity, per documented composition order.
  for (AlgebraId id : kRealAlgebras) {
    rep.checks.push_back(run_trials(
        "flow_identity/" + algebra_tag(id), 20, 1e-8, cfg, [id](TrialRng& rng) {
          for (int attempt = 0; attempt < 64; ++attempt) {
            const auto A = random_element(id, rng, -1.0, 1.0);
            const auto B = random_element(id, rng, -1.0, 1.0);
            try {
              const auto Z = bch(A, B);
              return flow_identity_residual(id, Z, A, B, rng);
            } catch (const branch_error&) {
              continue;
            }
          }
          throw std::runtime_error("no in-branch sample found");
        }));
  }

  // su2c flow identity in the 2x2 Pauli realization: exp(Z) = exp(A) exp(B).
  rep.checks.push_back(run_trials("flow_identity/su2c", 20, 1e-8, cfg, [](TrialRng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const auto A = random_element(AlgebraId::Su2Complexified, rng, -1.0, 1.0);
      const auto B = random_element(AlgebraId::Su2Complexified, rng, -1.0, 1.0);
      try {
        const auto Z = bch(A, B);
        const auto lhs = matrix_exp(represent(Z));
        const auto rhs = matrix_exp(represent(A)) * matrix_exp(represent(B));
        return (lhs - rhs).max_abs();
      } catch (const branch_error&) {
        continue;
      }
    }
    throw std::runtime_error("no in-branch sample found");
  }));

  // Conformal reduction: vanishing s/constant parts reduce QCA to QSA with
  // the arguments swapped (the two maps' composition orders are mirrored).
  rep.checks.push_back(run_trials("qca_conformal_reduction", 200, 1e-10, cfg, [](TrialRng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<cdouble> ca{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), 0.0, 0.0};
      std::vector<cdouble> cb{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), 0.0, 0.0};
      const AlgebraElement A5(AlgebraId::QuadraticContact, ca), B5(AlgebraId::QuadraticContact, cb);
      const AlgebraElement A3(AlgebraId::QuadraticSymplectic,
                              std::vector<cdouble>{ca[0], ca[1], ca[2]});
      const AlgebraElement B3(AlgebraId::QuadraticSymplectic,
                              std::vector<cdouble>{cb[0], cb[1], cb[2]});
      try {
        const auto Z5 = bch_quadratic_contact(A5, B5);
        const auto Z3 = bch_quadratic_symplectic(B3, A3);
        const double r = std::max({std::abs(Z5.coeffs[0] - Z3.coeffs[0]),
                                   std::abs(Z5.coeffs[1] - Z3.coeffs[1]),
                                   std::abs(Z5.coeffs[2] - Z3.coeffs[2]),
                                   std::abs(Z5.coeffs[3]), std::abs(Z5.coeffs[4])});
        return r;
      } catch (const branch_error&) {
        continue;
      }
    }
    throw std::runtime_error("no in-branch sample found");
  }));

  // Order-4 series consistency: the closed form minus the truncated series
  // scales like eps^5, so the residual ratio between eps = 0.1 and 0.05 sits
  // near 2^5. The product-order maps (qsa, su2c) match the series with
  // swapped arguments.
  for (AlgebraId id : {AlgebraId::ContactHeisenberg, AlgebraId::QuadraticSymplectic,
                       AlgebraId::QuadraticContact, AlgebraId::Su2Complexified}) {
    const bool product_order =
        id == AlgebraId::QuadraticSymplectic || id == AlgebraId::Su2Complexified;
    rep.checks.push_back(run_trials(
        "series_order4_ratio/" + algebra_tag(id), 20, 0.3 * 32.0, cfg,
        [id, product_order](TrialRng& rng) {
          double sum_hi = 0.0, sum_lo = 0.0;
          for (int k = 0; k < 8; ++k) {
            const auto A = random_element(id, rng, -1.0, 1.0);
            const auto B = random_element(id, rng, -1.0, 1.0);
            for (double eps : {0.1, 0.05}) {
              const auto Ae = A.scaled(eps), Be = B.scaled(eps);
              const auto Z = bch(Ae, Be);
              const auto S = product_order ? dynkin_series(Be, Ae, 4) : dynkin_series(Ae, Be, 4);
              (eps == 0.1 ? sum_hi : sum_lo) += elem_dist(Z, S);
            }
          }
          if (sum_hi < 1e-13) return 0.0;  // effectively exact (nilpotent directions)
          return std::abs(sum_hi / sum_lo - 32.0);
        }));
  }

  // Heisenberg: the series is exact from order 2 on.
  rep.checks.push_back(run_trials("heisenberg_series_saturates", 50, 1e-13, cfg, [](TrialRng& rng) {
    const auto A = random_element(AlgebraId::Heisenberg, rng);
    const auto B = random_element(AlgebraId::Heisenberg, rng);
    const auto z2 = dynkin_series(A, B, 2), z3 = dynkin_series(A, B, 3), z4 = dynkin_series(A, B, 4);
    return std::max(elem_dist(z2, z3), elem_dist(z3, z4));
  }));

  // CHA small-c continuity onto the Heisenberg closed form.
  rep.checks.push_back(run_trials("cha_heisenberg_limit", 100, 1e-8, cfg, [](TrialRng& rng) {
    std::vector<cdouble> a{rng.uniform(-2, 2), rng.uniform(-2, 2), 1e-10, rng.uniform(-2, 2)};
    std::vector<cdouble> b{rng.uniform(-2, 2), rng.uniform(-2, 2), 1e-10, rng.uniform(-2, 2)};
    const AlgebraElement A4(AlgebraId::ContactHeisenberg, a), B4(AlgebraId::ContactHeisenberg, b);
    const AlgebraElement A3(AlgebraId::Heisenberg, std::vector<cdouble>{a[0], a[1], a[3]});
    const AlgebraElement B3(AlgebraId::Heisenberg, std::vector<cdouble>{b[0], b[1], b[3]});
    const auto Z4 = bch_contact_heisenberg(A4, B4);
    const auto Z3 = bch_heisenberg(A3, B3);
    return std::max({std::abs(Z4.coeffs[0] - Z3.coeffs[0]), std::abs(Z4.coeffs[1] - Z3.coeffs[1]),
                     std::abs(Z4.coeffs[3] - Z3.coeffs[2])});
  }));

  // The two oracles share the composed-flow order, so they agree directly
  // wherever both stay on the principal branch (the 5x5 adjoint route of
  // qca and the near-cut su2c samples may reject; those are skipped).
  for (AlgebraId id : kAllAlgebras) {
    rep.checks.push_back(run_trials(
        "oracle_cross_agreement/" + algebra_tag(id), 100, tol, cfg, [id](TrialRng& rng) {
          for (int attempt = 0; attempt < 64; ++attempt) {
            const auto A = random_element(id, rng, -1.0, 1.0);
            const auto B = random_element(id, rng, -1.0, 1.0);
            try {
              return rel_dist(bch_matrix_oracle(A, B), generator_extraction_oracle(A, B));
            } catch (const branch_error&) {
              continue;
            }
          }
          throw std::runtime_error("no in-branch sample found");
        }));
  }
  return rep;
}

SuiteReport verify_representations(const VerifyConfig& cfg) {
  SuiteReport rep{"representations", {}};

  for (AlgebraId id : kAllAlgebras) {
    const auto& r = representation(id);
    const std::size_t n = r.basis_images.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto lhs = represent(bracket(AlgebraElement::basis(id, i), AlgebraElement::basis(id, j)));
        const auto rhs = r.basis_images[i] * r.basis_images[j] - r.basis_images[j] * r.basis_images[i];
        worst = std::max(worst, (lhs - rhs).max_abs());
      }
    rep.checks.push_back(single_check("rep_homomorphism/" + algebra_tag(id), worst, 1e-12));
  }

  // Faithfulness: the Gram matrix of the flattened images is nonsingular.
  for (AlgebraId id : kAllAlgebras) {
    const auto& r = representation(id);
    const std::size_t n = r.basis_images.size();
    SquareMatrix gram(n, false);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        cdouble sum = 0.0;
        for (std::size_t k = 0; k < r.basis_images[i].entries.size(); ++k)
          sum += std::conj(r.basis_images[i].entries[k]) * r.basis_images[j].entries[k];
        gram.at(i, j) = sum;
      }
    double ok = 1.0;
    try {
      (void)matrix_inverse(gram);
    } catch (const std::runtime_error&) {
      ok = 0.0;
    }
    rep.checks.push_back(single_check("rep_faithful/" + algebra_tag(id), 1.0 - ok, 0.5));
  }

  for (AlgebraId id : kAllAlgebras) {
    rep.checks.push_back(run_trials(
        "project_left_inverse/" + algebra_tag(id), 100, 1e-10, cfg, [id](TrialRng& rng) {
          const auto x = random_element(id, rng);
          return elem_dist(project(represent(x), id), x);
        }));
  }

  {
    // CHA q image: ones at (2,3) and (3,4), 1-indexed.
    const auto& r = representation(AlgebraId::ContactHeisenberg);
    const auto& q = r.basis_images[0];
    double resid = std::abs(q.at(1, 2) - 1.0) + std::abs(q.at(2, 3) - 1.0);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (!((i == 1 && j == 2) || (i == 2 && j == 3))) resid += std::abs(q.at(i, j));
    rep.checks.push_back(single_check("spot/cha_q_matrix", resid, 1e-15));

    const auto qe = AlgebraElement::basis(AlgebraId::ContactHeisenberg, 0);
    const auto pe = AlgebraElement::basis(AlgebraId::ContactHeisenberg, 1);
    const auto comm = r.basis_images[0] * r.basis_images[1] - r.basis_images[1] * r.basis_images[0];
    rep.checks.push_back(single_check("spot/cha_qp_commutator",
                                      (represent(bracket(qe, pe)) - comm).max_abs(), 1e-15));
  }

  // matrix_exp / matrix_log primitives.
  {
    SquareMatrix rot(2, true);
    rot.at(0, 1) = 1.0;
    rot.at(1, 0) = -1.0;
    const auto E = matrix_exp(rot);
    const double c = std::cos(1.0), s = std::sin(1.0);
    const double resid = std::max({std::abs(E.at(0, 0) - c), std::abs(E.at(0, 1) - s),
                                   std::abs(E.at(1, 0) + s), std::abs(E.at(1, 1) - c)});
    rep.checks.push_back(single_check("spot/exp_rotation", resid, 1e-13));

    SquareMatrix d(2, true);
    d.at(0, 0) = std::exp(1.0);
    d.at(1, 1) = std::exp(-1.0);
    const auto L = matrix_log(d);
    const double r2 = std::max(std::abs(L.at(0, 0) - 1.0), std::abs(L.at(1, 1) + 1.0));
    rep.checks.push_back(single_check("spot/log_diag", r2, 1e-13));
  }

  rep.checks.push_back(run_trials("exp_inverse_roundtrip", 100, 1e-12, cfg, [](TrialRng& rng) {
    SquareMatrix M(3, true);
    for (auto& v : M.entries) v = rng.uniform(-0.6, 0.6);
    const auto prod = matrix_exp(M) * matrix_exp(M.scaled(-1.0));
    return (prod - SquareMatrix::identity(3)).max_abs();
  }));

  rep.checks.push_back(run_trials("log_exp_roundtrip", 100, 1e-10, cfg, [](TrialRng& rng) {
    SquareMatrix M(3, true);
    for (auto& v : M.entries) v = rng.uniform(-0.5, 0.5);
    const auto L = matrix_log(matrix_exp(M));
    return (L - M).max_abs();
  }));

  return rep;
}

std::vector<SuiteReport> run_verify(const std::string& suite, const VerifyConfig& cfg) {
  std::vector<SuiteReport> out;
  const bool all = suite == "all";
  if (all || suite == "brackets") out.push_back(verify_brackets(cfg));
  if (all || suite == "flows") out.push_back(verify_flows(cfg));
  if (all || suite == "bch") out.push_back(verify_bch(cfg));
  if (all || suite == "representations") out.push_back(verify_representations(cfg));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

std::string render_reports(const std::vector<SuiteReport>& reports) {
  std::string out;
  char buf[256];
  int total_failures = 0;
  for (const auto& rep : reports) {
    out += "suite " + rep.suite + "\n";
    for (const auto& c : rep.checks) {
      std::snprintf(buf, sizeof(buf), "  %-45s trials=%-5d failures=%-3d worst=%.3e tol=%.1e %s\n",
                    c.name.c_str(), c.trials, c.failures, c.worst_residual, c.tolerance,
                    c.passed() ? "pass" : "FAIL");
      out += buf;
      total_failures += c.failures;
    }
  }
  out += total_failures == 0 ? "all checks passed\n" : "FAILURES PRESENT\n";
  return out;
}

}  // namespace flowbch
