// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "flowbch/bch.hpp"
#include "flowbch/flows.hpp"
#include "flowbch/oracle.hpp"
#include "flowbch/splitting.hpp"
#include "flowbch/verify.hpp"

using namespace flowbch;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool pass, const std::string& detail) {
  std::printf("criterion %2d %-4s %s (%s)\n", criterion, pass ? "PASS" : "FAIL", what.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

double coeff_dist(const AlgebraElement& x, const AlgebraElement& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    worst = std::max(worst, std::abs(x.coeffs[i] - y.coeffs[i]));
  return worst;
}

double coeff_rel_dist(const AlgebraElement& x, const AlgebraElement& y) {
  double scale = 1.0;
  for (const auto& v : x.coeffs) scale = std::max(scale, std::abs(v));
  return coeff_dist(x, y) / scale;
}

AlgebraElement random_element(AlgebraId id, TrialRng& rng, double lo = -2.0, double hi = 2.0) {
  std::vector<cdouble> c(basis_dim(id));
  for (auto& v : c) v = rng.uniform(lo, hi);
  return AlgebraElement(id, std::move(c));
}

double state_dist(const ContactState& a, const ContactState& b) {
  return std::max({std::abs(a.q - b.q), std::abs(a.p - b.p), std::abs(a.s - b.s)});
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

char buf[256];

void criterion1() {
  Timer timer;
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    TrialRng rng(1001, t);
    const auto A = random_element(AlgebraId::Heisenberg, rng);
    const auto B = random_element(AlgebraId::Heisenberg, rng);
    worst = std::max(worst, coeff_dist(bch_heisenberg(A, B), dynkin_series(A, B, 2)));
  }
  const double secs = timer.seconds();
  std::snprintf(buf, sizeof(buf), "worst=%.2e tol=1e-12, %.2fs<1s", worst, secs);
  report(1, "heisenberg closed form = order-2 series on 1000 pairs", worst <= 1e-12 && secs < 1.0,
         buf);
}

void criterion2() {
  Timer timer;
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    TrialRng rng(1002, t);
    const auto A = random_element(AlgebraId::ContactHeisenberg, rng);
    const auto B = random_element(AlgebraId::ContactHeisenberg, rng);
    worst = std::max(worst, coeff_rel_dist(bch_contact_heisenberg(A, B), bch_matrix_oracle(A, B)));
  }
  const double secs = timer.seconds();
  std::snprintf(buf, sizeof(buf), "worst=%.2e tol=1e-9, %.2fs<5s", worst, secs);
  report(2, "cha closed form vs 4x4 matrix oracle on 1000 pairs", worst <= 1e-9 && secs < 5.0, buf);
}

void criterion3() {
  double worst = 0.0;
  int elliptic = 0, hyperbolic = 0, total = 0;
  for (int t = 0; total < 1000 && t < 100000; ++t) {
    TrialRng rng(1003, t);
    const auto A = random_element(AlgebraId::QuadraticSymplectic, rng);
    const auto B = random_element(AlgebraId::QuadraticSymplectic, rng);
    const auto br = qsa_branch(A, B);
    if (br.regime == BranchRegime::out_of_image) continue;
    // Balance the regimes so both accumulate at least 200 samples.
    const bool want_elliptic = elliptic < hyperbolic;
    if (total > 600 && want_elliptic != (br.regime == BranchRegime::elliptic)) continue;
    AlgebraElement closed = AlgebraElement::zero(AlgebraId::QuadraticSymplectic);
    try {
      closed = bch_quadratic_symplectic(A, B);
    } catch (const branch_error&) {
      continue;
    }
    worst = std::max(worst, coeff_rel_dist(closed, bch_matrix_oracle(B, A)));
    ++total;
    if (br.regime == BranchRegime::elliptic) ++elliptic;
    if (br.regime == BranchRegime::hyperbolic) ++hyperbolic;
  }

  const AlgebraElement qp(AlgebraId::QuadraticSymplectic, std::vector<double>{0, 0, 1});
  const AlgebraElement q2(AlgebraId::QuadraticSymplectic, std::vector<double>{1, 0, 0});
  const auto Z = bch_quadratic_symplectic(qp, q2);
  const AlgebraElement want(AlgebraId::QuadraticSymplectic,
                            std::vector<double>{2.0 / (std::exp(2.0) - 1.0), 0.0, 1.0});
  const double spot = coeff_dist(Z, want);

  const bool pass =
      total == 1000 && elliptic >= 200 && hyperbolic >= 200 && worst <= 1e-9 && spot <= 1e-12;
  std::snprintf(buf, sizeof(buf), "worst=%.2e tol=1e-9, elliptic=%d hyperbolic=%d, spot=%.2e",
                worst, elliptic, hyperbolic, spot);
  report(3, "qsa closed form vs 2x2 exp/log oracle + spot Z(qp,q2)", pass, buf);
}

void criterion4() {
  double worst = 0.0;
  int total = 0;
  for (int t = 0; total < 1000 && t < 100000; ++t) {
    TrialRng rng(1004, t);
    const auto A = random_element(AlgebraId::QuadraticContact, rng);
    const auto B = random_element(AlgebraId::QuadraticContact, rng);
    try {
      const auto closed = bch_quadratic_contact(A, B);
      worst = std::max(worst, coeff_rel_dist(closed, generator_extraction_oracle(A, B)));
      ++total;
    } catch (const branch_error&) {
    }
  }

  const AlgebraElement s(AlgebraId::QuadraticContact, std::vector<double>{0, 0, 0, 1, 0});
  const AlgebraElement one(AlgebraId::QuadraticContact, std::vector<double>{0, 0, 0, 0, 1});
  const double e = std::exp(1.0);
  const AlgebraElement witness_want(AlgebraId::QuadraticContact,
                                    std::vector<double>{0, 0, 0, 1, e / (e - 1.0)});
  const double witness = coeff_dist(bch_quadratic_contact(s, one), witness_want);

  double reduction = 0.0;
  int reduction_total = 0;
  for (int t = 0; reduction_total < 300 && t < 30000; ++t) {
    TrialRng rng(1014, t);
    std::vector<cdouble> a{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), 0.0, 0.0};
    std::vector<cdouble> b{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), 0.0, 0.0};
    try {
      const auto Z5 = bch_quadratic_contact(AlgebraElement(AlgebraId::QuadraticContact, a),
                                            AlgebraElement(AlgebraId::QuadraticContact, b));
      const auto Z3 = bch_quadratic_symplectic(
          AlgebraElement(AlgebraId::QuadraticSymplectic, std::vector<cdouble>{b[0], b[1], b[2]}),
          AlgebraElement(AlgebraId::QuadraticSymplectic, std::vector<cdouble>{a[0], a[1], a[2]}));
      for (int i = 0; i < 3; ++i)
        reduction = std::max(reduction, std::abs(Z5.coeffs[i] - Z3.coeffs[i]));
      reduction = std::max({reduction, std::abs(Z5.coeffs[3]), std::abs(Z5.coeffs[4])});
      ++reduction_total;
    } catch (const branch_error&) {
    }
  }

  const bool pass = total == 1000 && worst <= 1e-9 && witness <= 1e-12 &&
                    reduction_total == 300 && reduction <= 1e-10;
  std::snprintf(buf, sizeof(buf),
                "worst=%.2e tol=1e-9, witness=%.2e tol=1e-12, conformal=%.2e tol=1e-10", worst,
                witness, reduction);
  report(4, "qca closed form vs flow-extraction oracle + Z(s,1) witness", pass, buf);
}

void criterion5() {
  double worst = 0.0, imag_resid = 0.0;
  int total = 0;
  for (int t = 0; total < 1000 && t < 100000; ++t) {
    TrialRng rng(1005, t);
    const auto A = random_element(AlgebraId::Su2Complexified, rng, -1.2, 1.2);
    const auto B = random_element(AlgebraId::Su2Complexified, rng, -1.2, 1.2);
    try {
      const auto closed = bch(A, B);
      worst = std::max(worst, coeff_rel_dist(closed, bch_matrix_oracle(B, A)));
      for (const auto& c : closed.coeffs) imag_resid = std::max(imag_resid, std::abs(c.imag()));
      ++total;
    } catch (const branch_error&) {
    }
  }

  const double h = std::acos(-1.0) / 2.0;
  const auto Zs = bch_su2c(Su2Triple{h, 0, 0}, Su2Triple{0, h, 0});
  const double spot = std::max({std::abs(Zs[0]), std::abs(Zs[1]), std::abs(Zs[2] - h)});

  const bool pass = total == 1000 && worst <= 1e-9 && spot <= 1e-10 && imag_resid <= 1e-10;
  std::snprintf(buf, sizeof(buf), "worst=%.2e tol=1e-9, spot=%.2e tol=1e-10, im=%.2e", worst, spot,
                imag_resid);
  report(5, "su2c closed form vs complex exp/log oracle + quarter-turn spot", pass, buf);
}

void criterion6() {
  double worst = 0.0;
  // Contact algebras compose "A first"; the qsa/su2c maps are product-order.
  for (AlgebraId id : {AlgebraId::Heisenberg, AlgebraId::ContactHeisenberg,
                       AlgebraId::QuadraticContact}) {
    int done = 0;
    for (int t = 0; done < 20 && t < 2000; ++t) {
      TrialRng rng(1006 + int(id), t);
      const auto A = random_element(id, rng, -1.0, 1.0);
      const auto B = random_element(id, rng, -1.0, 1.0);
      try {
        const auto Z = bch(A, B);
        const ContactState x0{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        worst = std::max(worst, state_dist(exact_flow(Z, x0, 1.0),
                                           exact_flow(B, exact_flow(A, x0, 1.0), 1.0)));
        ++done;
      } catch (const branch_error&) {
      }
    }
  }
  {
    int done = 0;
    for (int t = 0; done < 20 && t < 2000; ++t) {
      TrialRng rng(1016, t);
      const auto A = random_element(AlgebraId::QuadraticSymplectic, rng, -1.0, 1.0);
      const auto B = random_element(AlgebraId::QuadraticSymplectic, rng, -1.0, 1.0);
      try {
        const auto Z = bch_quadratic_symplectic(A, B);
        const SymplecticState x0{rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const auto lhs = exact_flow(Z, x0, 1.0);
        const auto rhs = exact_flow(A, exact_flow(B, x0, 1.0), 1.0);
        worst = std::max({worst, std::abs(lhs.q - rhs.q), std::abs(lhs.p - rhs.p)});
        ++done;
      } catch (const branch_error&) {
      }
    }
  }
  {
    // su2c flows act on the complexified plane; compare the 2x2 maps.
    int done = 0;
    for (int t = 0; done < 20 && t < 2000; ++t) {
      TrialRng rng(1026, t);
      const auto A = random_element(AlgebraId::Su2Complexified, rng, -1.0, 1.0);
      const auto B = random_element(AlgebraId::Su2Complexified, rng, -1.0, 1.0);
      try {
        const auto Z = bch(A, B);
        const auto lhs = matrix_exp(represent(Z));
        const auto rhs = matrix_exp(represent(A)) * matrix_exp(represent(B));
        worst = std::max(worst, (lhs - rhs).max_abs());
        ++done;
      } catch (const branch_error&) {
      }
    }
  }
  std::snprintf(buf, sizeof(buf), "worst=%.2e tol=1e-8", worst);
  report(6, "flow identity: exact_flow(Z) equals the composed flows", worst <= 1e-8, buf);
}

void criterion7() {
  double worst = 0.0, dworst = 0.0;
  TrialRng rng(1007, 0);
  for (Permutation p : all_permutations())
    for (double gamma : {0.5, 2.0, 4.0})
      for (double tau : {0.05, 0.1, 0.2}) {
        const IntegratorSpec spec{p, tau, OscillatorParams{1.0, 1.0, gamma}, 1};
        const AlgebraElement H = modified_hamiltonian(spec);
        dworst = std::max(dworst, std::abs(H.real_coeff(3) - gamma));
        for (int t = 0; t < 4; ++t) {
          const ContactState x0{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
          worst = std::max(worst, state_dist(exact_flow(H, x0, tau), splitting_map(spec, x0)));
        }
      }
  std::snprintf(buf, sizeof(buf), "worst=%.2e tol=1e-10, |d-gamma|=%.1e (exact)", worst, dworst);
  report(7, "modified-hamiltonian defining property, 6 perms x 3 gammas x 3 taus",
         worst <= 1e-10 && dworst == 0.0, buf);
}

void criterion8() {
  double worst_resid = 0.0, worst_ratio = 0.0;
  for (double tau : {0.1, 0.5, 1.0, 1.9}) {
    const auto r = ho_modified_hamiltonian_symplectic(tau);
    worst_resid = std::max(worst_resid, r.defining_residual);
    worst_ratio = std::max(worst_ratio, std::abs(r.omega_ratio - 0.5));
  }
  std::snprintf(buf, sizeof(buf), "resid=%.2e tol=1e-10, |a/Omega-1/2|=%.2e tol=1e-9", worst_resid,
                worst_ratio);
  report(8, "oscillator worked example: defining property and Omega ratio",
         worst_resid <= 1e-10 && worst_ratio <= 1e-9, buf);
}

void criterion9() {
  Timer timer;
  const auto grid = log_tau_grid(0.01, 1.0, 200);
  const std::vector<double> gammas{0.5, 2.0, 4.0};
  const auto rows = distance_sweep(gammas, grid, all_permutations(), true);
  const double secs = timer.seconds();

  bool monotone = true;
  for (double g : gammas)
    for (Permutation p : all_permutations()) {
      double prev = -1.0;
      for (const auto& r : rows) {
        if (r.gamma != g || r.permutation != p || r.tau > 0.1 || r.status != "ok") continue;
        if (prev >= 0.0 && prev > r.distance) monotone = false;
        prev = r.distance;
      }
    }

  int tcv_wins_2 = 0, tcv_wins_4 = 0, pts = int(grid.size());
  for (double g : {2.0, 4.0})
    for (double tau : grid) {
      const SweepRecord* best = nullptr;
      for (const auto& r : rows) {
        if (r.gamma != g || r.tau != tau || r.status != "ok") continue;
        if (!best || r.distance < best->distance) best = &r;
      }
      if (best && best->permutation == Permutation::TCV) (g == 2.0 ? tcv_wins_2 : tcv_wins_4)++;
    }

  const bool pass = rows.size() == 3600 && monotone && tcv_wins_2 >= int(0.6 * pts) &&
                    tcv_wins_4 >= int(0.6 * pts) && secs < 30.0;
  std::snprintf(buf, sizeof(buf), "rows=%zu monotone=%d tcv@2=%d/%d tcv@4=%d/%d, %.2fs<30s",
                rows.size(), int(monotone), tcv_wins_2, pts, tcv_wins_4, pts, secs);
  report(9, "figure sweep: vanishing-tau limit and tcv minimality", pass, buf);
}

void criterion10() {
  Timer timer;
  VerifyConfig cfg;  // defaults: seed 42, tolerance 1e-9, 1000 trials
  const auto reports = run_verify("all", cfg);
  const double secs = timer.seconds();
  bool pass = secs < 60.0;
  int failures = 0;
  for (const auto& rep : reports)
    for (const auto& c : rep.checks) failures += c.failures;
  if (failures > 0) pass = false;
  std::snprintf(buf, sizeof(buf), "check failures=%d, %.1fs<60s", failures, secs);
  report(10, "verify --suite all property suites", pass, buf);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures == 0)
    std::printf("acceptance: all 10 criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
