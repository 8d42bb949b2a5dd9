#include <doctest.h>

#include <cmath>

#include "flowbch/algebra.hpp"
#include "flowbch/flows.hpp"
#include "flowbch/verify.hpp"

using namespace flowbch;

namespace {

double coeff_dist(const AlgebraElement& x, const AlgebraElement& y) {
  double worst = 0.0;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i)
    worst = std::max(worst, std::abs(x.coeffs[i] - y.coeffs[i]));
  return worst;
}

}  // namespace

TEST_CASE("bracket spot values") {
  const auto q = AlgebraElement::basis(AlgebraId::Heisenberg, 0);
  const auto p = AlgebraElement::basis(AlgebraId::Heisenberg, 1);
  const auto one = AlgebraElement::basis(AlgebraId::Heisenberg, 2);
  CHECK(coeff_dist(bracket(q, p), one) == 0.0);

  const auto one4 = AlgebraElement::basis(AlgebraId::ContactHeisenberg, 3);
  const auto s4 = AlgebraElement::basis(AlgebraId::ContactHeisenberg, 2);
  CHECK(coeff_dist(bracket(one4, s4), one4) == 0.0);
  // derived table: [p,s] = 0, [q,s] = q
  const auto q4 = AlgebraElement::basis(AlgebraId::ContactHeisenberg, 0);
  const auto p4 = AlgebraElement::basis(AlgebraId::ContactHeisenberg, 1);
  CHECK(coeff_dist(bracket(p4, s4), AlgebraElement::zero(AlgebraId::ContactHeisenberg)) == 0.0);
  CHECK(coeff_dist(bracket(q4, s4), q4) == 0.0);

  const auto q2 = AlgebraElement::basis(AlgebraId::QuadraticSymplectic, 0);
  const auto p2 = AlgebraElement::basis(AlgebraId::QuadraticSymplectic, 1);
  const auto qp = AlgebraElement::basis(AlgebraId::QuadraticSymplectic, 2);
  CHECK(coeff_dist(bracket(q2, p2), qp.scaled(4.0)) == 0.0);

  const auto s1 = AlgebraElement::basis(AlgebraId::Su2Complexified, 0);
  const auto s2 = AlgebraElement::basis(AlgebraId::Su2Complexified, 1);
  const auto s3 = AlgebraElement::basis(AlgebraId::Su2Complexified, 2);
  CHECK(coeff_dist(bracket(s1, s2), s3.scaled(2.0)) < 1e-14);
  CHECK(coeff_dist(bracket(s2, s3), s1.scaled(2.0)) < 1e-14);
  CHECK(coeff_dist(bracket(s3, s1), s2.scaled(2.0)) < 1e-14);
}

TEST_CASE("bracket rejects mismatched algebras and is antisymmetric") {
  const auto q = AlgebraElement::basis(AlgebraId::Heisenberg, 0);
  const auto s4 = AlgebraElement::basis(AlgebraId::ContactHeisenberg, 2);
  CHECK_THROWS_AS((void)bracket(q, s4), algebra_mismatch);

  TrialRng rng(3, 0);
  for (int t = 0; t < 50; ++t) {
    std::vector<cdouble> c(5), d(5);
    for (auto& v : c) v = rng.uniform(-2, 2);
    for (auto& v : d) v = rng.uniform(-2, 2);
    const AlgebraElement x(AlgebraId::QuadraticContact, c), y(AlgebraId::QuadraticContact, d);
    CHECK(coeff_dist(bracket(x, y), bracket(y, x).scaled(-1.0)) < 1e-13);
    CHECK(coeff_dist(bracket(x, x), AlgebraElement::zero(AlgebraId::QuadraticContact)) < 1e-13);
  }
}

TEST_CASE("jacobi identity on all basis triples") {
  for (AlgebraId id : {AlgebraId::Heisenberg, AlgebraId::ContactHeisenberg,
                       AlgebraId::QuadraticSymplectic, AlgebraId::QuadraticContact,
                       AlgebraId::Su2Complexified}) {
    const std::size_t n = basis_dim(id);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          const auto ei = AlgebraElement::basis(id, i);
          const auto ej = AlgebraElement::basis(id, j);
          const auto ek = AlgebraElement::basis(id, k);
          const auto cyc = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                           bracket(ek, bracket(ei, ej));
          CHECK(coeff_dist(cyc, AlgebraElement::zero(id)) < 1e-12);
        }
  }
}

TEST_CASE("structure constants match the pointwise coordinate bracket") {
  for (AlgebraId id : {AlgebraId::Heisenberg, AlgebraId::ContactHeisenberg,
                       AlgebraId::QuadraticSymplectic, AlgebraId::QuadraticContact}) {
    const std::size_t n = basis_dim(id);
    for (int trial = 0; trial < 100; ++trial) {
      TrialRng rng(11, trial);
      const ContactState x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const auto ei = AlgebraElement::basis(id, i), ej = AlgebraElement::basis(id, j);
          const double direct = jacobi_bracket_at(ei, ej, x);
          const double via_table = bracket(ei, ej).to_poly().eval(x.q, x.p, x.s).real();
          CHECK(std::abs(direct - via_table) < 1e-10);
        }
    }
  }
}

TEST_CASE("adjoint matrix columns are brackets with basis vectors") {
  // CHA element 2q + 3p + 4s + 1: ad_x e_q = -4q - 3, ad_x e_p = 2, ad_x e_s = 2q + 1.
  const AlgebraElement x(AlgebraId::ContactHeisenberg, std::vector<double>{2, 3, 4, 1});
  const SquareMatrix m = adjoint_matrix(x);
  const AlgebraElement cols[4] = {
      bracket(x, AlgebraElement::basis(AlgebraId::ContactHeisenberg, 0)),
      bracket(x, AlgebraElement::basis(AlgebraId::ContactHeisenberg, 1)),
      bracket(x, AlgebraElement::basis(AlgebraId::ContactHeisenberg, 2)),
      bracket(x, AlgebraElement::basis(AlgebraId::ContactHeisenberg, 3))};
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) CHECK(m.at(k, j) == cols[j].coeffs[k]);
  CHECK(m.at(0, 0).real() == -4.0);      // {x,q} q-part = -c
  CHECK(m.at(3, 0).real() == -3.0);      // {x,q} 1-part = -b
  CHECK(m.at(3, 1).real() == 2.0);       // {x,p} 1-part = a
  CHECK(m.at(0, 2).real() == 2.0);       // {x,s} q-part = a
  CHECK(m.at(3, 2).real() == 1.0);       // {x,s} 1-part = z

  CHECK(adjoint_matrix(AlgebraElement::zero(AlgebraId::ContactHeisenberg)).max_abs() == 0.0);

  // QSA: ad_qp = diag(-2, 2, 0) on (q^2, p^2, qp).
  const auto qp = AlgebraElement::basis(AlgebraId::QuadraticSymplectic, 2);
  const SquareMatrix aq = adjoint_matrix(qp);
  CHECK(aq.at(0, 0).real() == -2.0);
  CHECK(aq.at(1, 1).real() == 2.0);
  CHECK(aq.at(2, 2).real() == 0.0);
  double off = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) off += std::abs(aq.at(i, j));
  CHECK(off == 0.0);
}

TEST_CASE("adjoint is a bracket homomorphism") {
  for (AlgebraId id : {AlgebraId::Heisenberg, AlgebraId::ContactHeisenberg,
                       AlgebraId::QuadraticSymplectic, AlgebraId::QuadraticContact,
                       AlgebraId::Su2Complexified}) {
    for (int trial = 0; trial < 100; ++trial) {
      TrialRng rng(13, trial);
      std::vector<cdouble> c(basis_dim(id)), d(basis_dim(id));
      for (auto& v : c) v = rng.uniform(-2, 2);
      for (auto& v : d) v = rng.uniform(-2, 2);
      const AlgebraElement x(id, c), y(id, d);
      const auto lhs = adjoint_matrix(bracket(x, y));
      const auto rhs = adjoint_matrix(x) * adjoint_matrix(y) - adjoint_matrix(y) * adjoint_matrix(x);
      CHECK((lhs - rhs).max_abs() < 1e-12);
    }
  }
}

TEST_CASE("killing form values and invariance") {
  const auto qp = AlgebraElement::basis(AlgebraId::QuadraticSymplectic, 2);
  CHECK(killing_form(qp, qp).real() == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(killing_form(qp, AlgebraElement::zero(AlgebraId::QuadraticSymplectic)) == cdouble{});

  TrialRng rng(17, 0);
  for (int t = 0; t < 100; ++t) {
    std::vector<cdouble> c(5), d(5), e(5);
    for (auto& v : c) v = rng.uniform(-2, 2);
    for (auto& v : d) v = rng.uniform(-2, 2);
    for (auto& v : e) v = rng.uniform(-2, 2);
    const AlgebraElement x(AlgebraId::QuadraticContact, c), y(AlgebraId::QuadraticContact, d),
        z(AlgebraId::QuadraticContact, e);
    CHECK(std::abs(killing_form(x, y) - killing_form(y, x)) < 1e-10);
    CHECK(std::abs(killing_form(bracket(z, x), y) + killing_form(x, bracket(z, y))) < 1e-10);
  }
  // Heisenberg is nilpotent: its killing form vanishes identically.
  const auto q = AlgebraElement::basis(AlgebraId::Heisenberg, 0);
  const auto p = AlgebraElement::basis(AlgebraId::Heisenberg, 1);
  CHECK(killing_form(q, p) == cdouble{});
}

TEST_CASE("trace distance") {
  const auto qp5 = AlgebraElement::basis(AlgebraId::QuadraticContact, 2);
  const auto zero5 = AlgebraElement::zero(AlgebraId::QuadraticContact);
  CHECK(trace_distance(qp5, zero5) == doctest::Approx(64.0).epsilon(1e-14));
  CHECK(trace_distance(qp5, qp5) == 0.0);
  TrialRng rng(19, 0);
  for (int t = 0; t < 50; ++t) {
    std::vector<cdouble> c(5), d(5);
    for (auto& v : c) v = rng.uniform(-2, 2);
    for (auto& v : d) v = rng.uniform(-2, 2);
    const AlgebraElement x(AlgebraId::QuadraticContact, c), y(AlgebraId::QuadraticContact, d);
    CHECK(trace_distance(x, y) == doctest::Approx(trace_distance(y, x)).epsilon(1e-12));
    CHECK(trace_distance(x, y) >= 0.0);
  }
}

TEST_CASE("element construction guards") {
  CHECK_THROWS(AlgebraElement(AlgebraId::Heisenberg, std::vector<double>{1, 2}));
  CHECK_THROWS(AlgebraElement(AlgebraId::Heisenberg,
                              std::vector<double>{1, std::nan(""), 0}));
  CHECK_THROWS(AlgebraElement(AlgebraId::Heisenberg, std::vector<cdouble>{1.0, cdouble{0, 1}, 0.0}));
  // complex coefficients are the su2c scalar field
  CHECK_NOTHROW(AlgebraElement(AlgebraId::Su2Complexified,
                               std::vector<cdouble>{cdouble{0, 1}, 0.0, 0.0}));
}

TEST_CASE("leibniz anomaly of the jacobi bracket") {
  // {f, gh} = g{f,h} + h{f,g} + gh {1,f}; the correction is the Reeb
  // derivative of f ({1,f} = df/ds), nonzero exactly when f depends on s.
  TrialRng rng(23, 0);
  for (int t = 0; t < 100; ++t) {
    const Poly f = basis_poly(AlgebraId::QuadraticContact, std::size_t(rng.uniform_int(0, 4)));
    const Poly g = basis_poly(AlgebraId::QuadraticContact, std::size_t(rng.uniform_int(0, 4)));
    const Poly h = basis_poly(AlgebraId::QuadraticContact, std::size_t(rng.uniform_int(0, 4)));
    const Poly lhs = jacobi_bracket(f, g * h);
    const Poly rhs = g * jacobi_bracket(f, h) + h * jacobi_bracket(f, g) +
                     g * h * jacobi_bracket(Poly::constant(1.0), f);
    const double q = rng.uniform(-1.5, 1.5), p = rng.uniform(-1.5, 1.5), s = rng.uniform(-1.5, 1.5);
    CHECK(std::abs((lhs - rhs).eval(q, p, s)) < 1e-10);
  }
  // the paper-facing witness: f = g = h = s
  const Poly s = Poly::monomial(0, 0, 1);
  const Poly diff = jacobi_bracket(s, s * s) -
                    (s * jacobi_bracket(s, s) + s * jacobi_bracket(s, s) +
                     s * s * jacobi_bracket(Poly::constant(1.0), s));
  CHECK(diff.empty_within(1e-15));
}
