#include "flowbch/algebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace flowbch {

std::size_t basis_dim(AlgebraId id) {
  switch (id) {
    case AlgebraId::Heisenberg: return 3;
    case AlgebraId::ContactHeisenberg: return 4;
    case AlgebraId::QuadraticSymplectic: return 3;
    case AlgebraId::QuadraticContact: return 5;
    case AlgebraId::Su2Complexified: return 3;
  }
  throw std::logic_error("unknown algebra");
}

bool is_contact(AlgebraId id) {
  return id == AlgebraId::Heisenberg || id == AlgebraId::ContactHeisenberg ||
         id == AlgebraId::QuadraticContact;
}

bool is_complex(AlgebraId id) { return id == AlgebraId::Su2Complexified; }

std::string algebra_tag(AlgebraId id) {
  switch (id) {
    case AlgebraId::Heisenberg: return "heisenberg";
    case AlgebraId::ContactHeisenberg: return "cha";
    case AlgebraId::QuadraticSymplectic: return "qsa";
    case AlgebraId::QuadraticContact: return "qca";
    case AlgebraId::Su2Complexified: return "su2c";
  }
  throw std::logic_error("unknown algebra");
}

AlgebraId algebra_from_tag(const std::string& tag) {
  if (tag == "heisenberg") return AlgebraId::Heisenberg;
  if (tag == "cha") return AlgebraId::ContactHeisenberg;
  if (tag == "qsa") return AlgebraId::QuadraticSymplectic;
  if (tag == "qca") return AlgebraId::QuadraticContact;
  if (tag == "su2c") return AlgebraId::Su2Complexified;
  throw std::invalid_argument("unknown algebra tag: " + tag);
}

Poly basis_poly(AlgebraId id, std::size_t i) {
  const cdouble I{0.0, 1.0};
  switch (id) {
    case AlgebraId::Heisenberg: {
      const Poly b[] = {Poly::monomial(1, 0, 0), Poly::monomial(0, 1, 0), Poly::constant(1.0)};
      return b[i];
    }
    case AlgebraId::ContactHeisenberg: {
      const Poly b[] = {Poly::monomial(1, 0, 0), Poly::monomial(0, 1, 0), Poly::monomial(0, 0, 1),
                        Poly::constant(1.0)};
      return b[i];
    }
    case AlgebraId::QuadraticSymplectic: {
      const Poly b[] = {Poly::monomial(2, 0, 0), Poly::monomial(0, 2, 0), Poly::monomial(1, 1, 0)};
      return b[i];
    }
    case AlgebraId::QuadraticContact: {
      const Poly b[] = {Poly::monomial(2, 0, 0), Poly::monomial(0, 2, 0), Poly::monomial(1, 1, 0),
                        Poly::monomial(0, 0, 1), Poly::constant(1.0)};
      return b[i];
    }
    case AlgebraId::Su2Complexified: {
      // Sigma1 = i(p^2 - q^2)/2, Sigma2 = -(p^2 + q^2)/2, Sigma3 = i qp.
      const Poly q2 = Poly::monomial(2, 0, 0), p2 = Poly::monomial(0, 2, 0), qp = Poly::monomial(1, 1, 0);
      const Poly b[] = {(p2 - q2).scaled(0.5 * I), (p2 + q2).scaled(-0.5), qp.scaled(I)};
      return b[i];
    }
  }
  throw std::logic_error("unknown algebra");
}

AlgebraElement::AlgebraElement(AlgebraId id, std::vector<cdouble> c) : algebra(id), coeffs(std::move(c)) {
  if (coeffs.size() != basis_dim(id)) throw std::invalid_argument("coefficient count does not match basis");
  for (const auto& v : coeffs)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("non-finite coefficient");
  if (!is_complex(id))
    for (const auto& v : coeffs)
      if (v.imag() != 0.0) throw std::invalid_argument("complex coefficient in a real algebra");
}

AlgebraElement::AlgebraElement(AlgebraId id, const std::vector<double>& c)
    : AlgebraElement(id, std::vector<cdouble>(c.begin(), c.end())) {}

AlgebraElement AlgebraElement::zero(AlgebraId id) {
  return AlgebraElement(id, std::vector<cdouble>(basis_dim(id), 0.0));
}

AlgebraElement AlgebraElement::basis(AlgebraId id, std::size_t i) {
  auto e = zero(id);
  e.coeffs[i] = 1.0;
  return e;
}

double AlgebraElement::real_coeff(std::size_t i) const { return coeffs[i].real(); }

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (algebra != o.algebra) throw algebra_mismatch("algebra mismatch");
  auto r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  if (algebra != o.algebra) throw algebra_mismatch("algebra mismatch");
  auto r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

AlgebraElement AlgebraElement::scaled(cdouble c) const {
  auto r = *this;
  for (auto& v : r.coeffs) v *= c;
  if (!is_complex(algebra))
    for (auto& v : r.coeffs) v = cdouble(v.real(), 0.0);
  return r;
}

Poly AlgebraElement::to_poly() const {
  Poly sum;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    sum = sum + basis_poly(algebra, i).scaled(coeffs[i]);
  return sum;
}

SquareMatrix::SquareMatrix(std::size_t d, bool real) : dim(d), entries(d * d, 0.0), real_valued(real) {}

SquareMatrix SquareMatrix::identity(std::size_t d, bool real) {
  SquareMatrix m(d, real);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

SquareMatrix SquareMatrix::operator+(const SquareMatrix& o) const {
  SquareMatrix r = *this;
  r.real_valued = real_valued && o.real_valued;
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] += o.entries[i];
  return r;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
  SquareMatrix r = *this;
  r.real_valued = real_valued && o.real_valued;
  for (std::size_t i = 0; i < entries.size(); ++i) r.entries[i] -= o.entries[i];
  return r;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
  SquareMatrix r(dim, real_valued && o.real_valued);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) {
      const cdouble a = at(i, k);
      if (a == cdouble{}) continue;
      for (std::size_t j = 0; j < dim; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

SquareMatrix SquareMatrix::scaled(cdouble c) const {
  SquareMatrix r = *this;
  r.real_valued = real_valued && c.imag() == 0.0;
  for (auto& v : r.entries) v *= c;
  return r;
}

cdouble SquareMatrix::trace() const {
  cdouble t = 0.0;
  for (std::size_t i = 0; i < dim; ++i) t += at(i, i);
  return t;
}

double SquareMatrix::norm1() const {
  double best = 0.0;
  for (std::size_t j = 0; j < dim; ++j) {
    double col = 0.0;
    for (std::size_t i = 0; i < dim; ++i) col += std::abs(at(i, j));
    best = std::max(best, col);
  }
  return best;
}

double SquareMatrix::max_abs() const {
  double best = 0.0;
  for (const auto& v : entries) best = std::max(best, std::abs(v));
  return best;
}

bool SquareMatrix::finite() const {
  for (const auto& v : entries)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

cdouble StructureTable::at(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = basis_dim(algebra);
  return c[(i * n + j) * n + k];
}

namespace {

// Expands a bracket of basis polynomials back over the basis. Every bracket
// of basis elements must land in the span exactly; anything left over is a
// table bug, not a numerical issue.
std::vector<cdouble> expand_in_basis(AlgebraId id, const Poly& poly) {
  const std::size_t n = basis_dim(id);
  std::vector<cdouble> out(n, 0.0);
  Poly rest = poly;
  if (id == AlgebraId::Su2Complexified) {
    // Solve cq2 = -i mu1/2 - mu2/2, cp2 = i mu1/2 - mu2/2, cqp = i mu3.
    const cdouble I{0.0, 1.0};
    const cdouble cq2 = rest.coeff(2, 0, 0), cp2 = rest.coeff(0, 2, 0), cqp = rest.coeff(1, 1, 0);
    out[0] = (cp2 - cq2) / I;
    out[1] = -(cq2 + cp2);
    out[2] = cqp / I;
    for (std::size_t i = 0; i < n; ++i) rest = rest - basis_poly(id, i).scaled(out[i]);
  } else {
    struct Slot { int qe, pe, se; };
    auto slot_of = [&](std::size_t i) -> Slot {
      const auto& t = basis_poly(id, i).terms();
      const auto& k = t.begin()->first;
      return {std::get<0>(k), std::get<1>(k), std::get<2>(k)};
    };
    for (std::size_t i = 0; i < n; ++i) {
      const Slot sl = slot_of(i);
      out[i] = rest.coeff(sl.qe, sl.pe, sl.se);
      rest = rest - basis_poly(id, i).scaled(out[i]);
    }
  }
  if (!rest.empty_within(1e-12)) throw std::logic_error("bracket left the algebra span");
  return out;
}

StructureTable derive_table(AlgebraId id) {
  const std::size_t n = basis_dim(id);
  StructureTable t{id, std::vector<cdouble>(n * n * n, 0.0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Poly br = jacobi_bracket(basis_poly(id, i), basis_poly(id, j));
      const auto coeffs = expand_in_basis(id, br);
      for (std::size_t k = 0; k < n; ++k) t.c[(i * n + j) * n + k] = coeffs[k];
    }
  return t;
}

}  // namespace

const StructureTable& structure_table(AlgebraId id) {
  static const StructureTable heis = derive_table(AlgebraId::Heisenberg);
  static const StructureTable cha = derive_table(AlgebraId::ContactHeisenberg);
  static const StructureTable qsa = derive_table(AlgebraId::QuadraticSymplectic);
  static const StructureTable qca = derive_table(AlgebraId::QuadraticContact);
  static const StructureTable su2c = derive_table(AlgebraId::Su2Complexified);
  switch (id) {
    case AlgebraId::Heisenberg: return heis;
    case AlgebraId::ContactHeisenberg: return cha;
    case AlgebraId::QuadraticSymplectic: return qsa;
    case AlgebraId::QuadraticContact: return qca;
    case AlgebraId::Su2Complexified: return su2c;
  }
  throw std::logic_error("unknown algebra");
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra != y.algebra) throw algebra_mismatch("algebra mismatch");
  const auto& t = structure_table(x.algebra);
  const std::size_t n = basis_dim(x.algebra);
  AlgebraElement r = AlgebraElement::zero(x.algebra);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeffs[i] == cdouble{}) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coeffs[j] == cdouble{}) continue;
      const cdouble f = x.coeffs[i] * y.coeffs[j];
      for (std::size_t k = 0; k < n; ++k) r.coeffs[k] += f * t.at(i, j, k);
    }
  }
  if (!is_complex(x.algebra))
    for (auto& v : r.coeffs) v = cdouble(v.real(), 0.0);
  return r;
}

SquareMatrix adjoint_matrix(const AlgebraElement& x) {
  const auto& t = structure_table(x.algebra);
  const std::size_t n = basis_dim(x.algebra);
  SquareMatrix m(n, !is_complex(x.algebra));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      cdouble v = 0.0;
      for (std::size_t i = 0; i < n; ++i) v += x.coeffs[i] * t.at(i, j, k);
      m.at(k, j) = v;
    }
  return m;
}

cdouble killing_form(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra != y.algebra) throw algebra_mismatch("algebra mismatch");
  return (adjoint_matrix(x) * adjoint_matrix(y)).trace();
}

double trace_distance(const AlgebraElement& x, const AlgebraElement& y) {
  const cdouble b = killing_form(x - y, x - y);
  return std::norm(b);
}

}  // namespace flowbch
