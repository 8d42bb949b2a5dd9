#include "flowbch/poly.hpp"

#include <cmath>

namespace flowbch {

Poly Poly::monomial(int qe, int pe, int se, Coeff c) {
  Poly r;
  r.add_term({qe, pe, se}, c);
  return r;
}

Poly Poly::constant(Coeff c) { return monomial(0, 0, 0, c); }

void Poly::add_term(const Key& k, Coeff c) {
  if (c == Coeff{}) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Coeff{}) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term({std::get<0>(ka) + std::get<0>(kb), std::get<1>(ka) + std::get<1>(kb),
                  std::get<2>(ka) + std::get<2>(kb)},
                 ca * cb);
  return r;
}

Poly Poly::scaled(Coeff c) const {
  Poly r;
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

Poly Poly::dq() const {
  Poly r;
  for (const auto& [k, v] : terms_) {
    auto [qe, pe, se] = k;
    if (qe > 0) r.add_term({qe - 1, pe, se}, v * double(qe));
  }
  return r;
}

Poly Poly::dp() const {
  Poly r;
  for (const auto& [k, v] : terms_) {
    auto [qe, pe, se] = k;
    if (pe > 0) r.add_term({qe, pe - 1, se}, v * double(pe));
  }
  return r;
}

Poly Poly::ds() const {
  Poly r;
  for (const auto& [k, v] : terms_) {
    auto [qe, pe, se] = k;
    if (se > 0) r.add_term({qe, pe, se - 1}, v * double(se));
  }
  return r;
}

Poly::Coeff Poly::eval(double q, double p, double s) const {
  Coeff sum = 0.0;
  for (const auto& [k, v] : terms_) {
    auto [qe, pe, se] = k;
    sum += v * std::pow(q, qe) * std::pow(p, pe) * std::pow(s, se);
  }
  return sum;
}

Poly::Coeff Poly::coeff(int qe, int pe, int se) const {
  auto it = terms_.find({qe, pe, se});
  return it == terms_.end() ? Coeff{} : it->second;
}

bool Poly::empty_within(double tol) const {
  for (const auto& [k, v] : terms_)
    if (std::abs(v) > tol) return false;
  return true;
}

Poly jacobi_bracket(const Poly& f, const Poly& g) {
  const Poly p = Poly::monomial(0, 1, 0);
  Poly r = f * g.ds() - g * f.ds();
  r = r + p * (f.ds() * g.dp() - g.ds() * f.dp());
  r = r + (f.dq() * g.dp() - g.dq() * f.dp());
  return r;
}

}  // namespace flowbch
