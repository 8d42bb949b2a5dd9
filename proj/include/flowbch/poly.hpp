#ifndef FLOWBCH_POLY_HPP
#define FLOWBCH_POLY_HPP

#include <complex>
#include <map>
#include <tuple>

namespace flowbch {

/// Sparse polynomial in the canonical coordinates (q, p, s) with complex
/// coefficients. Degrees stay tiny here (products of quadratics at most),
/// so a sorted map keyed by the exponent triple is plenty.
class Poly {
 public:
  using Key = std::tuple<int, int, int>;  // (q-power, p-power, s-power)
  using Coeff = std::complex<double>;

  Poly() = default;
  static Poly monomial(int qe, int pe, int se, Coeff c = 1.0);
  static Poly constant(Coeff c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Coeff c) const;

  Poly dq() const;  ///< partial derivative in q
  Poly dp() const;  ///< partial derivative in p
  Poly ds() const;  ///< partial derivative in s

  Coeff eval(double q, double p, double s) const;

  /// Coefficient of the monomial q^qe p^pe s^se (zero if absent).
  Coeff coeff(int qe, int pe, int se) const;

  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool empty_within(double tol) const;

 private:
  void add_term(const Key& k, Coeff c);
  std::map<Key, Coeff> terms_;
};

/// Coordinate Jacobi bracket {f,g} for the contact form ds - p dq:
///   (f g_s - g f_s) + p (f_s g_p - g_s f_p) + (f_q g_p - g_q f_p).
Poly jacobi_bracket(const Poly& f, const Poly& g);

}  // namespace flowbch

#endif
