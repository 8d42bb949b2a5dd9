#ifndef FLOWBCH_KERNELS_HPP
#define FLOWBCH_KERNELS_HPP

#include <complex>
#include <stdexcept>

namespace flowbch {

/// Raised when an argument leaves the principal branch of the matrix
/// logarithm (no real generator exists in the algebra).
struct branch_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when two elements belong to different algebras.
struct algebra_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// C(d) = cos(sqrt(d)) for d >= 0, cosh(sqrt(-d)) for d < 0.
/// Entire in d; for a traceless 2x2 matrix M, exp(M) = C(det M) I + S(det M) M.
double entire_C(double d);

/// S(d) = sin(sqrt(d))/sqrt(d) for d > 0, sinh(sqrt(-d))/sqrt(-d) for d < 0,
/// 1 at d = 0. Entire in d.
double entire_S(double d);

/// Complex counterparts (any square root branch works; C and S are even).
std::complex<double> entire_C(std::complex<double> d);
std::complex<double> entire_S(std::complex<double> d);

enum class BranchRegime { hyperbolic, elliptic, parabolic, out_of_image };

/// Regime of the half-trace x of a composed 2x2 flow map.
struct BranchReport {
  double x_value;
  BranchRegime regime;
};

/// Classifies x with the module thresholds: parabolic when |x-1| < 1e-8,
/// out_of_image when x <= -1.
BranchReport classify_branch(double x);

/// g(x) = arccosh(x)/sqrt(x^2-1) for x > 1, arccos(x)/sqrt(1-x^2) for |x| < 1,
/// series around the removable point x = 1. Throws branch_error for x <= -1.
double branch_g(double x);

/// Complex continuation g(x) = theta/sin(theta), theta = acos(x).
/// Throws branch_error near the x = -1 log branch point.
std::complex<double> branch_g(std::complex<double> x);

/// phi1(w) = (e^w - 1)/w, phi2(w) = (e^w - 1 - w)/w^2; the standard
/// exponential-integrator kernels, evaluated stably across w = 0.
double phi1(double w);
double phi2(double w);
std::complex<double> phi1(std::complex<double> w);

}  // namespace flowbch

#endif
