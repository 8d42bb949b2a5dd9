#include "flowbch/kernels.hpp"

#include <cmath>

namespace flowbch {

namespace {

constexpr double kSeriesCut = 1e-8;

// Sums C or S around d = 0: C(d) = sum (-d)^k/(2k)!, S(d) = sum (-d)^k/(2k+1)!.
double small_series(double d, bool is_S) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 8; ++k) {
    const double denom = is_S ? (2.0 * k) * (2.0 * k + 1.0) : (2.0 * k - 1.0) * (2.0 * k);
    term *= -d / denom;
    sum += term;
    if (std::abs(term) < 1e-20) break;
  }
  return sum;
}

}  // namespace

double entire_C(double d) {
  if (std::abs(d) < kSeriesCut) return small_series(d, false);
  return d > 0 ? std::cos(std::sqrt(d)) : std::cosh(std::sqrt(-d));
}

double entire_S(double d) {
  if (std::abs(d) < kSeriesCut) return small_series(d, true);
  if (d > 0) {
    const double r = std::sqrt(d);
    return std::sin(r) / r;
  }
  const double r = std::sqrt(-d);
  return std::sinh(r) / r;
}

std::complex<double> entire_C(std::complex<double> d) {
  if (std::abs(d) < kSeriesCut) {
    std::complex<double> term = 1.0, sum = 1.0;
    for (int k = 1; k < 8; ++k) {
      term *= -d / ((2.0 * k - 1.0) * (2.0 * k));
      sum += term;
    }
    return sum;
  }
  return std::cos(std::sqrt(d));
}

std::complex<double> entire_S(std::complex<double> d) {
  if (std::abs(d) < kSeriesCut) {
    std::complex<double> term = 1.0, sum = 1.0;
    for (int k = 1; k < 8; ++k) {
      term *= -d / ((2.0 * k) * (2.0 * k + 1.0));
      sum += term;
    }
    return sum;
  }
  const std::complex<double> r = std::sqrt(d);
  return std::sin(r) / r;
}

BranchReport classify_branch(double x) {
  BranchRegime regime;
  if (x <= -1.0)
    regime = BranchRegime::out_of_image;
  else if (std::abs(x - 1.0) < 1e-8)
    regime = BranchRegime::parabolic;
  else if (x > 1.0)
    regime = BranchRegime::hyperbolic;
  else
    regime = BranchRegime::elliptic;
  return BranchReport{x, regime};
}

double branch_g(double x) {
  switch (classify_branch(x).regime) {
    case BranchRegime::out_of_image:
      throw branch_error("outside principal branch / not in exponential image");
    case BranchRegime::parabolic: {
      const double u = x - 1.0;
      return 1.0 + u * (-1.0 / 3.0 + u * (2.0 / 15.0 + u * (-2.0 / 35.0 + u * (8.0 / 315.0))));
    }
    case BranchRegime::hyperbolic:
      return std::acosh(x) / std::sqrt((x - 1.0) * (x + 1.0));
    case BranchRegime::elliptic:
    default:
      return std::acos(x) / std::sqrt((1.0 - x) * (1.0 + x));
  }
}

std::complex<double> branch_g(std::complex<double> x) {
  const std::complex<double> u = x - 1.0;
  if (std::abs(u) < 1e-8)
    return 1.0 + u * (-1.0 / 3.0 + u * (2.0 / 15.0 + u * (-2.0 / 35.0 + u * (8.0 / 315.0))));
  const std::complex<double> theta = std::acos(x);
  const std::complex<double> s = std::sin(theta);
  if (std::abs(s) < 1e-14)
    throw branch_error("outside principal branch / not in exponential image");
  return theta / s;
}

double phi1(double w) {
  if (std::abs(w) >= 0.5) return std::expm1(w) / w;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 24; ++k) {
    term *= w / (k + 1.0);
    sum += term;
    if (std::abs(term) < 1e-20) break;
  }
  return sum;
}

double phi2(double w) {
  if (std::abs(w) >= 0.5) return (std::expm1(w) - w) / (w * w);
  double term = 0.5, sum = 0.5;
  for (int k = 1; k < 24; ++k) {
    term *= w / (k + 2.0);
    sum += term;
    if (std::abs(term) < 1e-20) break;
  }
  return sum;
}

std::complex<double> phi1(std::complex<double> w) {
  if (std::abs(w) >= 0.5) return (std::exp(w) - 1.0) / w;
  std::complex<double> term = 1.0, sum = 1.0;
  for (int k = 1; k < 24; ++k) {
    term *= w / (k + 1.0);
    sum += term;
    if (std::abs(term) < 1e-20) break;
  }
  return sum;
}

}  // namespace flowbch
