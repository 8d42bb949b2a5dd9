#include <doctest.h>

#include <cmath>

#include "flowbch/kernels.hpp"
#include "flowbch/oracle.hpp"
#include "flowbch/verify.hpp"

using namespace flowbch;

TEST_CASE("entire kernels at the origin and tabulated points") {
  CHECK(entire_C(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(entire_S(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  const double pi = std::acos(-1.0);
  CHECK(entire_C(pi * pi) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(entire_C(-1.0) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
  CHECK(entire_S(4.0) == doctest::Approx(std::sin(2.0) / 2.0).epsilon(1e-15));
  // smooth through zero: both sides sit on the same series 1 - d/6 + ...
  CHECK(entire_S(1e-9) == doctest::Approx(1.0 - 1e-9 / 6.0).epsilon(1e-15));
  CHECK(entire_S(-1e-9) == doctest::Approx(1.0 + 1e-9 / 6.0).epsilon(1e-15));
}

TEST_CASE("exp of a traceless 2x2 equals C I + S M") {
  for (int trial = 0; trial < 100; ++trial) {
    TrialRng rng(7, trial);
    SquareMatrix M(2, true);
    M.at(0, 0) = rng.uniform(-2, 2);
    M.at(0, 1) = rng.uniform(-2, 2);
    M.at(1, 0) = rng.uniform(-2, 2);
    M.at(1, 1) = -M.at(0, 0);
    const double det = (M.at(0, 0) * M.at(1, 1) - M.at(0, 1) * M.at(1, 0)).real();
    const SquareMatrix E = matrix_exp(M);
    const SquareMatrix W = SquareMatrix::identity(2).scaled(entire_C(det)) + M.scaled(entire_S(det));
    CHECK((E - W).max_abs() < 1e-12);
  }
}

TEST_CASE("branch classification thresholds") {
  CHECK(classify_branch(2.0).regime == BranchRegime::hyperbolic);
  CHECK(classify_branch(0.0).regime == BranchRegime::elliptic);
  CHECK(classify_branch(1.0 + 5e-9).regime == BranchRegime::parabolic);
  CHECK(classify_branch(1.0 - 5e-9).regime == BranchRegime::parabolic);
  CHECK(classify_branch(-1.0).regime == BranchRegime::out_of_image);
  CHECK(classify_branch(-1.5).regime == BranchRegime::out_of_image);
}

TEST_CASE("branch_g values and continuity") {
  CHECK(branch_g(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(branch_g(std::cosh(1.0)) == doctest::Approx(1.0 / std::sinh(1.0)).epsilon(1e-14));
  CHECK(branch_g(0.0) == doctest::Approx(std::acos(-1.0) / 2.0).epsilon(1e-15));
  // series patch joins both exact branches
  CHECK(branch_g(1.0 + 2e-8) == doctest::Approx(branch_g(1.0 + 0.99e-8)).epsilon(1e-7));
  CHECK(branch_g(1.0 - 2e-8) == doctest::Approx(branch_g(1.0 - 0.99e-8)).epsilon(1e-7));
  CHECK_THROWS_AS((void)branch_g(-1.0), branch_error);
  CHECK_THROWS_AS((void)branch_g(-2.0), branch_error);
}

TEST_CASE("phi kernels against their defining expressions") {
  CHECK(phi1(0.0) == doctest::Approx(1.0));
  CHECK(phi2(0.0) == doctest::Approx(0.5));
  for (double w : {-3.0, -0.4, 1e-9, 0.3, 2.5}) {
    CHECK(phi1(w) * w == doctest::Approx(std::expm1(w)).epsilon(1e-14));
    CHECK(phi2(w) * w * w == doctest::Approx(std::expm1(w) - w).epsilon(1e-13));
  }
}
