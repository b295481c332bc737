#include "doctest.h"
#include "spiral/constants.hpp"

#include <cmath>

using spiral::Critical;

// High-precision references computed once with 50-digit arithmetic from the
// same defining equations and frozen here.
static const double ref_alpha = 1.17830397847466808;
static const double ref_lambda = 7.46148928565425456;
static const double ref_sigma = 2.61443084419321492;
static const double ref_c = 0.27994987805304948;
static const double ref_theta_hat = 0.50613418752691799;

TEST_CASE("rates as functions of the contact angle") {
  // spot values of growth_rate / delay_coefficient
  CHECK(std::fabs(spiral::growth_rate(1.0) - 0.29632255173454631) < 1e-14);
  CHECK(std::fabs(spiral::delay_coefficient(1.0) - 2.51830745124241205) < 1e-13);
  CHECK(std::fabs(spiral::delay_coefficient(1.3) - 0.04215515197577103) < 1e-13);
  // strictly decreasing across the bracket used by the solver
  double prev = spiral::delay_coefficient(1.0);
  for (int i = 1; i <= 30; ++i) {
    double a = spiral::delay_coefficient(1.0 + 0.01 * i);
    CHECK(a < prev);
    prev = a;
  }
}

TEST_CASE("critical bundle") {
  const Critical& K = Critical::get();
  CHECK(std::fabs(K.alpha - ref_alpha) < 1e-12);
  CHECK(std::fabs(K.lambda - ref_lambda) < 1e-12);
  CHECK(std::fabs(K.sigma - ref_sigma) < 1e-12);
  CHECK(std::fabs(K.c - ref_c) < 1e-12);
  CHECK(std::fabs(K.theta_hat - ref_theta_hat) < 1e-12);
  CHECK(std::fabs(K.tan_theta_hat - 0.55429428533931630) < 1e-12);
  CHECK(std::fabs(spiral::delay_coefficient(K.alpha) - 1.0) < 1e-11);

  // identities tying the members together
  CHECK(std::fabs(K.W - (K.cl + 1)) < 1e-12);                    // cot*l = c*l + 1
  CHECK(std::fabs(std::exp(-K.cl) - K.sin_a / K.lambda) < 1e-15);  // decay per round
  CHECK(std::fabs(spiral::round_scale(1.0) - std::exp(K.cl)) < 1e-12);
}
