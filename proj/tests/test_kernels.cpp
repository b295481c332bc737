#include "doctest.h"
#include "spiral/constants.hpp"
#include "spiral/kernels.hpp"

#include <cmath>
#include <initializer_list>

using namespace spiral;

TEST_CASE("step kernel basics") {
  CHECK(kern::g(-0.5, 1.0) == 0);
  CHECK(kern::g(0.0, 1.0) == 1);  // right continuous jump at 0
  // pure exponential before the first shift
  CHECK(std::fabs(kern::g(0.999, 1.0) - std::exp(0.999)) < 1e-12);
  // frozen 50-digit references
  CHECK(std::fabs(kern::g(1.5, 1.0) - 3.65732843498800075) < 1e-12);
  CHECK(std::fabs(kern::g(3.7, 1.0) - 8.06676315417947984) < 1e-11);
  CHECK(std::fabs(kern::g(2.25, 0.9) - 3.76497496837030234) < 1e-12);
  CHECK(std::fabs(kern::g(2.25, std::exp(1.0)) - 415.79652279745087) < 1e-9);
}

TEST_CASE("critical kernel approaches its line") {
  CHECK(std::fabs(kern::gc(5.5) - (2 * 5.5 + 2.0 / 3.0) - 2.36640877307592e-7) <
        1e-13);
  // the asymptote switch at tau = 12 is seamless (sum cancellation dominates)
  CHECK(std::fabs(kern::g(11.999, 1.0) - kern::gasym(11.999)) < 1e-9);
  CHECK(std::fabs(kern::gc(17.3) - kern::gasym(17.3)) == 0);
}

TEST_CASE("F building block") {
  CHECK(kern::F(0, 0.0) == 0);
  CHECK(kern::F(3, 0.0) == 0);
  CHECK(std::fabs(kern::F(0, 1.3) - (std::exp(1.3) - 1)) < 1e-14);
  // derivative identity dF(k,X)/dX = e^X (-X)^k / k!
  for (int k : {1, 2, 4}) {
    double X = 0.8, h = 1e-6;
    double fd = (kern::F(k, X + h) - kern::F(k, X - h)) / (2 * h);
    double want = std::exp(X) * std::pow(-X, k) / std::tgamma(k + 1.0);
    CHECK(std::fabs(fd - want) < 1e-8);
  }
}

TEST_CASE("exponential source response against quadrature") {
  // frozen values of lambda int g(tau-s) e^{-c lambda s} ds (50-digit quadrature)
  CHECK(std::fabs(kern::m(1.7, 0.5, 1.0) - 2.16714410823731862) < 1e-12);
  CHECK(std::fabs(kern::m(3.1, 0.83, 1.0) - 0.95149236168626078) < 1e-12);
  CHECK(std::fabs(kern::m(0.9, 0.5, 1.0) - 0.89950599358727238) < 1e-12);
  CHECK(kern::m(0.49, 0.5, 1.0) == 0);

  // differential relations in the window endpoints
  const Critical& K = Critical::get();
  double tau = 2.3, t1 = 0.4, t2 = 0.9, h = 1e-6;
  double d1 = (kern::m(tau, t1 + h, t2) - kern::m(tau, t1 - h, t2)) / (2 * h);
  CHECK(std::fabs(d1 + K.lambda * std::exp(-K.cl * t1) * kern::gc(tau - t1)) <
        1e-7);
  double d2 = (kern::m(tau, t1, t2 + h) - kern::m(tau, t1, t2 - h)) / (2 * h);
  CHECK(std::fabs(d2 - K.lambda * std::exp(-K.cl * t2) * kern::gc(tau - t2)) <
        1e-7);
}

TEST_CASE("angular kernel ties to the round kernel") {
  const Critical& K = Critical::get();
  for (double phi : {0.3, 4.0, 9.7, 16.1}) {
    CHECK(std::fabs(kern::Gc(phi) -
                    kern::gc(phi / K.lambda) * std::exp(K.c * phi)) < 1e-10);
    // same identity off criticality
    double al = 1.0;
    double lam = 2 * 3.14159265358979324 + al;
    double want = kern::g(phi / lam, spiral::delay_coefficient(al)) *
                  std::exp(spiral::growth_rate(al) * phi);
    CHECK(std::fabs(kern::G(phi, al) - want) < 1e-9 * (1 + std::fabs(want)));
  }
  // first round is the bare spiral growth
  CHECK(std::fabs(kern::Gc(2.0) - std::exp(K.cot_a * 2.0)) < 1e-13);
  // source response in angle units
  CHECK(std::fabs(kern::M(5.0, 1.1, 3.3) -
                  std::exp(K.c * 5.0) *
                      kern::m(5.0 / K.lambda, 1.1 / K.lambda, 3.3 / K.lambda)) <
        1e-13);
  // closed form of the aligned window: M(dphi; 0, dphi) = tan(a)(e^{cot(a) dphi} - 1)
  for (double dp : {0.4, 1.9}) {
    CHECK(std::fabs(kern::M(dp, 0, dp) -
                    K.tan_a * (std::exp(K.cot_a * dp) - 1)) < 1e-12);
  }
}

TEST_CASE("primitives differentiate back") {
  const Critical& K = Critical::get();
  double h = 1e-6;
  for (double tau : {0.4, 1.2, 2.7, 4.9}) {
    double d = (kern::gprim(tau + h) - kern::gprim(tau - h)) / (2 * h);
    double want = K.lambda * kern::Gc(K.lambda * tau) / K.sin_a;
    CHECK(std::fabs(d - want) < 1e-6 * (1 + std::fabs(want)));
    double d2 = (kern::gprim2(tau + h) - kern::gprim2(tau - h)) / (2 * h);
    CHECK(std::fabs(d2 - K.lambda * kern::gprim(tau)) <
          1e-6 * (1 + K.lambda * kern::gprim(tau)));
  }
  CHECK(kern::gprim(0.0) == 0);
  CHECK(kern::gprim2(0.0) == 0);
  // first round: gprim = (e^{cot(a) lambda tau} - 1)/cos(a)... via F(0, W tau)
  CHECK(std::fabs(kern::gprim(0.7) -
                  (std::exp(K.W * 0.7) - 1) / K.cos_a) < 1e-11);
  // mprim is the difference of second primitives
  CHECK(std::fabs(kern::mprim(2.0, 0.3, 0.8) -
                  (kern::gprim2(1.7) - kern::gprim2(1.2))) == 0);
}

TEST_CASE("asymptote of the source response") {
  // masym matches m once the kernel has settled on its line
  for (double tau : {9.0, 12.0}) {
    CHECK(std::fabs(kern::m(tau, 0.4, 1.0) - kern::masym(tau, 0.4, 1.0)) <
          2e-6);
  }
}

TEST_CASE("supercritical growth factor") {
  double a = 1.5;
  double z = 1.19829043731566399;  // positive real root for a = 1.5
  double want = std::exp(z * 6.0) / (1 - std::exp(-z));
  CHECK(std::fabs(kern::ggrow(6.0, a) - want) < 1e-8 * want);
  // g itself grows at that rate
  CHECK(std::fabs(kern::g(18.0, a) / kern::ggrow(18.0, a) - 1) < 1e-10);
  CHECK(std::fabs(kern::g(24.0, a) / kern::ggrow(24.0, a) - 1) < 1e-10);
}
