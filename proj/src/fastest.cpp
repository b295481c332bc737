#include "spiral/fastest.hpp"

#include <cmath>
#include <stdexcept>

#include "spiral/constants.hpp"
#include "spiral/kernels.hpp"

namespace spiral {
namespace fastest {

namespace {
constexpr double PI = 3.14159265358979323846;
constexpr double TWO_PI = 6.28318530717958647692;
}

Start start_for_radius(double a) {
  if (a < 0 || a > 1) throw std::domain_error("disk radius must lie in [0, 1]");
  const Critical& k = Critical::get();
  Start s;
  if (a < k.sin_a) {
    s.arc = true;
    s.dphi = k.tan_a - a / k.cos_a;
    s.theta = PI / 2;
    s.phi0 = s.dphi + PI / 2 - k.alpha;
  } else {
    s.arc = false;
    s.dphi = 0;
    s.theta = std::acos(a) + k.alpha;
    s.phi0 = s.theta - k.alpha;
  }
  return s;
}

double ray(double a, double phi) {
  const Critical& k = Critical::get();
  Start s = start_for_radius(a);
  if (phi < 0) return 0;
  if (s.arc) {
    if (phi < s.dphi) return 1;
    if (phi < s.phi0) return 1 / std::cos(phi - s.dphi);
    // kernel responses: spiral onset, the unit jump one turn in, the arc
    // image fed back at unit rate, and the segment image atom
    double p1 = TWO_PI + PI / 2;
    return kern::Gc(phi - s.phi0) / k.sin_a - kern::Gc(phi - TWO_PI) -
           kern::M(phi, p1, p1 + s.dphi) -
           k.cot_a * kern::Gc(phi - s.phi0 - k.lambda);
  }
  if (phi < s.phi0) return std::sin(s.theta) / std::sin(s.theta - phi);
  return std::sin(s.theta) / k.sin_a * kern::Gc(phi - s.phi0) -
         kern::Gc(phi - TWO_PI) -
         std::sin(s.theta - k.alpha) / k.sin_a *
             kern::Gc(phi - s.phi0 - k.lambda);
}

double divergence_coefficient(double a) {
  const Critical& k = Critical::get();
  Start s = start_for_radius(a);
  if (s.arc) {
    double p1 = TWO_PI + PI / 2;
    double p2 = p1 + s.dphi;
    return 2 * (std::exp(-k.c * s.phi0) / k.sin_a - std::exp(-k.c * TWO_PI) -
                (std::exp(-k.c * p1) - std::exp(-k.c * p2)) / k.c -
                k.cot_a * std::exp(-k.c * p2));
  }
  double ta = s.theta - k.alpha;
  return 2 * (std::sin(s.theta) * std::exp(-k.c * ta) / k.sin_a -
              std::exp(-k.c * TWO_PI) -
              std::sin(ta) * std::exp(-k.c * (TWO_PI + s.theta)) / k.sin_a);
}

// Round-unit time of the unit jump image of the spiral onset and of the
// end of the arc feedback window, measured from the onset.
static double tau1() {
  const Critical& k = Critical::get();
  return 1 - (PI / 2 + k.tan_a) / k.lambda;
}

static double tau2() {
  const Critical& k = Critical::get();
  return 1 - k.tan_a / k.lambda;
}

double base_rho(double tau) {
  const Critical& k = Critical::get();
  double t1 = tau1(), t2 = tau2();
  return kern::gc(tau) / k.sin_a -
         std::exp(-k.c * k.lambda * t1) * kern::gc(tau - t1) -
         kern::m(tau, t2, 1) - k.cot_a * std::exp(-k.cl) * kern::gc(tau - 1);
}

double base_length(double tau) {
  const Critical& k = Critical::get();
  double arc_end = -(PI / 2 - k.alpha) / k.lambda;
  if (tau < arc_end - k.tan_a / k.lambda) return 0;
  if (tau < arc_end) return k.lambda * tau + PI / 2 - k.alpha + k.tan_a;
  if (tau < 0) return k.tan_a + 1 / std::tan(k.alpha - k.lambda * tau);
  double t1 = tau1(), t2 = tau2();
  return k.tan_a + k.cot_a + kern::gprim(tau) / k.sin_a -
         kern::gprim(tau - t1) - kern::mprim(tau, t2, 1) -
         k.cot_a * kern::gprim(tau - 1);
}

double base_margin(double tau) {
  const Critical& k = Critical::get();
  return base_rho(tau) - 2.08 * std::exp(-k.cl * tau) * base_length(tau - 1);
}

double base_ratio(double tau) {
  const Critical& k = Critical::get();
  return base_rho(tau) / (std::exp(-k.cl * tau) * base_length(tau - 1));
}

double length_coefficient_sum() {
  const Critical& k = Critical::get();
  return 1 / k.sin_a - 1 - k.tan_a - k.cot_a;
}

double arc_radius_derivative(double tau) {
  const Critical& k = Critical::get();
  return k.cot_a * kern::gc(tau) - std::exp(-k.cl) * kern::gc(tau - 1) / k.sin_a -
         std::exp(-k.c * PI / 2) * kern::gc(tau - PI / (2 * k.lambda));
}

double segment_slope_derivative(double tau) {
  const Critical& k = Critical::get();
  return kern::gc(tau) - 2 * k.cos_a * std::exp(-k.cl) * kern::gc(tau - 1) +
         std::exp(-2 * k.cl) * kern::gc(tau - 2);
}

}  // namespace fastest
}  // namespace spiral
