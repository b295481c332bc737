#include "spiral/constants.hpp"

#include <cmath>

#include "spiral/rootfind.hpp"

namespace spiral {

static const double two_pi = 6.283185307179586476925287;

double growth_rate(double alpha) {
  return std::log((two_pi + alpha) / std::sin(alpha)) / (two_pi + alpha);
}

double delay_coefficient(double alpha) {
  return (two_pi + alpha) * (1.0 / std::tan(alpha) - growth_rate(alpha));
}

static Critical build() {
  Critical k;
  // delay_coefficient is strictly decreasing and crosses 1 inside (1.0, 1.3)
  auto res = Rootfind::fzero(
      [](double a) { return delay_coefficient(a) - 1.0; }, 1.0, 1.3);
  k.alpha = res.x;
  k.lambda = two_pi + k.alpha;
  k.sin_a = std::sin(k.alpha);
  k.cos_a = std::cos(k.alpha);
  k.tan_a = k.sin_a / k.cos_a;
  k.cot_a = k.cos_a / k.sin_a;
  k.sigma = 1.0 / k.cos_a;
  k.c = k.cot_a - 1.0 / k.lambda;
  k.cl = k.c * k.lambda;
  k.W = k.cot_a * k.lambda;
  // aperture where the spiral reached after one round exactly cancels the
  // outward shift produced by opening a corner of that angle
  const Critical* kp = &k;
  auto th = Rootfind::fzero(
      [kp](double t) {
        return kp->cot_a * (1.0 - std::cos(t)) / kp->sin_a -
               std::exp(-kp->cot_a * (kp->lambda - t));
      },
      0.1, 1.0);
  k.theta_hat = th.x;
  k.tan_theta_hat = std::tan(k.theta_hat);
  return k;
}

const Critical& Critical::get() {
  static const Critical k = build();
  return k;
}

double round_scale(double tau) {
  return std::exp(Critical::get().cl * tau);
}

}  // namespace spiral
