#ifndef SPIRAL_CONSTANTS_HPP
#define SPIRAL_CONSTANTS_HPP

namespace spiral {

// A logarithmic spiral meeting every ray from the origin at angle alpha
// gains a factor (2*pi+alpha)/sin(alpha) in radius per round when driven
// at unit fire speed.  growth_rate is the exponent per unit angle.
double growth_rate(double alpha);

// Coefficient of the undelayed term in the per-round equation
// rho'(tau) = a(alpha) rho(tau) - rho(tau-1) after rescaling one round
// to unit time.  Strictly decreasing in alpha on (0, pi/2).
double delay_coefficient(double alpha);

// Everything evaluated at the critical angle, where delay_coefficient = 1.
// Built once on first use; all members are plain values.
struct Critical {
  double alpha;       // critical contact angle, 1.17830...
  double lambda;      // angular length of one round, 2*pi + alpha
  double sigma;       // construction speed 1/cos(alpha)
  double c;           // growth_rate(alpha)
  double sin_a, cos_a, tan_a, cot_a;
  double cl;          // c * lambda = decay exponent of one round, 2.08884...
  double W;           // cot(alpha) * lambda = cl + 1
  double theta_hat;   // corner aperture with vanishing first-round response
  double tan_theta_hat;

  static const Critical& get();
};

// exp(c * lambda * tau): converts the rescaled round variable back to radius units.
double round_scale(double tau);

}  // namespace spiral

#endif
