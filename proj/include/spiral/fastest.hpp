#ifndef SPIRAL_FASTEST_HPP
#define SPIRAL_FASTEST_HPP

namespace spiral {
namespace fastest {

// Geometry of the fastest saturated barrier started against a burning disk
// of radius a <= 1, with the barrier's base point at distance 1 from the
// center.  For a < sin(alpha) the curve opens with an arc of the unit
// circle of angle dphi = tan(alpha) - a/cos(alpha), followed by a tangent
// segment; for larger a the arc disappears and the curve opens with a
// straight segment of slope theta against the base ray.  In both cases the
// saturated spiral part begins at phi0 and the radius obeys the full
// delay equation one turn later.
struct Start {
  bool arc;      // leading unit-circle arc present (a < sin(alpha))
  double dphi;   // opening angle of that arc, 0 in the segment case
  double theta;  // slope of the straight piece where it leaves the circle
  double phi0;   // angle where the logarithmic spiral part begins
};

Start start_for_radius(double a);

// Radius of the fastest saturated barrier around a disk of radius a, as a
// function of the polar angle.  Explicit below phi0, a sum of kernel
// responses afterwards.  a = 1 reduces to the plain saturated spiral.
double ray(double a, double phi);

// Coefficient of the principal divergence term: per round of angle the
// rescaled radius ray(a, phi) e^{-c phi} grows by this amount once the
// transients die out.  Strictly positive for every a in [0, 1].
double divergence_coefficient(double a);

// The a = 0 profile in round units, measured from the spiral onset:
// base_rho(tau) = ray(0, phi0 + lambda tau) e^{-c lambda tau}, written
// directly as a kernel sum.
double base_rho(double tau);

// Length of the a = 0 barrier up to angle phi0 + lambda tau, including the
// straight opening pieces.  d/dtau = lambda e^{c lambda tau} base_rho(tau)
// / sin(alpha) for tau >= 0.
double base_length(double tau);

// Slack of the bound  base_rho(tau) >= 2.08 e^{-c lambda tau}
// base_length(tau - 1)  used to keep later rounds saturated; positive on
// [0, 5] with minimum beyond 0.67, increasing past tau = 4.
double base_margin(double tau);

// base_rho(tau) / (e^{-c lambda tau} base_length(tau - 1)); approaches
// c lambda = 2.08884 from above as tau grows.
double base_ratio(double tau);

// Sum of the length source coefficients 1/sin(alpha) - 1 - tan(alpha)
// - cot(alpha); negative, so the length's own feedback cannot sustain it.
double length_coefficient_sum();

// Derivative of the rescaled radius with respect to the opening angle of
// the arc (arc case).  Negative and decreasing on [1, 2], hence negative
// for all tau >= 1: shrinking the disk can only slow the escape.
double arc_radius_derivative(double tau);

// Derivative of the rescaled radius with respect to the segment slope
// (segment case), up to the positive factor -sin(theta - alpha)/sin^2.
// Positive and increasing, so the worst slope is theta = pi/2.
double segment_slope_derivative(double tau);

}  // namespace fastest
}  // namespace spiral

#endif
