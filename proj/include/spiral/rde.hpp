#ifndef SPIRAL_RDE_HPP
#define SPIRAL_RDE_HPP

#include <functional>
#include <utility>
#include <vector>

namespace spiral {

// Dense piecewise-cubic record of a scalar quantity.  Between nodes the
// value is the Hermite cubic of (y, dy); a node stored twice at the same
// abscissa encodes a jump, and evaluation is right continuous.
struct Track {
  struct Node { double t, y, dy; };
  std::vector<Node> nodes;

  void push(double t, double y, double dy) { nodes.push_back({t, y, dy}); }
  bool empty() const { return nodes.empty(); }
  double t_begin() const { return nodes.front().t; }
  double t_end() const { return nodes.back().t; }

  double operator()(double t) const;  // right continuous
  double left(double t) const;        // limit from below
  // nearest node abscissa within float noise of t, else t unchanged; delayed
  // arguments must land exactly on jump nodes to pick the intended side
  double snap(double t) const;
};

// Retarded equation of a spiral barrier against a unit-speed fire:
//   dr/dphi = cot(beta(phi)) r(phi) - ds-/dphi,
// where ds-/dphi feeds back the length rate of the barrier one winding
// earlier through the delay map  phi = psi + 2pi + beta(psi).
struct Rde {
  // Contact angle as a piecewise-linear function of phi.  Segment i covers
  // [phi[i], phi[i+1]) (the last one extends to infinity) with
  // beta = beta0[i] + slope[i] (phi - phi[i]).
  struct Control {
    std::vector<double> phi, beta0, slope;

    double beta(double ph) const;
    int segment(double ph) const;
    int segment_left(double ph) const;
    // convexity of the barrier: D(beta) + L1 >= 0, i.e. slopes >= -1 and no
    // downward jumps between segments
    bool convex() const;
    static Control constant(double beta_value);
  };

  struct Options {
    double phi_end = 50;
    double r0 = 1;
    double u0 = 1;        // fire travel time to the barrier's starting point
    double init_len = 0;  // barrier length built before phi = 0
    // atoms of the consumed source length: (phi, mass); r drops by the mass
    std::vector<std::pair<double, double>> s_jumps;
    double step = 0;      // 0 picks lambda_critical / 4096
  };

  struct Result {
    Track r;
    Track splus;               // built length along the spiral
    std::vector<std::pair<double, double>> atoms;  // s- atoms seen
    bool closed = false;       // r reached zero
    double phi_close = 0;
    bool beta_floor = false;   // beta fell below 1e-6; integration stopped
    double phi_floor = 0;
    const Control* control = nullptr;

    double s_minus(double phi) const;  // s+(psi(phi)) plus atoms up to phi
    double psi(double phi) const;      // inverse of the delay map, <0 first round
    double psi_left(double phi) const;  // its left limit (differs at focus images)
  };

  static Result integrate(const Control& c, const Options& o);

  struct Row { double phi, r, beta, s_minus, s_plus, L, A; };
  // arrival margin A = u0 + s- + (r - r0) - (init_len + s+)/sigma with the
  // critical speed sigma; identically zero for the critical saturated spiral
  static std::vector<Row> trace(const Control& c, const Options& o, int n);
};

// Closed form of the always-saturated spiral started on the unit circle:
// G(phi) - G(phi - 2pi) at contact angle alpha.
double saturated_radius(double alpha, double phi);

// Positive exactly when the saturated spiral at angle alpha escapes every
// disk (strictly decreasing in alpha, positive up to the critical range).
double saturated_divergence_margin(double alpha);

// Window test backing the divergence argument: rho must be positive on
// [t0-1, t0+1] and rho(t0+1) must dominate the window [t0, t0+1], strictly
// when a == 1.
bool divergence_check(const std::function<double(double)>& rho, double t0,
                      double a, int samples = 256);

// Method-of-steps integration of rho' = a rho - rho(tau-1) + src(tau) from
// rho = 0 on tau < 0, with prescribed jumps (tau, size).  Independent
// cross-check for every closed form built from the step kernel.
Track delay_ode(double a, double tau_end,
                const std::vector<std::pair<double, double>>& jumps,
                const std::function<double(double)>& src = {},
                const std::vector<double>& src_breaks = {},
                double step = 0);

}  // namespace spiral

#endif
