#ifndef SPIRAL_SPECTRAL_HPP
#define SPIRAL_SPECTRAL_HPP

namespace spiral {

// Roots of the characteristic equation  z + exp(-z) - a = 0  of
// rho'(tau) = a rho(tau) - rho(tau-1).
struct CharRoots {
  struct Pair { double lo = 0, hi = 0; };
  struct Root { double re = 0, im = 0; };

  // Real roots.  a > 1: two, bracketing 0.  a == 1: double root 0.
  // a < 1: none (returns false).
  static bool real_pair(double a, Pair* out);

  // k-th complex root in the upper half plane, k >= 1; its imaginary part
  // lies in (2k pi, (2k+1) pi).  At a == 1, k == 1 this is
  // (-c*lambda, lambda) of the critical spiral.
  static Root branch(int k, double a);

  // Residual |z + exp(-z) - a| for diagnostics.
  static double residual(Root z, double a);
};

}  // namespace spiral

#endif
