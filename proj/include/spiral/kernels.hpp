#ifndef SPIRAL_KERNELS_HPP
#define SPIRAL_KERNELS_HPP

namespace spiral {
namespace kern {

// Fundamental solution of rho'(tau) = a rho(tau) - rho(tau-1) with
// rho = 0 for tau < 0 and rho(0) = 1: finite alternating sum over the
// integer shifts covered by tau.  Right continuous at the shifts.
double g(double tau, double a);

// g at the critical coefficient a = 1.  Beyond tau = 15 the exact sum is
// replaced by the linear asymptote, whose error is below 1e-13 there.
double gc(double tau);

// F(k, X) = e^X sum_{l=0..k} (-X)^l / l!  -  1.  Building block of the
// closed forms below; F(k, 0) = 0 and dF(k,X)/dX = e^X (-X)^k / k!.
double F(int k, double X);

// Critical response to the exponential source lambda e^{-c lambda s} acting
// for s in [t1, t2]:  m(tau) = lambda int_{t1}^{t2} g(tau-s) e^{-c lambda s} ds.
double m(double tau, double t1, double t2);

// Same objects in angle units on the spiral: G(phi) = g(phi/lambda) e^{c phi}
// with the coefficient a(alpha) and rates of the given contact angle.
double G(double phi, double alpha);
double Gc(double phi);                         // critical angle
double M(double phi, double p1, double p2);    // critical angle

// Primitives at the critical angle, in round units.
// gprim(tau)  = int_{-inf}^{lambda tau} Gc/sin(alpha) dphi
// gprim2 obeys d(gprim2)/dtau = lambda gprim, gprim2(0) = 0
// mprim(tau, t1, t2) = gprim2(tau-t1) - gprim2(tau-t2)
//                    = int_0^{lambda tau} M(phi, lambda t1, lambda t2)/sin(alpha) dphi
double gprim(double tau);
double gprim2(double tau);
double mprim(double tau, double t1, double t2);

// Large-tau behavior at criticality: gc(tau) - gasym(tau) decays like
// e^{-c lambda tau}, and m approaches a straight line the same way.
double gasym(double tau);
double masym(double tau, double t1, double t2);

// Leading growth for a > 1: e^{z tau} / (1 - e^{-z}), z the positive real root.
double ggrow(double tau, double a);

}  // namespace kern
}  // namespace spiral

#endif
