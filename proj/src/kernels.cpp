#include "spiral/kernels.hpp"

#include <cmath>

#include "spiral/constants.hpp"
#include "spiral/spectral.hpp"

namespace spiral {
namespace kern {

static const double two_pi = 6.283185307179586476925287;

// 1/k! for the shift counts that ever occur (tau stays well below 40)
static double inv_fact(int k) {
  static double table[40];
  static bool init = false;
  if (!init) {
    double f = 1;
    for (int i = 0; i < 40; ++i) {
      table[i] = 1 / f;
      f *= i + 1;
    }
    init = true;
  }
  return table[k];
}

static double ipow(double x, int k) {
  double p = 1;
  while (k-- > 0) p *= x;
  return p;
}

double g(double tau, double a) {
  if (tau < 0) return 0;
  double s = 0;
  double ea = std::exp(a * tau);
  double eshift = std::exp(-a);  // one delay unit
  int kmax = (int)std::floor(tau);
  if (kmax > 38) kmax = 38;
  double ek = ea;
  for (int k = 0; k <= kmax; ++k) {
    double t = tau - k;
    double term = ek * ipow(t, k) * inv_fact(k);
    s += (k & 1) ? -term : term;
    ek *= eshift;
  }
  return s;
}

double gc(double tau) {
  // crossover where the alternating sum's cancellation error meets the
  // asymptote's exponentially small remainder
  if (tau > 12) return gasym(tau);
  return g(tau, 1.0);
}

double F(int k, double X) {
  double s = 1, term = 1;
  for (int l = 1; l <= k; ++l) {
    term *= -X / l;
    s += term;
  }
  return std::exp(X) * s - 1;
}

// m = m0(tau, t1) - m0(tau, t2) where m0 integrates the source from t1 on;
// integrating g's sum termwise against the exponential gives one F per shift.
static double m0(double tau, double t1) {
  const Critical& K = Critical::get();
  if (tau <= t1) return 0;
  double s = 0;
  double decay = std::exp(-K.cl * tau);        // e^{-c lambda (tau - k)} start
  const double up = std::exp(K.cl);
  double winv = 1.0 / K.W;
  double wk = winv;
  int kmax = (int)std::floor(tau - t1);
  if (kmax > 38) kmax = 38;
  for (int k = 0; k <= kmax; ++k) {
    double X = K.W * (tau - t1 - k);
    if (X > 0) s += K.lambda * decay * wk * F(k, X);
    decay *= up;
    wk *= winv;
  }
  return s;
}

double m(double tau, double t1, double t2) {
  // same crossover as gc: beyond it the alternating sums lose more digits
  // than the asymptote's remainder costs
  if (tau - t2 > 12) return masym(tau, t1, t2);
  return m0(tau, t1) - m0(tau, t2);
}

double G(double phi, double alpha) {
  if (phi < 0) return 0;
  double lam = two_pi + alpha;
  double cot = std::cos(alpha) / std::sin(alpha);
  double sinv = 1.0 / std::sin(alpha);
  double s = 0, sk = 1;
  int kmax = (int)std::floor(phi / lam);
  if (kmax > 38) kmax = 38;
  for (int k = 0; k <= kmax; ++k) {
    double u = phi - lam * k;
    double term = std::exp(cot * u) * ipow(u, k) * inv_fact(k) * sk;
    s += (k & 1) ? -term : term;
    sk *= sinv;
  }
  return s;
}

double Gc(double phi) {
  const Critical& K = Critical::get();
  if (phi / K.lambda > 15) return gasym(phi / K.lambda) * std::exp(K.c * phi);
  return G(phi, K.alpha);
}

double M(double phi, double p1, double p2) {
  const Critical& K = Critical::get();
  return std::exp(K.c * phi) * m(phi / K.lambda, p1 / K.lambda, p2 / K.lambda);
}

double gprim(double tau) {
  const Critical& K = Critical::get();
  if (tau <= 0) return 0;
  double s = 0;
  double ck = 1.0 / K.cos_a;
  int kmax = (int)std::floor(tau);
  for (int k = 0; k <= kmax; ++k) {
    s += ck * F(k, K.W * (tau - k));
    ck /= K.cos_a;
  }
  return s;
}

double gprim2(double tau) {
  const Critical& K = Critical::get();
  if (tau <= 0) return 0;
  double s = 0;
  double ck = 1.0 / K.cos_a;
  int kmax = (int)std::floor(tau);
  for (int k = 0; k <= kmax; ++k) {
    double X = K.W * (tau - k);
    // sum_{j<=k} F(j, X) reuses the partial sums of e^X sum (-X)^l/l!
    double ex = std::exp(X);
    double term = 1, acc = 1;
    double fs = ex * acc - 1;
    for (int j = 1; j <= k; ++j) {
      term *= -X / j;
      acc += term;
      fs += ex * acc - 1;
    }
    s += ck * (K.tan_a * fs - K.lambda * (tau - k));
    ck /= K.cos_a;
  }
  return s;
}

double mprim(double tau, double t1, double t2) {
  return gprim2(tau - t1) - gprim2(tau - t2);
}

double gasym(double tau) { return 2 * tau + 2.0 / 3.0; }

double masym(double tau, double t1, double t2) {
  const Critical& K = Critical::get();
  double e1 = std::exp(-K.cl * t1), e2 = std::exp(-K.cl * t2);
  double slope = 2 * (e1 - e2) / K.c;
  double cons = (2.0 / 3.0) * (e1 - e2) / K.c -
                (2 / K.lambda) * ((K.cl * t1 + 1) * e1 - (K.cl * t2 + 1) * e2) /
                    (K.c * K.c);
  return slope * tau + cons;
}

double ggrow(double tau, double a) {
  CharRoots::Pair p;
  if (!CharRoots::real_pair(a, &p) || p.hi == 0) return 0;
  return std::exp(p.hi * tau) / (1 - std::exp(-p.hi));
}

}  // namespace kern
}  // namespace spiral
