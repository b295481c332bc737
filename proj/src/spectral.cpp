#include "spiral/spectral.hpp"

#include <cmath>
#include <complex>

#include "spiral/rootfind.hpp"

namespace spiral {

static const double pi = 3.141592653589793238462643;

bool CharRoots::real_pair(double a, Pair* out) {
  if (a < 1.0) return false;
  if (a == 1.0) { out->lo = out->hi = 0.0; return true; }
  // h(z) = z + exp(-z) has its minimum 1 at z = 0 and grows on both sides
  double hi = a;  // h(a) = a + exp(-a) > a
  double lo = -std::log(a);  // h(lo) = a - log(a) < a for a > 1
  out->lo = Rootfind::fzero(
                [a](double z) { return z + std::exp(-z) - a; }, lo - 1.0, 0.0)
                .x;
  out->hi = Rootfind::fzero(
                [a](double z) { return z + std::exp(-z) - a; }, 0.0, hi + 1.0)
                .x;
  return true;
}

CharRoots::Root CharRoots::branch(int k, double a) {
  // Split z = x + iy: y = exp(-x) sin(y) forces exp(-x) = y/sin(y) with
  // sin(y) > 0, i.e. y in (2k pi, (2k+1) pi); substituting into the real
  // part leaves log(sin(y)/y) + y cot(y) = a, decreasing from +inf to -inf
  // on that interval.
  double lo = 2 * k * pi + 1e-6;
  double hi = (2 * k + 1) * pi - 1e-6;
  auto res = Rootfind::fzero(
      [a](double y) {
        return std::log(std::sin(y) / y) + y * std::cos(y) / std::sin(y) - a;
      },
      lo, hi);
  Root z;
  z.im = res.x;
  z.re = std::log(std::sin(res.x) / res.x);
  return z;
}

double CharRoots::residual(Root z, double a) {
  std::complex<double> w(z.re, z.im);
  return std::abs(w + std::exp(-w) - a);
}

}  // namespace spiral
