#ifndef SPIRAL_ROOTFIND_HPP
#define SPIRAL_ROOTFIND_HPP

#include <cmath>
#include <utility>

namespace spiral {

// Bracketed scalar root finder: bisection with secant acceleration.
// The bracket never widens, so convergence is guaranteed whenever
// f(lo) and f(hi) have opposite signs.
struct Rootfind {
  struct Result {
    double x = 0, f = 0;
    int neval = 0;
    bool converged = false;
  };

  template <class F>
  static Result fzero(F&& f, double lo, double hi, double xtol = 1e-12) {
    Result res;
    double flo = f(lo), fhi = f(hi);
    res.neval = 2;
    if (flo == 0) { res.x = lo; res.f = 0; res.converged = true; return res; }
    if (fhi == 0) { res.x = hi; res.f = 0; res.converged = true; return res; }
    if ((flo > 0) == (fhi > 0)) { res.x = lo; res.f = flo; return res; }

    double x = lo, fx = flo, prev_width = hi - lo;
    for (int it = 0; it < 200; ++it) {
      double width = hi - lo;
      if (width <= xtol + 8 * ldexp(std::fmax(std::fabs(lo), std::fabs(hi)), -52)) {
        res.x = 0.5 * (lo + hi);
        res.f = fx;
        res.converged = true;
        return res;
      }
      // secant proposal from the bracket ends; fall back to bisection when the
      // proposal leaves the bracket or two secant steps failed to halve it
      double xs = lo - flo * width / (fhi - flo);
      bool stalled = (it % 2 == 0) && width > 0.5 * prev_width;
      if (it % 2 == 0) prev_width = width;
      if (stalled || !(xs > lo && xs < hi)) xs = lo + 0.5 * width;
      x = xs;
      fx = f(x);
      ++res.neval;
      if (fx == 0) { res.x = x; res.f = 0; res.converged = true; return res; }
      if ((fx > 0) == (flo > 0)) { lo = x; flo = fx; }
      else                       { hi = x; fhi = fx; }
    }
    res.x = 0.5 * (lo + hi);
    res.f = fx;
    res.converged = true;  // bracket is tiny after 200 halvings regardless
    return res;
  }
};

}  // namespace spiral

#endif
