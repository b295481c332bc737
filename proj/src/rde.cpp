#include "spiral/rde.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "spiral/constants.hpp"
#include "spiral/kernels.hpp"

namespace spiral {

static const double two_pi = 6.283185307179586476925287;

// ---------------------------------------------------------------- Track

static double hermite(const Track::Node& a, const Track::Node& b, double t) {
  double h = b.t - a.t;
  if (h <= 0) return b.y;
  double s = (t - a.t) / h;
  double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * a.y + (s3 - 2 * s2 + s) * h * a.dy +
         (-2 * s3 + 3 * s2) * b.y + (s3 - s2) * h * b.dy;
}

double Track::operator()(double t) const {
  if (nodes.empty()) return 0;
  if (t < nodes.front().t) return 0;
  if (t >= nodes.back().t) return nodes.back().y;
  // last node with abscissa <= t; at duplicated nodes this is the right value
  auto it = std::upper_bound(nodes.begin(), nodes.end(), t,
                             [](double v, const Node& n) { return v < n.t; });
  return hermite(*(it - 1), *it, t);
}

double Track::snap(double t) const {
  if (nodes.empty()) return t;
  double tol = 1e-12 * (1 + std::fabs(t));
  auto it = std::lower_bound(nodes.begin(), nodes.end(), t,
                             [](const Node& n, double v) { return n.t < v; });
  if (it != nodes.end() && std::fabs(it->t - t) <= tol) return it->t;
  if (it != nodes.begin() && std::fabs((it - 1)->t - t) <= tol)
    return (it - 1)->t;
  return t;
}

double Track::left(double t) const {
  if (nodes.empty()) return 0;
  if (t <= nodes.front().t) return t < nodes.front().t ? 0 : nodes.front().y;
  if (t >= nodes.back().t) return nodes.back().y;
  // first node with abscissa >= t ends the segment the left limit lives on
  auto it = std::lower_bound(nodes.begin(), nodes.end(), t,
                             [](const Node& n, double v) { return n.t < v; });
  if (it->t == t) return it->y;
  return hermite(*(it - 1), *it, t);
}

// ---------------------------------------------------------------- Control

double Rde::Control::beta(double ph) const {
  int i = segment(ph);
  return beta0[i] + slope[i] * (ph - phi[i]);
}

int Rde::Control::segment(double ph) const {
  auto it = std::upper_bound(phi.begin(), phi.end(), ph);
  int i = int(it - phi.begin()) - 1;
  if (i < 0) i = 0;
  return i;
}

int Rde::Control::segment_left(double ph) const {
  auto it = std::lower_bound(phi.begin(), phi.end(), ph);
  int i = int(it - phi.begin()) - 1;
  if (i < 0) i = 0;
  return i;
}

bool Rde::Control::convex() const {
  for (size_t i = 0; i < phi.size(); ++i) {
    if (slope[i] < -1.0 - 1e-12) return false;
    if (i + 1 < phi.size()) {
      double end = beta0[i] + slope[i] * (phi[i + 1] - phi[i]);
      if (beta0[i + 1] < end - 1e-12) return false;  // downward jump
    }
  }
  return true;
}

Rde::Control Rde::Control::constant(double beta_value) {
  Control c;
  c.phi = {0.0};
  c.beta0 = {beta_value};
  c.slope = {0.0};
  return c;
}

// ------------------------------------------------------------- delay map

// per-piece inverses land a rounding ulp off the shared corner; pull them
// onto it so the range tests below stay exact there
static double snap_corner(double p, double edge) {
  return std::fabs(p - edge) <= 1e-12 * (1 + std::fabs(edge)) ? edge : p;
}

// psi solving psi + 2pi + beta(psi) = phi; the map is increasing under the
// convexity constraint, so the containing control segment is found by scan.
double Rde::Result::psi(double phi) const {
  const Control& c = *control;
  double best = phi - two_pi - c.beta(0.0);  // exact when the hit is in seg 0
  for (size_t i = 0; i < c.phi.size(); ++i) {
    double p = (phi - two_pi - c.beta0[i] + c.slope[i] * c.phi[i]) /
               (1 + c.slope[i]);
    double lo = c.phi[i];
    double hi = i + 1 < c.phi.size() ? c.phi[i + 1] : 1e300;
    if (std::isfinite(p)) {
      p = snap_corner(p, lo);
      if (i + 1 < c.phi.size()) p = snap_corner(p, c.phi[i + 1]);
    }
    if (p >= lo && p < hi) return p;
    // before the control starts: slope-consistent extension, unless the
    // segment is a focusing one (1 + slope = 0) whose inverse degenerates
    if (i == 0 && std::isfinite(p) && p < lo) best = p;
  }
  return best;
}

// Left limit of psi.  It differs from psi(phi) exactly at the image of a
// focusing segment, where the delayed argument jumps forward: approaching
// from below, the burning point is still the end of the previous segment.
double Rde::Result::psi_left(double phi) const {
  const Control& c = *control;
  double best = phi - two_pi - c.beta(0.0);
  for (size_t i = 0; i < c.phi.size(); ++i) {
    double p = (phi - two_pi - c.beta0[i] + c.slope[i] * c.phi[i]) /
               (1 + c.slope[i]);
    double lo = c.phi[i];
    double hi = i + 1 < c.phi.size() ? c.phi[i + 1] : 1e300;
    if (std::isfinite(p)) {
      p = snap_corner(p, lo);
      if (i + 1 < c.phi.size()) p = snap_corner(p, c.phi[i + 1]);
    }
    if (p > lo && p <= hi) return p;
    if (i == 0 && std::isfinite(p) && p <= lo) best = p;
  }
  return best;
}

double Rde::Result::s_minus(double phi) const {
  double p = psi(phi);
  double s = p <= splus.t_begin() ? 0.0 : splus(p);
  for (const auto& a : atoms)
    if (a.first <= phi) s += a.second;
  return s;
}

// ---------------------------------------------------------------- integrate

Rde::Result Rde::integrate(const Control& c, const Options& o) {
  const Critical& K = Critical::get();
  Result res;
  res.control = &c;
  double h0 = o.step > 0 ? o.step : K.lambda / 4096.0;

  // breakpoints: control corners, source atoms, and their images under the
  // delay map, iterated across the whole range
  std::set<double> bps;
  bps.insert(0.0);
  bps.insert(o.phi_end);
  for (double p : c.phi)
    if (p > 0 && p < o.phi_end) bps.insert(p);
  for (auto& j : o.s_jumps)
    if (j.first > 0 && j.first < o.phi_end) bps.insert(j.first);
  for (size_t i = 0; i < c.phi.size(); ++i) {
    if (c.slope[i] >= 0) continue;  // beta floor crossing of this segment
    double cross = c.phi[i] + (c.beta0[i] - 1e-6) / (-c.slope[i]);
    double hi = i + 1 < c.phi.size() ? c.phi[i + 1] : o.phi_end;
    if (cross > c.phi[i] && cross < hi && cross > 0 && cross < o.phi_end)
      bps.insert(cross);
  }
  {
    std::vector<double> seed(bps.begin(), bps.end());
    for (size_t i = 0; i < seed.size(); ++i) {
      double img = seed[i] + two_pi + c.beta(seed[i]);
      if (img < o.phi_end) {
        if (bps.insert(img).second) seed.push_back(img);
      }
    }
  }

  double r = o.r0;
  res.r.push(0.0, r, 0.0);  // pre-jump state; dy unused (zero length segment)
  res.splus.push(0.0, 0.0, 0.0);
  double sp = 0;

  size_t jump_idx = 0;
  std::vector<std::pair<double, double>> jumps(o.s_jumps);
  std::sort(jumps.begin(), jumps.end());

  auto del = [&](double phi, bool from_left) -> double {
    double p0 = from_left ? res.psi_left(phi) : res.psi(phi);
    if (p0 < 0 || (from_left && p0 <= 0)) return 0;
    double p = res.r.snap(p0);
    int i = from_left ? c.segment_left(p) : c.segment(p);
    // a focusing segment moves its whole arc into one point; that transport
    // arrives as a supplied atom, the smooth feedback through it is nil
    if (1 + c.slope[i] == 0) return 0;
    double rp = from_left ? res.r.left(p) : res.r(p);
    double b = c.beta0[i] + c.slope[i] * (p - c.phi[i]);
    return rp / std::sin(b) / (1 + c.slope[i]);
  };
  auto rhs = [&](double phi, double y, bool left) -> double {
    double b = c.beta(phi);
    return y / std::tan(b) - del(phi, left);
  };

  std::vector<double> bp(bps.begin(), bps.end());
  for (size_t bi = 0; bi + 1 < bp.size(); ++bi) {
    double a = bp[bi], b = bp[bi + 1];
    // apply atoms sitting at the start of this span
    while (jump_idx < jumps.size() && jumps[jump_idx].first <= a + 1e-15) {
      r -= jumps[jump_idx].second;
      res.atoms.push_back(jumps[jump_idx]);
      if (r <= 0) {
        res.closed = true;
        res.phi_close = a;
        res.r.push(a, r < 0 ? 0.0 : r, 0.0);
        res.splus.push(a, sp, 0.0);
        return res;
      }
      ++jump_idx;
    }
    if (c.beta(a) < 1e-6 || c.beta(b - 1e-12) < 1e-6) {
      res.beta_floor = true;
      res.phi_floor = a;
      break;
    }
    // node carrying the right-side derivative: the delayed term kinks at
    // breakpoints and the Hermite segment ahead must not use the left slope
    res.r.push(a, r, rhs(a, r, false));
    res.splus.push(a, sp, r / std::sin(c.beta(a)));
    int n = (int)std::ceil((b - a) / h0);
    if (n < 1) n = 1;
    double h = (b - a) / n;
    for (int s = 0; s < n; ++s) {
      // land the last step exactly on b so the node pairs up with the next
      // span's start; a stray ulp here makes left() miss the pre-jump state
      double t0 = a + s * h, t1 = (s + 1 == n) ? b : t0 + h;
      double hs = t1 - t0;
      double k1 = rhs(t0, r, false);
      double k2 = rhs(t0 + 0.5 * hs, r + 0.5 * hs * k1, false);
      double k3 = rhs(t0 + 0.5 * hs, r + 0.5 * hs * k2, false);
      double k4 = rhs(t1, r + hs * k3, true);
      double r1 = r + hs / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
      double f1 = rhs(t1, r1, true);
      // built length grows with rate r/sin(beta); same RK4 weights
      double g1 = r / std::sin(c.beta(t0));
      double g2 = (r + 0.5 * hs * k1) / std::sin(c.beta(t0 + 0.5 * hs));
      double g3 = (r + 0.5 * hs * k2) / std::sin(c.beta(t0 + 0.5 * hs));
      double g4 = (r + hs * k3) / std::sin(c.beta(t1));
      double sp1 = sp + hs / 6 * (g1 + 2 * g2 + 2 * g3 + g4);

      if (r1 <= 0) {
        // locate the zero of the Hermite cubic by bisection
        Track::Node na{t0, r, k1}, nb{t1, r1, f1};
        double lo = t0, hi = t1;
        for (int it = 0; it < 80; ++it) {
          double mid = 0.5 * (lo + hi);
          (hermite(na, nb, mid) > 0 ? lo : hi) = mid;
        }
        res.closed = true;
        res.phi_close = 0.5 * (lo + hi);
        res.r.push(res.phi_close, 0.0, f1);
        res.splus.push(res.phi_close, sp1, 0.0);
        return res;
      }
      r = r1;
      sp = sp1;
      res.r.push(t1, r, f1);
      res.splus.push(t1, sp, r / std::sin(c.beta(t1)));
    }
  }
  return res;
}

std::vector<Rde::Row> Rde::trace(const Control& c, const Options& o, int n) {
  const Critical& K = Critical::get();
  Result res = integrate(c, o);
  double end = res.r.t_end();
  std::vector<Row> rows;
  rows.reserve(n + 1);
  for (int i = 0; i <= n; ++i) {
    double phi = end * i / n;
    Row w;
    w.phi = phi;
    w.r = res.r(phi);
    w.beta = c.beta(phi);
    w.s_plus = res.splus(phi);
    w.s_minus = res.s_minus(phi);
    w.L = o.init_len + w.s_plus;
    w.A = o.u0 + w.s_minus + (w.r - o.r0) - w.L / K.sigma;
    rows.push_back(w);
  }
  return rows;
}

// ------------------------------------------------------- saturated spiral

double saturated_radius(double alpha, double phi) {
  return kern::G(phi, alpha) - kern::G(phi - two_pi, alpha);
}

double saturated_divergence_margin(double alpha) {
  double cot = std::cos(alpha) / std::sin(alpha);
  double a = delay_coefficient(alpha);
  return (std::exp(two_pi * cot) - 1) * std::exp(-two_pi * cot + a) -
         std::exp(a * two_pi / (two_pi + alpha));
}

bool divergence_check(const std::function<double(double)>& rho, double t0,
                      double a, int samples) {
  double end = rho(t0 + 1);
  double maxmid = -1e300;
  for (int i = 0; i <= samples; ++i) {
    double t = t0 - 1 + 2.0 * i / samples;
    double v = rho(t);
    if (!(v > 0)) return false;
    if (t >= t0 && t < t0 + 1 - 1e-12 && v > maxmid) maxmid = v;
  }
  return a == 1.0 ? end > maxmid : end >= maxmid;
}

// ------------------------------------------------------------ delay_ode

Track delay_ode(double a, double tau_end,
                const std::vector<std::pair<double, double>>& jumps,
                const std::function<double(double)>& src,
                const std::vector<double>& src_breaks, double step) {
  double h0 = step > 0 ? step : 1.0 / 4096.0;
  std::set<double> bps;
  bps.insert(0.0);
  bps.insert(tau_end);
  for (auto& j : jumps)
    if (j.first >= 0 && j.first < tau_end) bps.insert(j.first);
  for (double t : src_breaks)
    if (t > 0 && t < tau_end) bps.insert(t);
  {
    std::vector<double> seed(bps.begin(), bps.end());
    for (size_t i = 0; i < seed.size(); ++i) {
      double img = seed[i] + 1;
      if (img < tau_end && bps.insert(img).second) seed.push_back(img);
    }
  }

  Track rho;
  double y = 0;
  std::vector<std::pair<double, double>> js(jumps);
  std::sort(js.begin(), js.end());
  size_t ji = 0;

  // a left-side stage evaluation at a declared source break needs the limit
  // from below, which a right-continuous src only exposes under a nudge
  auto S = [&](double t, bool left) -> double {
    if (!src) return 0.0;
    if (left)
      for (double b : src_breaks)
        if (std::fabs(t - b) < 1e-13) return src(t - 1e-9);
    return src(t);
  };
  auto rhs = [&](double t, double v, bool left_past) -> double {
    double tp = rho.snap(t - 1);
    double past = tp < 0 ? 0.0 : (left_past ? rho.left(tp) : rho(tp));
    return a * v - past + S(t, left_past);
  };

  rho.push(0.0, 0.0, S(0.0, false));  // pre-jump state
  std::vector<double> bp(bps.begin(), bps.end());
  for (size_t bi = 0; bi + 1 < bp.size(); ++bi) {
    double lo = bp[bi], hi = bp[bi + 1];
    while (ji < js.size() && js[ji].first <= lo + 1e-15) {
      y += js[ji].second;
      ++ji;
    }
    // right-side derivative for the segment ahead (kinks at breakpoints)
    rho.push(lo, y, rhs(lo, y, false));
    int n = (int)std::ceil((hi - lo) / h0);
    if (n < 1) n = 1;
    double h = (hi - lo) / n;
    for (int s = 0; s < n; ++s) {
      // pin the last step to hi so duplicate nodes at breaks pair up exactly
      double t0 = lo + s * h, t1 = (s + 1 == n) ? hi : t0 + h;
      double hs = t1 - t0;
      double k1 = rhs(t0, y, false);
      double k2 = rhs(t0 + 0.5 * hs, y + 0.5 * hs * k1, false);
      double k3 = rhs(t0 + 0.5 * hs, y + 0.5 * hs * k2, false);
      double k4 = rhs(t1, y + hs * k3, true);
      y += hs / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
      rho.push(t1, y, rhs(t1, y, true));
    }
  }
  return rho;
}

}  // namespace spiral
