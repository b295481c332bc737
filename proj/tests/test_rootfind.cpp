#include "doctest.h"
#include "spiral/rootfind.hpp"

#include <cmath>

using spiral::Rootfind;

TEST_CASE("fzero on smooth brackets") {
  auto r = Rootfind::fzero([](double x) { return x * x - 2; }, 0, 2);
  CHECK(r.converged);
  CHECK(std::fabs(r.x - std::sqrt(2.0)) < 1e-11);

  r = Rootfind::fzero([](double x) { return std::cos(x); }, 1, 2);
  CHECK(r.converged);
  CHECK(std::fabs(r.x - 1.5707963267948966) < 1e-11);
}

TEST_CASE("fzero survives hard brackets") {
  // nearly flat on one side
  auto r = Rootfind::fzero([](double x) { return std::tanh(50 * (x - 0.7)); },
                           -100, 100);
  CHECK(r.converged);
  CHECK(std::fabs(r.x - 0.7) < 1e-10);

  // root at an endpoint
  r = Rootfind::fzero([](double x) { return x; }, 0, 1);
  CHECK(r.converged);
  CHECK(r.x == 0);

  // no sign change reported as failure
  r = Rootfind::fzero([](double x) { return x * x + 1; }, -1, 1);
  CHECK(!r.converged);
}

TEST_CASE("fzero near-singular slope") {
  auto r = Rootfind::fzero([](double x) { return std::cbrt(x - 0.3); }, -4, 9);
  CHECK(r.converged);
  CHECK(std::fabs(r.x - 0.3) < 1e-10);
}
