#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "catmood/driver.hpp"
#include "catmood/models.hpp"

using namespace catmood;

namespace {
const Euler gas14{GasParams{1.4}};
}

TEST_CASE("x-flux of simple states") {
  const State rest = gas14.to_conserved(EulerPrimitive{1.0, 0.0, 0.0, 1.0});
  const State f_rest = gas14.flux(Axis::X, rest);
  CHECK(f_rest[0] == doctest::Approx(0.0));
  CHECK(f_rest[1] == doctest::Approx(1.0));
  CHECK(f_rest[2] == doctest::Approx(0.0));
  CHECK(f_rest[3] == doctest::Approx(0.0));

  // rho=1, u=1, v=0, p=1: E = 2.5 + 0.5 = 3, flux (1, 2, 0, 4)
  const State moving = gas14.to_conserved(EulerPrimitive{1.0, 1.0, 0.0, 1.0});
  CHECK(moving[3] == doctest::Approx(3.0));
  const State f = gas14.flux(Axis::X, moving);
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == doctest::Approx(2.0));
  CHECK(f[2] == doctest::Approx(0.0));
  CHECK(f[3] == doctest::Approx(4.0));
}

TEST_CASE("flux symmetry under exchanging the two directions") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.1, 2.0);
  for (int t = 0; t < 50; ++t) {
    const EulerPrimitive w{dist(rng), dist(rng) - 1.0, dist(rng) - 1.0,
                           dist(rng)};
    const State s = gas14.to_conserved(w);
    const State swapped = gas14.to_conserved(
        EulerPrimitive{w.rho, w.v, w.u, w.p});
    const State fx = gas14.flux(Axis::X, s);
    const State fy_sw = gas14.flux(Axis::Y, swapped);
    CHECK(fx[0] == doctest::Approx(fy_sw[0]).epsilon(1e-14));
    CHECK(fx[1] == doctest::Approx(fy_sw[2]).epsilon(1e-14));
    CHECK(fx[2] == doctest::Approx(fy_sw[1]).epsilon(1e-14));
    CHECK(fx[3] == doctest::Approx(fy_sw[3]).epsilon(1e-14));
  }
}

TEST_CASE("primitive conversion and round trip") {
  const EulerPrimitive w0 = gas14.to_primitive(State{1.0, 0.0, 0.0, 2.5});
  CHECK(w0.rho == doctest::Approx(1.0));
  CHECK(w0.p == doctest::Approx(1.0));

  const EulerPrimitive w1 = gas14.to_primitive(State{1.0, 1.0, 0.0, 3.0});
  CHECK(w1.u == doctest::Approx(1.0));
  CHECK(w1.p == doctest::Approx(1.0));

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(0.05, 3.0);
  for (int t = 0; t < 200; ++t) {
    const State s{dist(rng), dist(rng) - 1.5, dist(rng) - 1.5,
                  0.0};
    State s2 = s;
    s2[3] = 0.5 * (s[1] * s[1] + s[2] * s[2]) / s[0] + dist(rng);
    REQUIRE(gas14.admissible(s2));
    const State back = gas14.to_conserved(gas14.to_primitive(s2));
    for (int c = 0; c < 4; ++c)
      CHECK(back[c] == doctest::Approx(s2[c]).epsilon(1e-14));
  }
}

TEST_CASE("admissibility is exactly rho > 0 and p > 0") {
  CHECK(gas14.admissible(State{1.0, 0.0, 0.0, 2.5}));
  CHECK_FALSE(gas14.admissible(State{-0.1, 0.0, 0.0, 2.5}));
  // E below the kinetic energy: p = 0.4 (1 - 2) < 0
  CHECK_FALSE(gas14.admissible(State{1.0, 2.0, 0.0, 1.0}));
  CHECK(gas14.to_primitive(State{1.0, 2.0, 0.0, 1.0}).p < 0.0);
}

TEST_CASE("flux at a non-admissible state is NaN-flagged") {
  const State bad{-0.1, 0.0, 0.0, 2.5};
  const State f = gas14.flux(Axis::X, bad);
  for (int c = 0; c < 4; ++c) CHECK(std::isnan(f[c]));
  const State bad_p{1.0, 2.0, 0.0, 1.0};
  CHECK(std::isnan(gas14.flux(Axis::Y, bad_p)[0]));
}

TEST_CASE("sound speed") {
  const State s = gas14.to_conserved(EulerPrimitive{1.0, 0.0, 0.0, 1.0});
  CHECK(gas14.sound_speed(s) == doctest::Approx(std::sqrt(1.4)).epsilon(1e-14));

  const Euler g{GasParams{1.4}};
  const State s2 = g.to_conserved(EulerPrimitive{1.4, 0.3, -0.2, 1.0});
  CHECK(g.sound_speed(s2) == doctest::Approx(1.0).epsilon(1e-14));

  // a(rho, c^2 p) = c a(rho, p)
  const double c = 3.7;
  const State sa = g.to_conserved(EulerPrimitive{0.8, 0.0, 0.0, 0.6});
  const State sb = g.to_conserved(EulerPrimitive{0.8, 0.0, 0.0, c * c * 0.6});
  CHECK(g.sound_speed(sb) ==
        doctest::Approx(c * g.sound_speed(sa)).epsilon(1e-14));
}

TEST_CASE("largest wave speeds over a field") {
  Mesh mesh;
  mesh.nx = 4;
  mesh.ny = 3;
  mesh.dx = mesh.dy = 0.1;
  mesh.ghost = 2;
  Field field(mesh, 4);
  const State uniform = gas14.to_conserved(EulerPrimitive{1.0, 1.0, 0.0, 1.0});
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 4; ++i) field.at(i, j) = uniform;

  auto [lx, ly] = max_wave_speeds(field, gas14, Exec::Serial);
  CHECK(lx == doctest::Approx(1.0 + std::sqrt(1.4)).epsilon(1e-14));
  CHECK(ly == doctest::Approx(std::sqrt(1.4)).epsilon(1e-14));

  // all-at-rest field: both maxima are the largest sound speed
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 4; ++i)
      field.at(i, j) = gas14.to_conserved(EulerPrimitive{1.0, 0.0, 0.0, 1.0});
  auto [rx, ry] = max_wave_speeds(field, gas14, Exec::Serial);
  CHECK(rx == doctest::Approx(ry));

  // a faster cell strictly raises the x maximum
  field.at(2, 1) = gas14.to_conserved(EulerPrimitive{1.0, 2.5, 0.0, 1.0});
  auto [mx, my] = max_wave_speeds(field, gas14, Exec::Serial);
  CHECK(mx > rx);
  CHECK(my == doctest::Approx(ry));
}

TEST_CASE("scalar fluxes") {
  const LinearAdvection adv{1.0};
  CHECK(adv.flux(Axis::X, scalar_state(2.0))[0] == doctest::Approx(2.0));
  const Burgers burger;
  CHECK(burger.flux(Axis::X, scalar_state(2.0))[0] == doctest::Approx(2.0));
  CHECK(burger.flux(Axis::X, scalar_state(-3.0))[0] == doctest::Approx(4.5));
}
