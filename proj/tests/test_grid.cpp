#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "catmood/grid.hpp"
#include "catmood/models.hpp"

using namespace catmood;

namespace {

Field make_1d(int nx, int ghost, const std::vector<double>& interior) {
  Mesh mesh;
  mesh.nx = nx;
  mesh.ny = 1;
  mesh.dx = 1.0 / nx;
  mesh.ghost = ghost;
  Field f(mesh, 1);
  for (int i = 0; i < nx; ++i) f.at(i, 0) = scalar_state(interior[i]);
  return f;
}

}  // namespace

TEST_CASE("cell centers") {
  Mesh mesh;
  mesh.nx = 2;
  mesh.dx = 0.5;
  CHECK(mesh.cx(0) == doctest::Approx(0.25));
  CHECK(mesh.cx(1) == doctest::Approx(0.75));

  Mesh wide;
  wide.nx = 100;
  wide.x0 = -10.0;
  wide.dx = 20.0 / 100;
  CHECK(wide.cx(0) == doctest::Approx(-9.9));
}

TEST_CASE("periodic ghosts wrap around") {
  Field f = make_1d(4, 2, {1, 2, 3, 4});
  fill_ghosts(f, BoundaryCondition::periodic());
  CHECK(f.at(-2, 0)[0] == 3.0);
  CHECK(f.at(-1, 0)[0] == 4.0);
  CHECK(f.at(4, 0)[0] == 1.0);
  CHECK(f.at(5, 0)[0] == 2.0);
}

TEST_CASE("outflow ghosts copy the nearest interior value") {
  Field f = make_1d(4, 2, {1, 2, 3, 4});
  fill_ghosts(f, BoundaryCondition::outflow());
  CHECK(f.at(-2, 0)[0] == 1.0);
  CHECK(f.at(-1, 0)[0] == 1.0);
  CHECK(f.at(4, 0)[0] == 4.0);
  CHECK(f.at(5, 0)[0] == 4.0);
}

TEST_CASE("one-sided periodic pairing is rejected") {
  Field f = make_1d(4, 1, {1, 2, 3, 4});
  BoundaryCondition bc;
  bc.left = BcKind::Periodic;
  bc.right = BcKind::ZeroNeumann;
  CHECK_THROWS_AS(fill_ghosts(f, bc), ConfigError);
}

TEST_CASE("inflow segment writes the prescribed state, outflow elsewhere") {
  const Euler model{GasParams{5.0 / 3.0}};
  Mesh mesh;
  mesh.nx = 10;
  mesh.ny = 10;
  mesh.x0 = 0.0;
  mesh.y0 = -0.25;
  mesh.dx = 1.0 / 10;
  mesh.dy = 0.5 / 10;
  mesh.ghost = 2;
  Field f(mesh, 4);
  const State ambient = model.to_conserved(EulerPrimitive{0.5, 0, 0, 0.4127});
  const State jet = model.to_conserved(EulerPrimitive{5, 800, 0, 0.4127});
  for (int j = 0; j < 10; ++j)
    for (int i = 0; i < 10; ++i) f.at(i, j) = ambient;

  BoundaryCondition bc = BoundaryCondition::outflow();
  bc.left = BcKind::DirichletInflow;
  bc.left_inflow = InflowSpec{jet, -0.05, 0.05};
  fill_ghosts(f, bc);

  // rows with center y in [-0.05, 0.05]: j = 4 (y=-0.025) and j = 5 (0.025)
  CHECK(f.at(-1, 4)[0] == doctest::Approx(5.0));
  CHECK(f.at(-2, 5)[1] == doctest::Approx(5.0 * 800.0));
  // outside the segment: copy of the interior
  CHECK(f.at(-1, 0)[0] == doctest::Approx(0.5));
  CHECK(f.at(-1, 9)[1] == doctest::Approx(0.0));
  // other sides are outflow
  CHECK(f.at(10, 4)[0] == doctest::Approx(0.5));
}

TEST_CASE("filling is idempotent and periodic offsets match") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-1, 1);
  Mesh mesh;
  mesh.nx = 6;
  mesh.ny = 5;
  mesh.dx = mesh.dy = 0.2;
  mesh.ghost = 3;
  for (const auto& bc :
       {BoundaryCondition::periodic(), BoundaryCondition::outflow()}) {
    Field f(mesh, 4);
    for (int j = 0; j < mesh.ny; ++j)
      for (int i = 0; i < mesh.nx; ++i)
        f.at(i, j) = State{dist(rng), dist(rng), dist(rng), dist(rng)};
    fill_ghosts(f, bc);
    Field once = f;
    fill_ghosts(f, bc);
    CHECK(f == once);
  }

  Field f(mesh, 1);
  for (int j = 0; j < mesh.ny; ++j)
    for (int i = 0; i < mesh.nx; ++i) f.at(i, j) = scalar_state(dist(rng));
  fill_ghosts(f, BoundaryCondition::periodic());
  for (int g = 1; g <= mesh.ghost; ++g)
    for (int j = 0; j < mesh.ny; ++j)
      CHECK(f.at(-g, j)[0] == f.at(mesh.nx - g, j)[0]);
}
