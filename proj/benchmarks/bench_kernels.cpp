// Times the serial reference sweeps against the OpenMP ones on a smooth
// Euler field and prints the speedups.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "catmood/cases.hpp"
#include "catmood/driver.hpp"

using namespace catmood;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

template <class F>
double time_best_of(int reps, F&& body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    body();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 128;
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;

  const CaseSpec spec = make_case("vortex");
  const Euler model{GasParams{spec.gamma}};
  Mesh mesh;
  mesh.nx = mesh.ny = n;
  mesh.x0 = spec.x0;
  mesh.y0 = spec.y0;
  mesh.dx = (spec.x1 - spec.x0) / n;
  mesh.dy = (spec.y1 - spec.y0) / n;
  mesh.ghost = 3;
  Field field(mesh, 4);
  apply_initial_condition(spec, field);
  fill_ghosts(field, spec.bc);

  CoeffTable table(3);
  const double dt = 0.4 * mesh.dx / 3.0;

  std::printf("grid %dx%d, threads available: %d\n", n, n,
              omp_get_max_threads());
  std::printf("%-26s %12s %12s %8s\n", "kernel", "serial [s]", "openmp [s]",
              "speedup");

  for (int p = 1; p <= 3; ++p) {
    CatOperators op(table, p, mesh.dx, mesh.dy, dt);
    Cat2dWorkspace ws;
    ws.build(field, model, Exec::Serial);
    FluxField fa(n, n), fb(n, n);
    const double ts = time_best_of(reps, [&] {
      compute_fluxes_2d(field, ws, op, model, fa, Exec::Serial);
    });
    const double tp = time_best_of(reps, [&] {
      compute_fluxes_2d(field, ws, op, model, fb, Exec::Parallel);
    });
    char name[32];
    std::snprintf(name, sizeof name, "cat%d flux sweep", 2 * p);
    std::printf("%-26s %12.4f %12.4f %7.2fx\n", name, ts, tp, ts / tp);
  }

  {
    FluxField fa(n, n), fb(n, n);
    const double ts = time_best_of(reps, [&] {
      Field out = field;
      FluxField fl(n, n);
      MoodCascade cascade;
      mood_step(field, cascade, table, dt, DetectionParams{},
                DetectionMode::Normal, model, Exec::Serial, out, fl);
    });
    const double tp = time_best_of(reps, [&] {
      Field out = field;
      FluxField fl(n, n);
      MoodCascade cascade;
      mood_step(field, cascade, table, dt, DetectionParams{},
                DetectionMode::Normal, model, Exec::Parallel, out, fl);
    });
    std::printf("%-26s %12.4f %12.4f %7.2fx\n", "catmood6 step", ts, tp,
                ts / tp);
  }

  {
    Field a = field, b = field;
    const double ts = time_best_of(
        reps, [&] { (void)compute_dt(a, 0.4, model, Exec::Serial); });
    const double tp = time_best_of(
        reps, [&] { (void)compute_dt(b, 0.4, model, Exec::Parallel); });
    std::printf("%-26s %12.4f %12.4f %7.2fx\n", "wave-speed reduction", ts, tp,
                ts / tp);
  }
  return 0;
}
