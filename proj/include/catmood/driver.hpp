#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "catmood/acat.hpp"
#include "catmood/cases.hpp"
#include "catmood/mood.hpp"

namespace catmood {

enum class SchemeKind { FirstOrder, Cat, Acat, CatMood };

struct SchemeSpec {
  SchemeKind kind = SchemeKind::CatMood;
  int p = 3;                        // half-width for Cat / Acat
  LowFlux flux = LowFlux::Hllc;     // first-order / ACAT low / parachute
  MoodCascade cascade;              // CatMood stages
  LimiterKind limiter = LimiterKind::Minmod;

  int max_half_width() const {
    switch (kind) {
      case SchemeKind::FirstOrder: return 1;
      case SchemeKind::Cat:
      case SchemeKind::Acat: return p;
      case SchemeKind::CatMood: return cascade.max_p();
    }
    return 1;
  }
};

SchemeSpec parse_scheme(const std::string& name);
std::string scheme_label(const SchemeSpec& scheme);
// Stage names of a CatMood cascade ("cat6", ..., parachute flux name).
std::vector<std::string> cascade_labels(const MoodCascade& cascade);

struct RunConfig {
  std::string case_name = "vortex";
  SchemeSpec scheme;
  int nx = 50, ny = 50;
  double cfl = 0.4;
  double tfinal = -1.0;  // < 0: case default
  std::string outdir;
  int output_every = 0;
  DetectionParams detection;
  DetectionMode detection_mode = DetectionMode::Normal;
  double gamma = -1.0;   // < 0: case default
  Exec exec = Exec::Parallel;
  int max_steps = -1;
  bool count_flops = false;
};

struct StepDiag {
  int step = 0;
  double t = 0.0, dt = 0.0;
  std::vector<double> pct;  // per cascade stage, CatMood only
};

struct RunResult {
  Field field;
  double t_end = 0.0;
  int steps = 0;
  double wall_seconds = 0.0;
  std::vector<StepDiag> diags;
  std::vector<std::string> stat_labels;
  std::array<double, 4> initial_totals{}, final_totals{};
  // Largest per-component defect of the discrete flux budget
  // d/dt (sum u dV) = -(boundary flux), relative to the initial totals.
  double max_conservation_residual = 0.0;
  FlopCounter flops;
  double gamma_used = 1.4;
  ModelKind model = ModelKind::Euler;
};

// Per-frame output hook (CLI wires this to the CSV writer).
using FrameSink =
    std::function<void(const Field& field, int step, double t)>;

// Largest |u.n| + a per direction over the interior.
template <class M>
std::pair<double, double> max_wave_speeds(const Field& field, const M& model,
                                          Exec exec) {
  const Mesh& mesh = field.mesh();
  double lx = 0.0, ly = 0.0;
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) reduction(max : lx, ly) if (par)
  for (int j = 0; j < mesh.ny; ++j)
    for (int i = 0; i < mesh.nx; ++i) {
      lx = std::max(lx, model.max_abs_eigen(Axis::X, field.at(i, j)));
      if (mesh.ny > 1)
        ly = std::max(ly, model.max_abs_eigen(Axis::Y, field.at(i, j)));
    }
  return {lx, ly};
}

// CFL time step from the largest directional wave speeds.
template <class M>
double compute_dt(const Field& field, double cfl, const M& model, Exec exec) {
  const Mesh& mesh = field.mesh();
  const auto [lx, ly] = max_wave_speeds(field, model, exec);
  if (lx <= 0.0 && ly <= 0.0)
    throw ConfigError("all wave speeds vanish; no CFL time step exists");
  double dt = cfl * mesh.dx / lx;
  if (mesh.ny > 1) dt = std::min(dt, cfl * mesh.dy / ly);
  return dt;
}

RunResult run(const RunConfig& config, const FrameSink& sink = {});

struct ConvergenceRow {
  int n = 0;
  double l1_error = 0.0;
  double order = 0.0;  // 0 for the first row
};

// L1 density error against the case's exact solution at t_final, one run
// per resolution, with observed orders between consecutive rows.
std::vector<ConvergenceRow> convergence_study(const RunConfig& base,
                                              const std::vector<int>& resolutions);

}  // namespace catmood
