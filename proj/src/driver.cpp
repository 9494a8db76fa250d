#include "catmood/driver.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace catmood {

namespace {

template <class M>
std::array<double, 4> totals(const Field& field) {
  const Mesh& m = field.mesh();
  const double vol = m.dx * (m.ny > 1 ? m.dy : 1.0);
  std::array<double, 4> t{};
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i)
      for (int c = 0; c < M::ncomp; ++c) t[c] += field.at(i, j)[c] * vol;
  return t;
}

// Net boundary outflow of the flux field, scaled to the same units as the
// cell totals; the discrete update satisfies totals^{n+1} = totals^n - this.
std::array<double, 4> boundary_outflow(const FluxField& fluxes,
                                       const Mesh& mesh, double dt) {
  std::array<double, 4> s{};
  const double wy = mesh.ny > 1 ? mesh.dy : 1.0;
  for (int j = 0; j < mesh.ny; ++j)
    for (int c = 0; c < 4; ++c)
      s[c] += dt * wy * (fluxes.FX(mesh.nx, j)[c] - fluxes.FX(0, j)[c]);
  if (mesh.ny > 1)
    for (int i = 0; i < mesh.nx; ++i)
      for (int c = 0; c < 4; ++c)
        s[c] += dt * mesh.dx * (fluxes.FY(i, mesh.ny)[c] - fluxes.FY(i, 0)[c]);
  return s;
}

template <class M>
void check_admissible(const Field& field, const M& model, int step) {
  const Mesh& m = field.mesh();
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i)
      if (!model.admissible(field.at(i, j))) {
        std::ostringstream msg;
        msg << "non-admissible state detected at step " << step << ", cell ("
            << i << "," << j << "): (";
        for (int c = 0; c < M::ncomp; ++c)
          msg << field.at(i, j)[c] << (c + 1 < M::ncomp ? "," : ")");
        throw SolverFatal(msg.str());
      }
}

template <class M>
void first_order_fluxes(const Field& field, LowFlux kind, const M& model,
                        FluxField& out, Exec exec) {
  const Mesh& mesh = field.mesh();
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for collapse(2) schedule(static) if (par)
  for (int j = 0; j < mesh.ny; ++j)
    for (int ii = 0; ii <= mesh.nx; ++ii)
      out.FX(ii, j) = low_order_flux(kind, Axis::X, field.at(ii - 1, j),
                                     field.at(ii, j), model);
  if (mesh.ny > 1) {
#pragma omp parallel for collapse(2) schedule(static) if (par)
    for (int jj = 0; jj <= mesh.ny; ++jj)
      for (int i = 0; i < mesh.nx; ++i)
        out.FY(i, jj) = low_order_flux(kind, Axis::Y, field.at(i, jj - 1),
                                       field.at(i, jj), model);
  }
}

template <class M>
RunResult run_impl(const RunConfig& cfg, const CaseSpec& spec, const M& model,
                   const FrameSink& sink = {}) {
  const double tfinal = cfg.tfinal > 0 ? cfg.tfinal : spec.default_tfinal;
  const int ghost = std::max(cfg.scheme.max_half_width(), 2);
  Mesh mesh;
  mesh.nx = cfg.nx;
  mesh.ny = spec.two_d ? cfg.ny : 1;
  mesh.x0 = spec.x0;
  mesh.y0 = spec.y0;
  mesh.dx = (spec.x1 - spec.x0) / mesh.nx;
  mesh.dy = spec.two_d ? (spec.y1 - spec.y0) / mesh.ny : 1.0;
  mesh.ghost = ghost;

  Field field(mesh, M::ncomp);
  apply_initial_condition(spec, field);

  RunResult result;
  result.model = spec.model;
  result.gamma_used = spec.gamma;
  result.initial_totals = totals<M>(field);
  if (cfg.scheme.kind == SchemeKind::CatMood)
    result.stat_labels = cascade_labels(cfg.scheme.cascade);

  const int max_p = cfg.scheme.max_half_width();
  CoeffTable table(std::max(max_p, 2));
  FlopCounter* fc = cfg.count_flops ? &result.flops : nullptr;

  std::array<double, 4> boundary_acc{};
  Field scratch = field;  // update target for non-MOOD schemes
  const auto t_start = std::chrono::steady_clock::now();

  double t = 0.0;
  int step = 0;
  while (t < tfinal * (1.0 - 1e-14)) {
    if (cfg.max_steps >= 0 && step >= cfg.max_steps) break;
    fill_ghosts(field, spec.bc);
    double dt = compute_dt(field, cfg.cfl, model, cfg.exec);
    if (t + dt > tfinal) dt = tfinal - t;
    if (dt < 1e-14 * tfinal) {
      std::ostringstream msg;
      msg << "time step underflow at step " << step << ": dt=" << dt;
      throw SolverFatal(msg.str());
    }

    FluxField fluxes(mesh.nx, mesh.ny);
    StepDiag diag;
    diag.step = step;
    diag.t = t + dt;
    diag.dt = dt;

    switch (cfg.scheme.kind) {
      case SchemeKind::FirstOrder: {
        first_order_fluxes(field, cfg.scheme.flux, model, fluxes, cfg.exec);
        apply_flux_update(field, fluxes, dt, scratch, cfg.exec, fc);
        std::swap(field, scratch);
        check_admissible(field, model, step);
        break;
      }
      case SchemeKind::Cat: {
        CatOperators op(table, cfg.scheme.p, mesh.dx, mesh.dy, dt);
        if (mesh.ny > 1) {
          Cat2dWorkspace ws;
          ws.build(field, model, cfg.exec);
          compute_fluxes_2d(field, ws, op, model, fluxes, cfg.exec);
        } else {
          Plane f0(mesh);
          build_flux_plane_1d(field, model, f0, fc);
          compute_fluxes_1d(field, f0, op, model, fluxes, cfg.exec, fc);
        }
        apply_flux_update(field, fluxes, dt, scratch, cfg.exec, fc);
        if (fc && mesh.ny == 1)
          fc->flops += static_cast<std::int64_t>(mesh.nx) *
                       per_cell_table_share(op.q);
        std::swap(field, scratch);
        check_admissible(field, model, step);
        break;
      }
      case SchemeKind::Acat: {
        AcatParams params{cfg.scheme.p, cfg.scheme.limiter, cfg.scheme.flux};
        std::vector<CatOperators> ops;
        for (int p = 1; p <= cfg.scheme.p; ++p)
          ops.emplace_back(table, p, mesh.dx, mesh.dy, dt);
        if (mesh.ny > 1) {
          Cat2dWorkspace ws;
          ws.build(field, model, cfg.exec);
          acat_fluxes_2d(field, ws, ops, model, params, table, fluxes,
                         cfg.exec);
        } else {
          Plane f0(mesh);
          build_flux_plane_1d(field, model, f0, fc);
          acat_fluxes_1d(field, f0, ops, model, params, table, fluxes,
                         cfg.exec);
        }
        apply_flux_update(field, fluxes, dt, scratch, cfg.exec, fc);
        std::swap(field, scratch);
        check_admissible(field, model, step);
        break;
      }
      case SchemeKind::CatMood: {
        MoodStepStats stats =
            mood_step(field, cfg.scheme.cascade, table, dt, cfg.detection,
                      cfg.detection_mode, model, cfg.exec, scratch, fluxes);
        std::swap(field, scratch);
        if (cfg.detection_mode != DetectionMode::Normal)
          check_admissible(field, model, step);
        for (int s = 0; s < cfg.scheme.cascade.stages(); ++s)
          diag.pct.push_back(stats.pct(s));
        break;
      }
    }

    const auto out = boundary_outflow(fluxes, mesh, dt);
    for (int c = 0; c < 4; ++c) boundary_acc[c] += out[c];
    t += dt;
    ++step;
    result.diags.push_back(std::move(diag));
    if (sink && cfg.output_every > 0 && step % cfg.output_every == 0)
      sink(field, step, t);

    const auto now_totals = totals<M>(field);
    for (int c = 0; c < M::ncomp; ++c) {
      const double expected = result.initial_totals[c] - boundary_acc[c];
      const double scale = std::max(std::abs(result.initial_totals[c]), 1.0);
      result.max_conservation_residual =
          std::max(result.max_conservation_residual,
                   std::abs(now_totals[c] - expected) / scale);
    }
  }

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  result.t_end = t;
  result.steps = step;
  result.final_totals = totals<M>(field);
  result.field = std::move(field);
  return result;
}

}  // namespace

SchemeSpec parse_scheme(const std::string& name) {
  SchemeSpec s;
  if (name == "rusanov" || name == "hll" || name == "hllc") {
    s.kind = SchemeKind::FirstOrder;
    s.flux = name == "rusanov" ? LowFlux::Rusanov
                               : (name == "hll" ? LowFlux::Hll : LowFlux::Hllc);
  } else if (name == "cat2" || name == "cat4" || name == "cat6" ||
             name == "cat8" || name == "cat10") {
    s.kind = SchemeKind::Cat;
    s.p = std::stoi(name.substr(3)) / 2;
  } else if (name == "acat2" || name == "acat4" || name == "acat6") {
    s.kind = SchemeKind::Acat;
    s.p = std::stoi(name.substr(4)) / 2;
  } else if (name == "catmood2" || name == "catmood4" || name == "catmood6") {
    s.kind = SchemeKind::CatMood;
    const int p = std::stoi(name.substr(7)) / 2;
    s.cascade.cat_orders.clear();
    s.cascade.cat_orders.push_back(p);
    if (p > 1) s.cascade.cat_orders.push_back(1);  // CAT2 kept, CAT4 optional
  } else {
    throw ConfigError("unknown scheme '" + name + "'");
  }
  return s;
}

std::string scheme_label(const SchemeSpec& scheme) {
  switch (scheme.kind) {
    case SchemeKind::FirstOrder: return low_flux_name(scheme.flux);
    case SchemeKind::Cat: return "cat" + std::to_string(2 * scheme.p);
    case SchemeKind::Acat: return "acat" + std::to_string(2 * scheme.p);
    case SchemeKind::CatMood: {
      std::string label = "catmood";
      label += std::to_string(2 * scheme.cascade.cat_orders.at(0));
      return label;
    }
  }
  return "?";
}

std::vector<std::string> cascade_labels(const MoodCascade& cascade) {
  std::vector<std::string> labels;
  for (int p : cascade.cat_orders)
    labels.push_back("cat" + std::to_string(2 * p));
  labels.push_back(low_flux_name(cascade.parachute));
  return labels;
}

RunResult run(const RunConfig& config, const FrameSink& sink) {
  const CaseSpec spec = make_case(config.case_name, config.gamma);
  switch (spec.model) {
    case ModelKind::Euler:
      return run_impl(config, spec, Euler{GasParams{spec.gamma}}, sink);
    case ModelKind::Advection:
      return run_impl(config, spec, LinearAdvection{1.0}, sink);
    case ModelKind::Burgers:
      return run_impl(config, spec, Burgers{}, sink);
  }
  throw ConfigError("unhandled model kind");
}

std::vector<ConvergenceRow> convergence_study(
    const RunConfig& base, const std::vector<int>& resolutions) {
  const CaseSpec spec = make_case(base.case_name, base.gamma);
  if (!spec.exact)
    throw ConfigError("case '" + base.case_name +
                      "' has no exact solution for a convergence study");
  std::vector<ConvergenceRow> rows;
  for (int n : resolutions) {
    RunConfig cfg = base;
    cfg.nx = n;
    cfg.ny = n;
    RunResult r = run(cfg);
    const Mesh& m = r.field.mesh();
    const double vol = m.dx * (m.ny > 1 ? m.dy : 1.0);
    double err = 0.0;
    for (int j = 0; j < m.ny; ++j)
      for (int i = 0; i < m.nx; ++i) {
        const State ex =
            spec.exact(m.cx(i), spec.two_d ? m.cy(j) : 0.0, r.t_end);
        err += std::abs(r.field.at(i, j)[0] - ex[0]) * vol;
      }
    ConvergenceRow row;
    row.n = n;
    row.l1_error = err;
    if (!rows.empty())
      row.order = std::log(rows.back().l1_error / err) /
                  std::log(static_cast<double>(n) / rows.back().n);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace catmood
