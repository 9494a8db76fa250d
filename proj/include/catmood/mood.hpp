#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <vector>

#include "catmood/acat.hpp"
#include "catmood/cat_core.hpp"
#include "catmood/riemann.hpp"

namespace catmood {

struct DetectionParams {
  double eps1 = 1e-4;  // absolute relaxation floor
  double eps2 = 1e-3;  // relative relaxation factor
};

enum class DetectionMode { Normal, AcceptAll, RejectAll };

// Tri-state troubled-cell marker: 1 failed a criterion, -1 neighbors a
// failed cell, 0 valid.
struct MoodMask {
  int nx = 0, ny = 0;
  std::vector<signed char> marker;

  MoodMask() = default;
  MoodMask(int nx_in, int ny_in)
      : nx(nx_in), ny(ny_in),
        marker(static_cast<size_t>(nx_in) * ny_in, 0) {}

  signed char& at(int i, int j) {
    return marker[static_cast<size_t>(j) * nx + i];
  }
  signed char at(int i, int j) const {
    return marker[static_cast<size_t>(j) * nx + i];
  }
  std::int64_t count(signed char v) const {
    return std::count(marker.begin(), marker.end(), v);
  }
};

// Marks every face/corner neighbor of a marker-1 cell that is still 0.
void propagate_neighbor_marks(MoodMask& mask);

inline bool cad_check(const State& candidate, int ncomp) {
  return all_finite(candidate, ncomp);
}

inline bool pad_check(const State& candidate, const Euler& model) {
  return candidate[0] > 0.0 && model.pressure(candidate) > 0.0;
}

inline bool nad_check_minmax(double w_star, double w_min, double w_max,
                             const DetectionParams& p) {
  const double delta = std::max(p.eps1, p.eps2 * (w_max - w_min));
  return w_star >= w_min - delta && w_star <= w_max + delta;
}

inline bool nad_check(double w_star, std::span<const double> neighborhood,
                      const DetectionParams& p) {
  double lo = neighborhood[0], hi = neighborhood[0];
  for (double w : neighborhood) {
    lo = std::min(lo, w);
    hi = std::max(hi, w);
  }
  return nad_check_minmax(w_star, lo, hi, p);
}

namespace detail {

// CAD -> PAD -> NAD chain for one cell, short-circuiting on the first
// failure. NAD checks density and pressure only, against the t^n values
// over the centered (2P+1)-wide block (including ghosts at the border).
template <class M>
bool cell_valid(const Field& candidate, const Field& at_tn, int i, int j,
                int p_used, const DetectionParams& dp, const M& model) {
  const State& s = candidate.at(i, j);
  if (!cad_check(s, M::ncomp)) return false;
  const bool two_d = candidate.mesh().ny > 1;
  const int jlo = two_d ? -p_used : 0, jhi = two_d ? p_used : 0;
  if constexpr (std::is_same_v<M, Euler>) {
    if (!pad_check(s, model)) return false;
    double rho_lo = at_tn.at(i, j)[0], rho_hi = rho_lo;
    double p_lo = model.pressure(at_tn.at(i, j)), p_hi = p_lo;
    for (int dj = jlo; dj <= jhi; ++dj)
      for (int di = -p_used; di <= p_used; ++di) {
        const State& w = at_tn.at(i + di, j + dj);
        const double pr = model.pressure(w);
        rho_lo = std::min(rho_lo, w[0]);
        rho_hi = std::max(rho_hi, w[0]);
        p_lo = std::min(p_lo, pr);
        p_hi = std::max(p_hi, pr);
      }
    if (!nad_check_minmax(s[0], rho_lo, rho_hi, dp)) return false;
    return nad_check_minmax(model.pressure(s), p_lo, p_hi, dp);
  } else {
    double lo = at_tn.at(i, j)[0], hi = lo;
    for (int dj = jlo; dj <= jhi; ++dj)
      for (int di = -p_used; di <= p_used; ++di) {
        const double w = at_tn.at(i + di, j + dj)[0];
        lo = std::min(lo, w);
        hi = std::max(hi, w);
      }
    return nad_check_minmax(s[0], lo, hi, dp);
  }
}

}  // namespace detail

// Full-domain detection pass: chain per cell, then neighbor propagation.
template <class M>
MoodMask detect(const Field& candidate, const Field& at_tn, int p_used,
                const DetectionParams& dp, const M& model) {
  const Mesh& mesh = candidate.mesh();
  MoodMask mask(mesh.nx, mesh.ny);
  for (int j = 0; j < mesh.ny; ++j)
    for (int i = 0; i < mesh.nx; ++i)
      mask.at(i, j) =
          detail::cell_valid(candidate, at_tn, i, j, p_used, dp, model) ? 0 : 1;
  propagate_neighbor_marks(mask);
  return mask;
}

struct MoodCascade {
  std::vector<int> cat_orders = {3, 1};  // half-widths: CAT6 -> CAT2
  LowFlux parachute = LowFlux::Hllc;

  int stages() const { return static_cast<int>(cat_orders.size()) + 1; }
  int max_p() const {
    int p = 1;
    for (int o : cat_orders) p = std::max(p, o);
    return p;
  }
};

struct MoodStepStats {
  std::vector<std::int64_t> finalized;  // per cascade stage
  std::int64_t ncells = 0;
  int detection_passes = 0;

  double pct(int stage) const {
    return 100.0 * static_cast<double>(finalized[stage]) /
           static_cast<double>(ncells);
  }
};

// One a-posteriori limited step. Ghost cells of `at_tn` must be filled; dt
// is frozen for the whole step and every recomputation reads t^n data only.
// Fluxes are single-valued per interface: when a stage downgrades the
// faces of the cells that failed detection, both adjacent cells are
// refreshed from the stored flux field, so the update telescopes exactly.
template <class M>
MoodStepStats mood_step(const Field& at_tn, const MoodCascade& cascade,
                        const CoeffTable& table, double dt,
                        const DetectionParams& dp, DetectionMode mode,
                        const M& model, Exec exec, Field& out,
                        FluxField& fluxes) {
  const Mesh& mesh = at_tn.mesh();
  const int nx = mesh.nx, ny = mesh.ny;
  const bool two_d = ny > 1;
  const std::int64_t ncells = static_cast<std::int64_t>(nx) * ny;

  MoodStepStats stats;
  stats.finalized.assign(cascade.stages(), 0);
  stats.ncells = ncells;

  Cat2dWorkspace ws;
  Plane f0_1d;
  if (two_d) {
    ws.build(at_tn, model, exec);
  } else {
    f0_1d = Plane(mesh);
    build_flux_plane_1d(at_tn, model, f0_1d);
  }

  // Stage 0: full sweep with the cascade head.
  {
    CatOperators op(table, cascade.cat_orders.at(0), mesh.dx, mesh.dy, dt);
    if (two_d)
      compute_fluxes_2d(at_tn, ws, op, model, fluxes, exec);
    else
      compute_fluxes_1d(at_tn, f0_1d, op, model, fluxes, exec);
  }
  apply_flux_update(at_tn, fluxes, dt, out, exec);

  if (mode == DetectionMode::AcceptAll) {
    stats.finalized[0] = ncells;
    return stats;
  }

  std::vector<signed char> finalized_stage(static_cast<size_t>(ncells), 0);
  MoodMask mask(nx, ny);

  // Detect over a subset of cells; marker set fresh for each checked cell.
  auto run_detect = [&](const std::vector<std::pair<int, int>>& cells,
                        int p_used, int stage) {
    stats.detection_passes++;
    const bool par = exec == Exec::Parallel;
    const std::int64_t n = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(static) if (par)
    for (std::int64_t c = 0; c < n; ++c) {
      const auto [i, j] = cells[c];
      const bool ok =
          mode != DetectionMode::RejectAll &&
          detail::cell_valid(out, at_tn, i, j, p_used, dp, model);
      mask.at(i, j) = ok ? 0 : 1;
      if (ok) finalized_stage[static_cast<size_t>(j) * nx + i] =
          static_cast<signed char>(stage);
    }
    propagate_neighbor_marks(mask);
  };

  std::vector<std::pair<int, int>> all_cells;
  all_cells.reserve(static_cast<size_t>(ncells));
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) all_cells.emplace_back(i, j);
  run_detect(all_cells, cascade.cat_orders.at(0), 0);

  for (int stage = 1; stage < cascade.stages(); ++stage) {
    // Troubled set and the faces to downgrade (faces of failed cells).
    std::vector<std::pair<int, int>> troubled;
    std::vector<std::pair<int, int>> faces_x, faces_y;  // FX(ii,j), FY(i,jj)
    std::vector<signed char> fxseen(static_cast<size_t>(nx + 1) * ny, 0);
    std::vector<signed char> fyseen(
        two_d ? static_cast<size_t>(nx) * (ny + 1) : 0, 0);
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i) {
        if (mask.at(i, j) == 0) continue;
        troubled.emplace_back(i, j);
        if (mask.at(i, j) != 1) continue;
        auto add_fx = [&](int ii) {
          auto& seen = fxseen[static_cast<size_t>(j) * (nx + 1) + ii];
          if (!seen) {
            seen = 1;
            faces_x.emplace_back(ii, j);
          }
        };
        add_fx(i);
        add_fx(i + 1);
        if (two_d) {
          auto add_fy = [&](int jj) {
            auto& seen = fyseen[static_cast<size_t>(jj) * nx + i];
            if (!seen) {
              seen = 1;
              faces_y.emplace_back(i, jj);
            }
          };
          add_fy(j);
          add_fy(j + 1);
        }
      }
    if (troubled.empty()) break;

    const bool is_parachute = stage == cascade.stages() - 1;
    const bool par = exec == Exec::Parallel;
    const std::int64_t nfx = static_cast<std::int64_t>(faces_x.size());
    const std::int64_t nfy = static_cast<std::int64_t>(faces_y.size());

    if (!is_parachute) {
      const int p_stage = cascade.cat_orders.at(stage);
      CatOperators op(table, p_stage, mesh.dx, mesh.dy, dt);
#pragma omp parallel for schedule(static) if (par)
      for (std::int64_t f = 0; f < nfx; ++f) {
        const auto [ii, j] = faces_x[f];
        fluxes.FX(ii, j) =
            two_d ? cat_interface_flux_2d(at_tn, ws, op, Axis::X, ii, j, model)
                  : cat_interface_flux_1d(at_tn, f0_1d, op, ii, model);
      }
#pragma omp parallel for schedule(static) if (par)
      for (std::int64_t f = 0; f < nfy; ++f) {
        const auto [i, jj] = faces_y[f];
        fluxes.FY(i, jj) =
            cat_interface_flux_2d(at_tn, ws, op, Axis::Y, i, jj, model);
      }
      for (const auto& [i, j] : troubled)
        refresh_cell(at_tn, fluxes, dt, i, j, out);
      run_detect(troubled, p_stage, stage);
    } else {
      // Parachute: first-order fluxes, accepted unconditionally.
#pragma omp parallel for schedule(static) if (par)
      for (std::int64_t f = 0; f < nfx; ++f) {
        const auto [ii, j] = faces_x[f];
        fluxes.FX(ii, j) = low_order_flux(cascade.parachute, Axis::X,
                                          at_tn.at(ii - 1, j), at_tn.at(ii, j),
                                          model);
      }
#pragma omp parallel for schedule(static) if (par)
      for (std::int64_t f = 0; f < nfy; ++f) {
        const auto [i, jj] = faces_y[f];
        fluxes.FY(i, jj) = low_order_flux(cascade.parachute, Axis::Y,
                                          at_tn.at(i, jj - 1), at_tn.at(i, jj),
                                          model);
      }
      for (const auto& [i, j] : troubled) {
        refresh_cell(at_tn, fluxes, dt, i, j, out);
        finalized_stage[static_cast<size_t>(j) * nx + i] =
            static_cast<signed char>(stage);
        mask.at(i, j) = 0;
        if (!model.admissible(out.at(i, j))) {
          std::ostringstream msg;
          msg << "parachute produced a non-admissible state at cell (" << i
              << "," << j << "): u=(";
          for (int c = 0; c < M::ncomp; ++c)
            msg << out.at(i, j)[c] << (c + 1 < M::ncomp ? "," : ")");
          msg << " fx-=(" << fluxes.FX(i, j)[0] << ",...)"
              << " fx+=(" << fluxes.FX(i + 1, j)[0] << ",...)";
          throw SolverFatal(msg.str());
        }
      }
    }
  }

  for (std::int64_t c = 0; c < ncells; ++c)
    stats.finalized[finalized_stage[static_cast<size_t>(c)]]++;
  return stats;
}

}  // namespace catmood
