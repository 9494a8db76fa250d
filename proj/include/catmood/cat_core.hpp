#pragma once

#include <cassert>
#include <cmath>
#include <span>
#include <vector>

#include "catmood/exec.hpp"
#include "catmood/flops.hpp"
#include "catmood/grid.hpp"
#include "catmood/models.hpp"
#include "catmood/state.hpp"
#include "catmood/stencil.hpp"

namespace catmood {

constexpr int kMaxP = 5;
constexpr int kMaxQ = 2 * kMaxP;

// Per-sweep operator pack for one order 2P and one (dx, dy, dt): stencil
// weights plus the time-step coefficient tables that the flux recursion
// consumes. Rebuilt once per step; read-only during sweeps.
struct CatOperators {
  int p = 1, q = 2, r0 = 0;  // r0: local index of offset 0
  double dt = 0.0, inv_dx = 0.0, inv_dy = 0.0;
  double ghalf[kMaxQ];            // gamma^{0,1/2}
  double g1[kMaxQ][kMaxQ];        // gamma^{1,j}, first index = local j
  double gk0[kMaxQ][kMaxQ];       // gamma^{k,0}, first index = k
  double crk[kMaxQ][kMaxQ];       // (r dt)^k / k!, first index = local r
  double inv_dtk[kMaxQ];          // 1 / dt^k
  double term[kMaxQ];             // dt^k / (k+1)!

  CatOperators() = default;
  CatOperators(const CoeffTable& table, int half_width, double dx, double dy,
               double dt_in) {
    p = half_width;
    q = 2 * p;
    r0 = p - 1;
    dt = dt_in;
    inv_dx = 1.0 / dx;
    inv_dy = 1.0 / dy;
    auto gh = table.coeffs(p, 0, Offset::half());
    for (int s = 0; s < q; ++s) ghalf[s] = gh[s];
    for (int j = 0; j < q; ++j) {
      auto w = table.coeffs(p, 1, Offset::at_node(j - p + 1));
      for (int s = 0; s < q; ++s) g1[j][s] = w[s];
    }
    for (int k = 1; k < q; ++k) {
      auto w = table.coeffs(p, k, Offset::at_node(0));
      for (int s = 0; s < q; ++s) gk0[k][s] = w[s];
    }
    for (int r = 0; r < q; ++r) {
      const double c = (r - p + 1) * dt;
      double acc = 1.0;
      for (int k = 1; k < q; ++k) {
        acc *= c / k;
        crk[r][k] = acc;
      }
    }
    double dtk = 1.0, fact = 1.0;
    for (int k = 1; k < q; ++k) {
      dtk *= dt;
      fact *= (k + 1);
      inv_dtk[k] = 1.0 / dtk;
      term[k] = dtk / fact;
    }
  }
};

// Interface fluxes for one step: fx is (nx+1) x ny at vertical interfaces,
// fy is nx x (ny+1) at horizontal ones. FX(ii,j) sits between cells
// (ii-1,j) and (ii,j); FY(i,jj) between (i,jj-1) and (i,jj).
struct FluxField {
  int nx = 0, ny = 0;
  std::vector<State> fx, fy;

  FluxField() = default;
  FluxField(int nx_in, int ny_in) : nx(nx_in), ny(ny_in) {
    fx.assign(static_cast<size_t>(nx + 1) * ny, zero_state());
    if (ny > 1) fy.assign(static_cast<size_t>(nx) * (ny + 1), zero_state());
  }
  State& FX(int ii, int j) { return fx[static_cast<size_t>(j) * (nx + 1) + ii]; }
  const State& FX(int ii, int j) const {
    return fx[static_cast<size_t>(j) * (nx + 1) + ii];
  }
  State& FY(int i, int jj) { return fy[static_cast<size_t>(jj) * nx + i]; }
  const State& FY(int i, int jj) const {
    return fy[static_cast<size_t>(jj) * nx + i];
  }
};

// Ghost-extended plane of per-cell values (physical fluxes at t^n).
struct Plane {
  int nx = 0, ny = 0, ghost = 0, stride = 0;
  std::vector<State> v;

  Plane() = default;
  Plane(const Mesh& m) : nx(m.nx), ny(m.ny), ghost(m.ghost), stride(m.nx + 2 * m.ghost) {
    v.assign(static_cast<size_t>(stride) * (ny + 2 * ghost), zero_state());
  }
  State& at(int i, int j) {
    return v[static_cast<size_t>(j + ghost) * stride + (i + ghost)];
  }
  const State& at(int i, int j) const {
    return v[static_cast<size_t>(j + ghost) * stride + (i + ghost)];
  }
};

inline std::int64_t per_cell_table_share(int q) {
  // Per-step coefficient tables charged per cell, following the budget's
  // itemization of the precomputed Delta t powers.
  const std::int64_t a = static_cast<std::int64_t>(q - 1) * (q - 2) / 2;
  const std::int64_t b = static_cast<std::int64_t>(q - 1) * (q - 1) * (q + 2) / 2;
  return a + b + (q - 1);
}

/// Second-order flux of the linear scheme: a/2 (uL+uR) - a^2 dt/(2 dx) (uR-uL).
inline double lw_flux_linear(double u_left, double u_right, double a, double dt,
                             double dx) {
  return 0.5 * a * (u_right + u_left) -
         0.5 * a * a * dt / dx * (u_right - u_left);
}

// Order-2P interface flux from the 2P-point stencil u_{i-P+1..i+P} via the
// local space-time Taylor recursion. f0 holds the physical fluxes of the
// stencil states (shared across interfaces by the sweep). A Taylor state
// outside the admissible set yields a NaN flux that propagates to the
// returned value; detectors downstream absorb it.
template <class M>
State cat_flux_1d(const CatOperators& op, std::span<const State> u,
                  std::span<const State> f0, const M& model,
                  FlopCounter* fc = nullptr) {
  constexpr int m = M::ncomp;
  const int q = op.q;
  assert(static_cast<int>(u.size()) == q && static_cast<int>(f0.size()) == q);

  State taylor[kMaxQ][kMaxQ];  // [s][r] running truncated expansions
  State fcur[kMaxQ], fnext[kMaxQ], uk[kMaxQ];
  for (int s = 0; s < q; ++s) {
    fcur[s] = f0[s];
    for (int r = 0; r < q; ++r) taylor[s][r] = u[s];
  }

  State flux = zero_state();
  for (int c = 0; c < m; ++c) {
    double acc = 0.0;
    for (int s = 0; s < q; ++s) acc += op.ghalf[s] * fcur[s][c];
    flux[c] = acc;
  }

  for (int k = 1; k < q; ++k) {
    for (int s = 0; s < q; ++s) {
      for (int c = 0; c < m; ++c) {
        double acc = 0.0;
        for (int t = 0; t < q; ++t) acc += op.g1[s][t] * fcur[t][c];
        uk[s][c] = -acc * op.inv_dx;
      }
    }
    for (int s = 0; s < q; ++s) {
      State acc = zero_state();
      for (int r = 0; r < q; ++r) {
        const double g = op.gk0[k][r];
        if (r == op.r0) {
          for (int c = 0; c < m; ++c) acc[c] += g * f0[s][c];
        } else {
          const double ck = op.crk[r][k];
          for (int c = 0; c < m; ++c) taylor[s][r][c] += ck * uk[s][c];
          const State fv = model.flux(Axis::X, taylor[s][r]);
          for (int c = 0; c < m; ++c) acc[c] += g * fv[c];
        }
      }
      for (int c = 0; c < m; ++c) fnext[s][c] = acc[c] * op.inv_dtk[k];
    }
    for (int c = 0; c < m; ++c) {
      double acc = 0.0;
      for (int s = 0; s < q; ++s) acc += op.ghalf[s] * fnext[s][c];
      flux[c] += op.term[k] * acc;
    }
    for (int s = 0; s < q; ++s) fcur[s] = fnext[s];
    if (fc) {
      fc->flops += static_cast<std::int64_t>(q) * (q + 1)    // space derivative
                   + static_cast<std::int64_t>(q) * (q - 1)  // Taylor updates
                   + static_cast<std::int64_t>(q) * (q + 1); // time derivative
      fc->fevals += static_cast<std::int64_t>(q) * (q - 1);
    }
  }
  if (fc) fc->flops += static_cast<std::int64_t>(q) * q + (q - 1);
  return flux;
}

// Convenience overload evaluating the stencil fluxes itself.
template <class M>
State cat_flux_1d(const CatOperators& op, std::span<const State> u,
                  const M& model, FlopCounter* fc = nullptr) {
  State f0[kMaxQ];
  for (int s = 0; s < op.q; ++s) f0[s] = model.flux(Axis::X, u[s]);
  if (fc) fc->fevals += op.q;
  return cat_flux_1d(op, u, std::span<const State>(f0, op.q), model, fc);
}

// Expanded second-order closed form: F = 1/4 (f_i + f_{i+1}
// + f(u_i + dt u1) + f(u_{i+1} + dt u1)) with u1 = -(f_{i+1} - f_i)/dx.
// Regression oracle for the generic recursion at P = 1.
template <class M>
State cat2_flux_closed_form(const State& u_left, const State& u_right,
                            double dx, double dt, const M& model) {
  constexpr int m = M::ncomp;
  const State fl = model.flux(Axis::X, u_left);
  const State fr = model.flux(Axis::X, u_right);
  State u1, pl = u_left, pr = u_right;
  for (int c = 0; c < m; ++c) {
    u1[c] = -(fr[c] - fl[c]) / dx;
    pl[c] += dt * u1[c];
    pr[c] += dt * u1[c];
  }
  const State fpl = model.flux(Axis::X, pl);
  const State fpr = model.flux(Axis::X, pr);
  State flux = zero_state();
  for (int c = 0; c < m; ++c)
    flux[c] = 0.25 * (fl[c] + fr[c] + fpl[c] + fpr[c]);
  return flux;
}

// Fourth-order flux transcribed step by step from the explicit P = 2
// algorithm; independent cross-check of the generic recursion.
template <class M>
State cat4_flux_stepwise(const CoeffTable& table, std::span<const State> u,
                         double dx, double dt, const M& model) {
  constexpr int m = M::ncomp;
  assert(u.size() == 4);
  auto ghalf = table.coeffs(2, 0, Offset::half());
  std::span<const double> g1[4] = {
      table.coeffs(2, 1, Offset::at_node(-1)),
      table.coeffs(2, 1, Offset::at_node(0)),
      table.coeffs(2, 1, Offset::at_node(1)),
      table.coeffs(2, 1, Offset::at_node(2))};
  auto gt1 = table.coeffs(2, 1, Offset::at_node(0));
  auto gt2 = table.coeffs(2, 2, Offset::at_node(0));
  auto gt3 = table.coeffs(2, 3, Offset::at_node(0));

  State fn[4];
  for (int j = 0; j < 4; ++j) fn[j] = model.flux(Axis::X, u[j]);

  // Step 1: f^(0) at the interface.
  State f_half[4];
  for (int c = 0; c < m; ++c) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += ghalf[j] * fn[j][c];
    f_half[0][c] = acc;
  }

  State ud1[4], ud2[4], ud3[4], fd1[4], fd2[4];
  // Step 2: first time derivative of u at each position.
  for (int j = 0; j < 4; ++j)
    for (int c = 0; c < m; ++c) {
      double acc = 0.0;
      for (int s = 0; s < 4; ++s) acc += g1[j][s] * fn[s][c];
      ud1[j][c] = -acc / dx;
    }
  // Steps 3-4: Taylor states truncated at the first term, then the first
  // time derivative of f from the four time levels.
  for (int j = 0; j < 4; ++j)
    for (int c = 0; c < m; ++c) fd1[j][c] = 0.0;
  for (int j = 0; j < 4; ++j) {
    for (int r = -1; r <= 2; ++r) {
      State w = u[j];
      for (int c = 0; c < m; ++c) w[c] += r * dt * ud1[j][c];
      const State fv = (r == 0) ? fn[j] : model.flux(Axis::X, w);
      for (int c = 0; c < m; ++c) fd1[j][c] += gt1[r + 1] * fv[c];
    }
    for (int c = 0; c < m; ++c) fd1[j][c] /= dt;
  }
  // Step 5.
  for (int c = 0; c < m; ++c) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += ghalf[j] * fd1[j][c];
    f_half[1][c] = acc;
  }
  // Step 6: second derivative of u.
  for (int j = 0; j < 4; ++j)
    for (int c = 0; c < m; ++c) {
      double acc = 0.0;
      for (int s = 0; s < 4; ++s) acc += g1[j][s] * fd1[s][c];
      ud2[j][c] = -acc / dx;
    }
  // Steps 7-8.
  for (int j = 0; j < 4; ++j)
    for (int c = 0; c < m; ++c) fd2[j][c] = 0.0;
  for (int j = 0; j < 4; ++j) {
    for (int r = -1; r <= 2; ++r) {
      State w = u[j];
      for (int c = 0; c < m; ++c)
        w[c] += r * dt * ud1[j][c] + 0.5 * r * r * dt * dt * ud2[j][c];
      const State fv = (r == 0) ? fn[j] : model.flux(Axis::X, w);
      for (int c = 0; c < m; ++c) fd2[j][c] += gt2[r + 1] * fv[c];
    }
    for (int c = 0; c < m; ++c) fd2[j][c] /= dt * dt;
  }
  // Step 9.
  for (int c = 0; c < m; ++c) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += ghalf[j] * fd2[j][c];
    f_half[2][c] = acc;
  }
  // Step 10: third derivative of u.
  for (int j = 0; j < 4; ++j)
    for (int c = 0; c < m; ++c) {
      double acc = 0.0;
      for (int s = 0; s < 4; ++s) acc += g1[j][s] * fd2[s][c];
      ud3[j][c] = -acc / dx;
    }
  // Steps 11-12.
  State fd3[4];
  for (int j = 0; j < 4; ++j)
    for (int c = 0; c < m; ++c) fd3[j][c] = 0.0;
  for (int j = 0; j < 4; ++j) {
    for (int r = -1; r <= 2; ++r) {
      State w = u[j];
      const double rdt = r * dt;
      for (int c = 0; c < m; ++c)
        w[c] += rdt * ud1[j][c] + 0.5 * rdt * rdt * ud2[j][c] +
                rdt * rdt * rdt / 6.0 * ud3[j][c];
      const State fv = (r == 0) ? fn[j] : model.flux(Axis::X, w);
      for (int c = 0; c < m; ++c) fd3[j][c] += gt3[r + 1] * fv[c];
    }
    for (int c = 0; c < m; ++c) fd3[j][c] /= dt * dt * dt;
  }
  // Step 13.
  for (int c = 0; c < m; ++c) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += ghalf[j] * fd3[j][c];
    f_half[3][c] = acc;
  }
  // Step 14: assemble the flux Taylor sum.
  State flux;
  for (int c = 0; c < m; ++c)
    flux[c] = f_half[0][c] + dt * f_half[1][c] +
              0.5 * dt * dt * f_half[2][c] +
              dt * dt * dt / 6.0 * f_half[3][c];
  return flux;
}

// ---------------------------------------------------------------------------
// 1D sweeps

template <class M>
void build_flux_plane_1d(const Field& field, const M& model, Plane& f0,
                         FlopCounter* fc = nullptr) {
  const Mesh& mesh = field.mesh();
  for (int i = -mesh.ghost; i < mesh.nx + mesh.ghost; ++i)
    f0.at(i, 0) = model.flux(Axis::X, field.at(i, 0));
  if (fc) fc->fevals += mesh.nx;
}

template <class M>
State cat_interface_flux_1d(const Field& field, const Plane& f0,
                            const CatOperators& op, int ii, const M& model,
                            FlopCounter* fc = nullptr) {
  // Interface ii - 1/2; stencil cells ii-P .. ii+P-1 are row-contiguous.
  const int lo = ii - op.p;
  return cat_flux_1d(op, std::span<const State>(&field.at(lo, 0), op.q),
                     std::span<const State>(&f0.at(lo, 0), op.q), model, fc);
}

template <class M>
void compute_fluxes_1d(const Field& field, const Plane& f0,
                       const CatOperators& op, const M& model, FluxField& out,
                       Exec exec, FlopCounter* fc = nullptr) {
  const int nx = field.mesh().nx;
  const bool par = exec == Exec::Parallel;
#pragma omp parallel if (par)
  {
    FlopCounter local;
#pragma omp for schedule(static)
    for (int ii = 0; ii <= nx; ++ii)
      out.FX(ii, 0) =
          cat_interface_flux_1d(field, f0, op, ii, model, fc ? &local : nullptr);
    if (fc) {
#pragma omp critical
      fc->merge(local);
    }
  }
}

// ---------------------------------------------------------------------------
// 2D sweeps

// t^n physical-flux planes shared by every interface of a step, including
// the lower-order recomputations.
struct Cat2dWorkspace {
  Plane f0, g0;

  template <class M>
  void build(const Field& field, const M& model, Exec exec) {
    const Mesh& mesh = field.mesh();
    f0 = Plane(mesh);
    g0 = Plane(mesh);
    const int g = mesh.ghost;
    const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (par)
    for (int j = -g; j < mesh.ny + g; ++j)
      for (int i = -g; i < mesh.nx + g; ++i)
        model.flux_both(field.at(i, j), f0.at(i, j), g0.at(i, j));
  }
};

// One local space-time recursion on the (2P)^2 block around the corner
// (i1 + 1/2, i2 + 1/2): yields the x-flux of cell (i1,i2) at its right face
// and the y-flux at its top face. The final level is evaluated on the
// cross subset only, the other values being unused by the interface sums.
template <class M>
void cat_block_2d(const CatOperators& op, const Field& u, const Plane& f0,
                  const Plane& g0, int i1, int i2, const M& model,
                  bool want_fx, bool want_fy, State& fx_out, State& fy_out) {
  constexpr int m = M::ncomp;
  const int q = op.q, p = op.p, r0 = op.r0;

  State un[kMaxQ * kMaxQ], fcur[kMaxQ * kMaxQ], gcur[kMaxQ * kMaxQ];
  State f00[kMaxQ * kMaxQ], g00[kMaxQ * kMaxQ];
  State fnext[kMaxQ * kMaxQ], gnext[kMaxQ * kMaxQ], ukd[kMaxQ * kMaxQ];
  State taylor_buf[kMaxQ * kMaxQ * kMaxQ];
  auto taylor = [&](int a, int b, int r) -> State& {
    return taylor_buf[(static_cast<size_t>(a) * q + b) * q + r];
  };

  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      const int gi = i1 + a - p + 1, gj = i2 + b - p + 1;
      const int id = a * q + b;
      un[id] = u.at(gi, gj);
      f00[id] = f0.at(gi, gj);
      g00[id] = g0.at(gi, gj);
      fcur[id] = f00[id];
      gcur[id] = g00[id];
      for (int r = 0; r < q; ++r) taylor(a, b, r) = un[id];
    }

  fx_out = zero_state();
  fy_out = zero_state();
  if (want_fx)
    for (int c = 0; c < m; ++c) {
      double acc = 0.0;
      for (int a = 0; a < q; ++a) acc += op.ghalf[a] * fcur[a * q + r0][c];
      fx_out[c] = acc;
    }
  if (want_fy)
    for (int c = 0; c < m; ++c) {
      double acc = 0.0;
      for (int b = 0; b < q; ++b) acc += op.ghalf[b] * gcur[r0 * q + b][c];
      fy_out[c] = acc;
    }

  for (int k = 1; k < q; ++k) {
    const bool last = (k == q - 1);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (last && a != r0 && b != r0) continue;
        const int id = a * q + b;
        for (int c = 0; c < m; ++c) {
          double accx = 0.0, accy = 0.0;
          for (int s = 0; s < q; ++s) {
            accx += op.g1[a][s] * fcur[s * q + b][c];
            accy += op.g1[b][s] * gcur[a * q + s][c];
          }
          ukd[id][c] = -accx * op.inv_dx - accy * op.inv_dy;
        }
      }
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (last && a != r0 && b != r0) continue;
        const int id = a * q + b;
        State facc = zero_state(), gacc = zero_state();
        for (int r = 0; r < q; ++r) {
          const double g = op.gk0[k][r];
          if (r == r0) {
            for (int c = 0; c < m; ++c) {
              facc[c] += g * f00[id][c];
              gacc[c] += g * g00[id][c];
            }
          } else {
            const double ck = op.crk[r][k];
            State& w = taylor(a, b, r);
            for (int c = 0; c < m; ++c) w[c] += ck * ukd[id][c];
            State fv, gv;
            model.flux_both(w, fv, gv);
            for (int c = 0; c < m; ++c) {
              facc[c] += g * fv[c];
              gacc[c] += g * gv[c];
            }
          }
        }
        for (int c = 0; c < m; ++c) {
          fnext[id][c] = facc[c] * op.inv_dtk[k];
          gnext[id][c] = gacc[c] * op.inv_dtk[k];
        }
      }
    if (want_fx)
      for (int c = 0; c < m; ++c) {
        double acc = 0.0;
        for (int a = 0; a < q; ++a) acc += op.ghalf[a] * fnext[a * q + r0][c];
        fx_out[c] += op.term[k] * acc;
      }
    if (want_fy)
      for (int c = 0; c < m; ++c) {
        double acc = 0.0;
        for (int b = 0; b < q; ++b) acc += op.ghalf[b] * gnext[r0 * q + b][c];
        fy_out[c] += op.term[k] * acc;
      }
    if (!last)
      for (int id = 0; id < q * q; ++id) {
        fcur[id] = fnext[id];
        gcur[id] = gnext[id];
      }
  }
}

template <class M>
void compute_fluxes_2d(const Field& field, const Cat2dWorkspace& ws,
                       const CatOperators& op, const M& model, FluxField& out,
                       Exec exec) {
  const int nx = field.mesh().nx, ny = field.mesh().ny;
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for collapse(2) schedule(static) if (par)
  for (int i2 = -1; i2 < ny; ++i2)
    for (int i1 = -1; i1 < nx; ++i1) {
      const bool want_fx = i2 >= 0;
      const bool want_fy = i1 >= 0;
      if (!want_fx && !want_fy) continue;
      State fxv, fyv;
      cat_block_2d(op, field, ws.f0, ws.g0, i1, i2, model, want_fx, want_fy,
                   fxv, fyv);
      if (want_fx) out.FX(i1 + 1, i2) = fxv;
      if (want_fy) out.FY(i1, i2 + 1) = fyv;
    }
}

// Flux at a single 2D interface, for the troubled-cell recomputations.
template <class M>
State cat_interface_flux_2d(const Field& field, const Cat2dWorkspace& ws,
                            const CatOperators& op, Axis axis, int a, int b,
                            const M& model) {
  State fxv, fyv;
  if (axis == Axis::X) {  // FX(a, b): block of cell (a-1, b)
    cat_block_2d(op, field, ws.f0, ws.g0, a - 1, b, model, true, false, fxv,
                 fyv);
    return fxv;
  }
  cat_block_2d(op, field, ws.f0, ws.g0, a, b - 1, model, false, true, fxv,
               fyv);
  return fyv;
}

// ---------------------------------------------------------------------------
// Conservative update

inline void apply_flux_update(const Field& at_tn, const FluxField& fluxes,
                              double dt, Field& out, Exec exec,
                              FlopCounter* fc = nullptr) {
  const Mesh& mesh = at_tn.mesh();
  const double cx = dt / mesh.dx;
  const double cy = dt / mesh.dy;
  const bool par = exec == Exec::Parallel;
  const bool two_d = mesh.ny > 1;
#pragma omp parallel for schedule(static) if (par)
  for (int j = 0; j < mesh.ny; ++j)
    for (int i = 0; i < mesh.nx; ++i) {
      State v = at_tn.at(i, j);
      const State& fl = fluxes.FX(i, j);
      const State& fr = fluxes.FX(i + 1, j);
      for (int c = 0; c < kMaxComp; ++c) v[c] += cx * (fl[c] - fr[c]);
      if (two_d) {
        const State& fb = fluxes.FY(i, j);
        const State& ft = fluxes.FY(i, j + 1);
        for (int c = 0; c < kMaxComp; ++c) v[c] += cy * (fb[c] - ft[c]);
      }
      out.at(i, j) = v;
    }
  if (fc) fc->flops += 2LL * mesh.nx * mesh.ny;
}

inline void refresh_cell(const Field& at_tn, const FluxField& fluxes, double dt,
                         int i, int j, Field& out) {
  const Mesh& mesh = at_tn.mesh();
  State v = at_tn.at(i, j);
  const double cx = dt / mesh.dx;
  const State& fl = fluxes.FX(i, j);
  const State& fr = fluxes.FX(i + 1, j);
  for (int c = 0; c < kMaxComp; ++c) v[c] += cx * (fl[c] - fr[c]);
  if (mesh.ny > 1) {
    const double cy = dt / mesh.dy;
    const State& fb = fluxes.FY(i, j);
    const State& ft = fluxes.FY(i, j + 1);
    for (int c = 0; c < kMaxComp; ++c) v[c] += cy * (fb[c] - ft[c]);
  }
  out.at(i, j) = v;
}

// One unlimited 1D step: ghosts are assumed filled; conservative update.
template <class M>
void cat_step_1d(Field& field, const CoeffTable& table, int half_width,
                 double dt, const M& model, Exec exec,
                 FlopCounter* fc = nullptr) {
  const Mesh& mesh = field.mesh();
  CatOperators op(table, half_width, mesh.dx, mesh.dy, dt);
  Plane f0(mesh);
  build_flux_plane_1d(field, model, f0, fc);
  FluxField fluxes(mesh.nx, 1);
  compute_fluxes_1d(field, f0, op, model, fluxes, exec, fc);
  apply_flux_update(field, fluxes, dt, field, exec, fc);
  if (fc) fc->flops += static_cast<std::int64_t>(mesh.nx) *
                       per_cell_table_share(op.q);
}

}  // namespace catmood
