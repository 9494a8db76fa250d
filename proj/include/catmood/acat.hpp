#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "catmood/cat_core.hpp"
#include "catmood/riemann.hpp"

namespace catmood {

enum class LimiterKind { Minmod, Superbee, VanLeer };

constexpr double kRatioEps = 1e-8;   // degenerate-jump guard in the wave speed
constexpr double kPsiEps = 1e-8;     // keeps the lateral weights from vanishing
constexpr double kPsiClip = 0.95;    // indicators at or above this count as 1

inline double flux_limiter_phi(double r, LimiterKind kind) {
  if (std::isnan(r)) return 0.0;
  switch (kind) {
    case LimiterKind::Minmod:
      return std::max(0.0, std::min(1.0, r));
    case LimiterKind::Superbee:
      return std::max({0.0, std::min(2.0 * r, 1.0), std::min(r, 2.0)});
    case LimiterKind::VanLeer:
      return (r + std::abs(r)) / (1.0 + std::abs(r));
  }
  return 0.0;
}

// Upwind-sided jump ratio at the interface between u4[1] and u4[2],
// componentwise. The side is picked by the secant wave speed, falling back
// to the flux-Jacobian diagonal on a degenerate jump.
template <class M>
State upwind_ratio(Axis axis, const State u4[4], const M& model) {
  constexpr int m = M::ncomp;
  constexpr double kLarge = 1e30;
  const State f1 = model.flux(axis, u4[1]);
  const State f2 = model.flux(axis, u4[2]);
  const State dd = model.flux_deriv_diag(axis, u4[1]);
  State r = zero_state();
  for (int c = 0; c < m; ++c) {
    const double du = u4[2][c] - u4[1][c];
    const double a = std::abs(du) > kRatioEps ? (f2[c] - f1[c]) / du : dd[c];
    const double num = a > 0.0 ? u4[1][c] - u4[0][c] : u4[3][c] - u4[2][c];
    if (du == 0.0) {
      r[c] = num > 0.0 ? kLarge : (num < 0.0 ? -kLarge : 0.0);
    } else {
      r[c] = num / du;
    }
  }
  return r;
}

// Regularity indicator of one scalar sample set over the 2p-point stencil
// around the interface: lateral squared-difference weights, half harmonic
// mean, and the top-order undivided difference as the regularity scale.
inline double smoothness_psi(std::span<const double> f, int p,
                             const CoeffTable& table) {
  double wl = kPsiEps, wr = kPsiEps;
  for (int s = 0; s + 1 <= p - 1; ++s) {
    const double d = f[s + 1] - f[s];
    wl += d * d;
  }
  for (int s = p; s + 1 <= 2 * p - 2; ++s) {
    const double d = f[s + 1] - f[s];
    wr += d * d;
  }
  const double w = wl * wr / (wl + wr);
  auto g = table.coeffs(p, 2 * p - 1, Offset::half());
  double diff = 0.0;
  for (int s = 0; s < 2 * p; ++s) diff += g[s] * f[s];
  double fact = 1.0;
  for (int k = 2; k <= 2 * p - 1; ++k) fact *= k;
  const double tau = (fact * diff) * (fact * diff);
  const double psi = w / (w + tau);
  return psi >= kPsiClip ? 1.0 : psi;
}

// Largest p in 2..P whose indicators are clipped to 1 for every order up
// to p (consecutive from 2); 1 when already psi^2 < 1. For systems the
// indicator of a stencil is the minimum over conserved components.
template <class M>
int select_order(std::span<const State> window, int max_p,
                 const CoeffTable& table, const M& model) {
  constexpr int m = M::ncomp;
  (void)model;
  const int big_p = max_p;
  int selected = 1;
  for (int p = 2; p <= max_p; ++p) {
    double psi_min = 1.0;
    double comp[2 * kMaxP];
    for (int c = 0; c < m; ++c) {
      for (int s = 0; s < 2 * p; ++s)
        comp[s] = window[big_p - p + s][c];
      psi_min = std::min(
          psi_min, smoothness_psi(std::span<const double>(comp, 2 * p), p, table));
    }
    if (psi_min < 1.0) break;
    selected = p;
  }
  return selected;
}

// Blended second-order flux: phi F^1 + (1 - phi) F^low, componentwise,
// with F^1 the order-2 flux on the middle pair.
template <class M>
State acat2_flux(Axis axis, const State u4[4], double dx, double dt,
                 const M& model, LimiterKind limiter, LowFlux low,
                 const State& f_high) {
  constexpr int m = M::ncomp;
  (void)dx;
  (void)dt;
  const State r = upwind_ratio(axis, u4, model);
  const State f_low = low_order_flux(low, axis, u4[1], u4[2], model);
  State flux = zero_state();
  for (int c = 0; c < m; ++c) {
    const double phi = flux_limiter_phi(r[c], limiter);
    flux[c] = phi * f_high[c] + (1.0 - phi) * f_low[c];
  }
  return flux;
}

struct AcatParams {
  int max_p = 3;
  LimiterKind limiter = LimiterKind::Minmod;
  LowFlux low = LowFlux::Rusanov;
};

// 1D a-priori limited interface flux: the indicator-selected CAT order, or
// the limiter blend when no stencil from order 2 on is smooth. `ops` holds
// the operator packs for p = 1..max_p (index p-1).
template <class M>
State acat_interface_flux_1d(const Field& field, const Plane& f0,
                             std::span<const CatOperators> ops, int ii,
                             const M& model, const AcatParams& params,
                             const CoeffTable& table) {
  const int big_p = params.max_p;
  const int lo = ii - big_p;
  std::span<const State> window(&field.at(lo, 0), 2 * big_p);
  const int p_sel = select_order(window, big_p, table, model);
  if (p_sel >= 2)
    return cat_interface_flux_1d(field, f0, ops[p_sel - 1], ii, model);
  const State u4[4] = {field.at(ii - 2, 0), field.at(ii - 1, 0),
                       field.at(ii, 0), field.at(ii + 1, 0)};
  const State f_high = cat_interface_flux_1d(field, f0, ops[0], ii, model);
  return acat2_flux(Axis::X, u4, field.mesh().dx, ops[0].dt, model,
                    params.limiter, params.low, f_high);
}

template <class M>
void acat_fluxes_1d(const Field& field, const Plane& f0,
                    std::span<const CatOperators> ops, const M& model,
                    const AcatParams& params, const CoeffTable& table,
                    FluxField& out, Exec exec) {
  const int nx = field.mesh().nx;
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(static) if (par)
  for (int ii = 0; ii <= nx; ++ii)
    out.FX(ii, 0) =
        acat_interface_flux_1d(field, f0, ops, ii, model, params, table);
}

// 2D sweep: indicators and limiter are applied direction by direction on
// the row/column through each interface; the selected order then picks the
// 2D flux of that order at the interface.
template <class M>
void acat_fluxes_2d(const Field& field, const Cat2dWorkspace& ws,
                    std::span<const CatOperators> ops, const M& model,
                    const AcatParams& params, const CoeffTable& table,
                    FluxField& out, Exec exec) {
  const Mesh& mesh = field.mesh();
  const int nx = mesh.nx, ny = mesh.ny;
  const int big_p = params.max_p;
  const bool par = exec == Exec::Parallel;

#pragma omp parallel for collapse(2) schedule(static) if (par)
  for (int j = 0; j < ny; ++j)
    for (int ii = 0; ii <= nx; ++ii) {
      std::span<const State> window(&field.at(ii - big_p, j), 2 * big_p);
      const int p_sel = select_order(window, big_p, table, model);
      if (p_sel >= 2) {
        out.FX(ii, j) =
            cat_interface_flux_2d(field, ws, ops[p_sel - 1], Axis::X, ii, j, model);
      } else {
        const State u4[4] = {field.at(ii - 2, j), field.at(ii - 1, j),
                             field.at(ii, j), field.at(ii + 1, j)};
        const State f_high =
            cat_interface_flux_2d(field, ws, ops[0], Axis::X, ii, j, model);
        out.FX(ii, j) = acat2_flux(Axis::X, u4, mesh.dx, ops[0].dt, model,
                                   params.limiter, params.low, f_high);
      }
    }

#pragma omp parallel for collapse(2) schedule(static) if (par)
  for (int jj = 0; jj <= ny; ++jj)
    for (int i = 0; i < nx; ++i) {
      State window[2 * kMaxP];
      for (int s = 0; s < 2 * big_p; ++s)
        window[s] = field.at(i, jj - big_p + s);
      const int p_sel = select_order(
          std::span<const State>(window, 2 * big_p), big_p, table, model);
      if (p_sel >= 2) {
        out.FY(i, jj) =
            cat_interface_flux_2d(field, ws, ops[p_sel - 1], Axis::Y, i, jj, model);
      } else {
        const State u4[4] = {field.at(i, jj - 2), field.at(i, jj - 1),
                             field.at(i, jj), field.at(i, jj + 1)};
        const State f_high =
            cat_interface_flux_2d(field, ws, ops[0], Axis::Y, i, jj, model);
        out.FY(i, jj) = acat2_flux(Axis::Y, u4, mesh.dy, ops[0].dt, model,
                                   params.limiter, params.low, f_high);
      }
    }
}

}  // namespace catmood
