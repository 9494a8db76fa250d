#pragma once

#include <algorithm>
#include <cmath>
#include <type_traits>

#include "catmood/models.hpp"
#include "catmood/state.hpp"

namespace catmood {

enum class LowFlux { Rusanov, Hll, Hllc };

inline const char* low_flux_name(LowFlux f) {
  switch (f) {
    case LowFlux::Rusanov: return "rusanov";
    case LowFlux::Hll: return "hll";
    case LowFlux::Hllc: return "hllc";
  }
  return "?";
}

// Local Lax-Friedrichs flux; valid for any model.
template <class M>
State rusanov_flux(Axis axis, const State& ul, const State& ur,
                   const M& model) {
  constexpr int m = M::ncomp;
  const State fl = model.flux(axis, ul);
  const State fr = model.flux(axis, ur);
  const double s =
      std::max(model.max_abs_eigen(axis, ul), model.max_abs_eigen(axis, ur));
  State flux = zero_state();
  for (int c = 0; c < m; ++c)
    flux[c] = 0.5 * (fl[c] + fr[c]) - 0.5 * s * (ur[c] - ul[c]);
  return flux;
}

namespace detail {

// Rotate an Euler state so the y axis plays the normal role, and back.
inline State swap_normal(const State& s) { return State{s[0], s[2], s[1], s[3]}; }

struct DavisSpeeds {
  double sl, sr;
};

inline DavisSpeeds davis_speeds(const Euler& model, const State& ul,
                                const State& ur) {
  const double ulv = ul[1] / ul[0], urv = ur[1] / ur[0];
  const double al = model.sound_speed(ul), ar = model.sound_speed(ur);
  return DavisSpeeds{std::min(ulv - al, urv - ar), std::max(ulv + al, urv + ar)};
}

inline State hll_flux_x(const Euler& model, const State& ul, const State& ur) {
  const auto [sl, sr] = davis_speeds(model, ul, ur);
  const State fl = model.flux(Axis::X, ul);
  const State fr = model.flux(Axis::X, ur);
  if (sl >= 0.0) return fl;
  if (sr <= 0.0) return fr;
  if (sr == sl) return sl >= 0.0 ? fl : fr;  // degenerate fan
  State flux;
  const double inv = 1.0 / (sr - sl);
  for (int c = 0; c < 4; ++c)
    flux[c] = (sr * fl[c] - sl * fr[c] + sl * sr * (ur[c] - ul[c])) * inv;
  return flux;
}

inline State hllc_flux_x(const Euler& model, const State& ul, const State& ur) {
  const auto [sl, sr] = davis_speeds(model, ul, ur);
  const State fl = model.flux(Axis::X, ul);
  const State fr = model.flux(Axis::X, ur);
  if (sl >= 0.0) return fl;
  if (sr <= 0.0) return fr;
  const double rl = ul[0], rr = ur[0];
  const double uln = ul[1] / rl, urn = ur[1] / rr;
  const double pl = model.pressure(ul), pr = model.pressure(ur);
  const double dl = rl * (sl - uln), dr = rr * (sr - urn);
  const double denom = dl - dr;
  if (denom == 0.0) return hll_flux_x(model, ul, ur);
  const double sm = (pr - pl + uln * dl - urn * dr) / denom;

  auto star_flux = [&](const State& u, const State& f, double s, double un,
                       double p, double d) {
    const double factor = d / (s - sm);
    State ustar{factor, factor * sm, factor * (u[2] / u[0]),
                factor * (u[3] / u[0] + (sm - un) * (sm + p / d))};
    State flux;
    for (int c = 0; c < 4; ++c) flux[c] = f[c] + s * (ustar[c] - u[c]);
    return flux;
  };
  if (sm >= 0.0) return star_flux(ul, fl, sl, uln, pl, dl);
  return star_flux(ur, fr, sr, urn, pr, dr);
}

}  // namespace detail

inline State hll_flux(Axis axis, const State& ul, const State& ur,
                      const Euler& model) {
  if (axis == Axis::X) return detail::hll_flux_x(model, ul, ur);
  return detail::swap_normal(detail::hll_flux_x(
      model, detail::swap_normal(ul), detail::swap_normal(ur)));
}

inline State hllc_flux(Axis axis, const State& ul, const State& ur,
                       const Euler& model) {
  if (axis == Axis::X) return detail::hllc_flux_x(model, ul, ur);
  return detail::swap_normal(detail::hllc_flux_x(
      model, detail::swap_normal(ul), detail::swap_normal(ur)));
}

template <class M>
State low_order_flux(LowFlux kind, Axis axis, const State& ul, const State& ur,
                     const M& model) {
  if constexpr (std::is_same_v<M, Euler>) {
    switch (kind) {
      case LowFlux::Hll: return hll_flux(axis, ul, ur, model);
      case LowFlux::Hllc: return hllc_flux(axis, ul, ur, model);
      case LowFlux::Rusanov: break;
    }
  }
  return rusanov_flux(axis, ul, ur, model);
}

}  // namespace catmood
