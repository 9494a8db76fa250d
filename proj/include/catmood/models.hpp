#pragma once

#include <cmath>
#include <limits>

#include "catmood/state.hpp"

namespace catmood {

enum class Axis { X, Y };

struct GasParams {
  double gamma = 1.4;
};

struct EulerPrimitive {
  double rho = 0.0, u = 0.0, v = 0.0, p = 0.0;
};

// 2D compressible Euler with polytropic ideal-gas EOS. Flux evaluation at a
// state outside the admissible set (rho > 0, p > 0) returns a NaN-filled
// vector so that downstream detectors see the failure; it never throws.
struct Euler {
  static constexpr int ncomp = 4;
  static constexpr bool has_pressure = true;
  GasParams gas;

  double pressure(const State& s) const {
    return (gas.gamma - 1.0) *
           (s[3] - 0.5 * (s[1] * s[1] + s[2] * s[2]) / s[0]);
  }

  bool admissible(const State& s) const {
    return s[0] > 0.0 && std::isfinite(s[0]) && pressure(s) > 0.0 &&
           std::isfinite(s[3]);
  }

  EulerPrimitive to_primitive(const State& s) const {
    return EulerPrimitive{s[0], s[1] / s[0], s[2] / s[0], pressure(s)};
  }

  State to_conserved(const EulerPrimitive& w) const {
    const double e_int = w.p / ((gas.gamma - 1.0) * w.rho);
    return State{w.rho, w.rho * w.u, w.rho * w.v,
                 w.rho * (e_int + 0.5 * (w.u * w.u + w.v * w.v))};
  }

  double sound_speed(const State& s) const {
    return std::sqrt(gas.gamma * pressure(s) / s[0]);
  }

  State flux(Axis axis, const State& s) const {
    const double p = pressure(s);
    if (!(s[0] > 0.0) || !(p > 0.0) || !std::isfinite(p)) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      return State{nan, nan, nan, nan};
    }
    if (axis == Axis::X) {
      const double u = s[1] / s[0];
      return State{s[1], s[1] * u + p, s[2] * u, (s[3] + p) * u};
    }
    const double v = s[2] / s[0];
    return State{s[2], s[1] * v, s[2] * v + p, (s[3] + p) * v};
  }

  // Both flux columns from one pressure evaluation; used by the 2D kernels.
  void flux_both(const State& s, State& fx, State& fy) const {
    const double p = pressure(s);
    if (!(s[0] > 0.0) || !(p > 0.0) || !std::isfinite(p)) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      fx = State{nan, nan, nan, nan};
      fy = fx;
      return;
    }
    const double u = s[1] / s[0];
    const double v = s[2] / s[0];
    fx = State{s[1], s[1] * u + p, s[2] * u, (s[3] + p) * u};
    fy = State{s[2], s[1] * v, s[2] * v + p, (s[3] + p) * v};
  }

  double max_abs_eigen(Axis axis, const State& s) const {
    const double vel = (axis == Axis::X ? s[1] : s[2]) / s[0];
    return std::abs(vel) + sound_speed(s);
  }

  // Diagonal of the flux Jacobian, used as the degenerate-jump wave-speed
  // guess in the flux-limiter ratio.
  State flux_deriv_diag(Axis axis, const State& s) const {
    const double g = gas.gamma;
    if (axis == Axis::X) {
      const double u = s[1] / s[0];
      return State{0.0, (3.0 - g) * u, u, g * u};
    }
    const double v = s[2] / s[0];
    return State{0.0, v, (3.0 - g) * v, g * v};
  }
};

// 1D scalar conservation laws share the Euler code paths through the same
// interface with ncomp = 1.
struct LinearAdvection {
  static constexpr int ncomp = 1;
  static constexpr bool has_pressure = false;
  double a = 1.0;

  bool admissible(const State& s) const { return std::isfinite(s[0]); }
  State flux(Axis, const State& s) const { return scalar_state(a * s[0]); }
  void flux_both(const State& s, State& fx, State& fy) const {
    fx = flux(Axis::X, s);
    fy = fx;
  }
  double max_abs_eigen(Axis, const State&) const { return std::abs(a); }
  State flux_deriv_diag(Axis, const State&) const { return scalar_state(a); }
};

struct Burgers {
  static constexpr int ncomp = 1;
  static constexpr bool has_pressure = false;

  bool admissible(const State& s) const { return std::isfinite(s[0]); }
  State flux(Axis, const State& s) const {
    return scalar_state(0.5 * s[0] * s[0]);
  }
  void flux_both(const State& s, State& fx, State& fy) const {
    fx = flux(Axis::X, s);
    fy = fx;
  }
  double max_abs_eigen(Axis, const State& s) const { return std::abs(s[0]); }
  State flux_deriv_diag(Axis, const State& s) const {
    return scalar_state(s[0]);
  }
};

}  // namespace catmood
