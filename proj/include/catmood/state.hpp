#pragma once

#include <array>
#include <cmath>

namespace catmood {

// Conserved-variable vector at one grid point. Scalar models use
// component 0 only; Euler uses (rho, rho*u, rho*v, rho*E).
constexpr int kMaxComp = 4;
using State = std::array<double, kMaxComp>;

inline State zero_state() { return State{0.0, 0.0, 0.0, 0.0}; }

inline State scalar_state(double u) { return State{u, 0.0, 0.0, 0.0}; }

inline bool all_finite(const State& s, int ncomp) {
  for (int c = 0; c < ncomp; ++c)
    if (!std::isfinite(s[c])) return false;
  return true;
}

}  // namespace catmood
