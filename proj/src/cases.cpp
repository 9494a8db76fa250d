#include "catmood/cases.hpp"

#include <cmath>
#include <numbers>

namespace catmood {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap(double x, double lo, double hi) {
  const double len = hi - lo;
  double r = std::fmod(x - lo, len);
  if (r < 0.0) r += len;
  return lo + r;
}

// Smooth translating vortex superimposed on a uniform diagonal flow;
// strength beta = 5, ambient (rho,u,v,p) = (1,1,1,1).
State vortex_state(double x, double y, const Euler& model) {
  constexpr double beta = 5.0;
  const double gamma = model.gas.gamma;
  const double r2 = x * x + y * y;
  const double du = -y * beta / (2.0 * kPi) * std::exp(0.5 * (1.0 - r2));
  const double dv = x * beta / (2.0 * kPi) * std::exp(0.5 * (1.0 - r2));
  const double dT = -(gamma - 1.0) * beta * beta /
                    (8.0 * gamma * kPi * kPi) * std::exp(1.0 - r2);
  const double temp = 1.0 + dT;
  const double rho = std::pow(temp, 1.0 / (gamma - 1.0));
  return model.to_conserved(
      EulerPrimitive{rho, 1.0 + du, 1.0 + dv, rho * temp});
}

struct Quadrant {
  double rho, u, v, p;
};

// Four-state data, quadrant 1 = {x>0,y>0} counter-clockwise.
CaseSpec riemann2d(const std::string& name, const Quadrant q[4]) {
  CaseSpec spec;
  spec.name = name;
  spec.model = ModelKind::Euler;
  spec.two_d = true;
  spec.x0 = -1.0;
  spec.x1 = 1.0;
  spec.y0 = -1.0;
  spec.y1 = 1.0;
  spec.gamma = 1.4;
  spec.default_tfinal = 0.3;
  spec.bc = BoundaryCondition::outflow();
  const Quadrant q1 = q[0], q2 = q[1], q3 = q[2], q4 = q[3];
  const double gamma = spec.gamma;
  spec.ic = [q1, q2, q3, q4, gamma](double x, double y) {
    const Euler model{GasParams{gamma}};
    const Quadrant& w =
        x > 0.0 ? (y > 0.0 ? q1 : q4) : (y > 0.0 ? q2 : q3);
    return model.to_conserved(EulerPrimitive{w.rho, w.u, w.v, w.p});
  };
  return spec;
}

}  // namespace

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names = {
      "vortex",      "sedov", "rp3", "rp6", "rp11",
      "rp17",        "jet",   "advection1d", "burgers1d"};
  return names;
}

CaseSpec make_case(const std::string& name, double gamma_override) {
  CaseSpec spec;
  if (name == "vortex") {
    spec.name = name;
    spec.two_d = true;
    spec.x0 = spec.y0 = -10.0;
    spec.x1 = spec.y1 = 10.0;
    spec.gamma = 1.4;
    spec.default_tfinal = 20.0;
    spec.bc = BoundaryCondition::periodic();
    const double gamma = gamma_override > 0 ? gamma_override : spec.gamma;
    spec.ic = [gamma](double x, double y) {
      return vortex_state(x, y, Euler{GasParams{gamma}});
    };
    spec.exact = [gamma](double x, double y, double t) {
      // Ambient advection (1,1) with periodic wrap-around.
      const double xs = wrap(x - t, -10.0, 10.0);
      const double ys = wrap(y - t, -10.0, 10.0);
      return vortex_state(xs, ys, Euler{GasParams{gamma}});
    };
  } else if (name == "sedov") {
    spec.name = name;
    spec.two_d = true;
    spec.x0 = spec.y0 = -1.2;
    spec.x1 = spec.y1 = 1.2;
    spec.gamma = 1.4;
    spec.default_tfinal = 1.0;
    spec.bc = BoundaryCondition::outflow();
    const double gamma = gamma_override > 0 ? gamma_override : spec.gamma;
    spec.ic_field = [gamma](Field& field) {
      const Mesh& m = field.mesh();
      if (m.nx % 2 != 0 || m.ny % 2 != 0)
        throw ConfigError(
            "sedov needs even cell counts so the origin is a mesh vertex");
      const Euler model{GasParams{gamma}};
      const State background =
          model.to_conserved(EulerPrimitive{1.0, 0.0, 0.0, 1e-13});
      for (int j = 0; j < m.ny; ++j)
        for (int i = 0; i < m.nx; ++i) field.at(i, j) = background;
      // Total energy 0.244816 split over the 4 cells touching the origin.
      const double e_total = 0.244816;
      const double p_origin =
          (gamma - 1.0) * e_total / (4.0 * m.dx * m.dy);
      const int ic = m.nx / 2, jc = m.ny / 2;
      for (int j = jc - 1; j <= jc; ++j)
        for (int i = ic - 1; i <= ic; ++i)
          field.at(i, j) =
              model.to_conserved(EulerPrimitive{1.0, 0.0, 0.0, p_origin});
    };
  } else if (name == "rp3") {
    const Quadrant q[4] = {{1.5, 0.0, 0.0, 1.5},
                           {0.5323, 1.206, 0.0, 0.3},
                           {0.138, 1.206, 1.206, 0.029},
                           {0.5323, 0.0, 1.206, 0.3}};
    spec = riemann2d(name, q);
  } else if (name == "rp6") {
    const Quadrant q[4] = {{1.5, 0.75, -0.5, 1.0},
                           {2.0, 0.75, 0.5, 1.0},
                           {1.0, -0.75, 0.5, 1.0},
                           {3.0, -0.75, -0.5, 1.0}};
    spec = riemann2d(name, q);
  } else if (name == "rp11") {
    const Quadrant q[4] = {{1.0, 0.1, 0.0, 1.0},
                           {0.5313, 0.8276, 0.0, 0.4},
                           {0.8, 0.1, 0.0, 0.4},
                           {0.5313, 0.1, 0.0, 0.4}};
    spec = riemann2d(name, q);
  } else if (name == "rp17") {
    const Quadrant q[4] = {{1.0, 0.0, -0.4, 1.0},
                           {2.0, 0.0, -0.3, 1.0},
                           {1.0625, 0.0, 0.2145, 0.4},
                           {0.5197, 0.0, -1.1259, 0.4}};
    spec = riemann2d(name, q);
  } else if (name == "jet") {
    spec.name = name;
    spec.two_d = true;
    spec.x0 = 0.0;
    spec.x1 = 1.0;
    spec.y0 = -0.25;
    spec.y1 = 0.25;
    spec.gamma = 5.0 / 3.0;
    spec.default_tfinal = 0.001;
    const double gamma = gamma_override > 0 ? gamma_override : spec.gamma;
    const Euler model{GasParams{gamma}};
    const State ambient =
        model.to_conserved(EulerPrimitive{0.5, 0.0, 0.0, 0.4127});
    const State inflow =
        model.to_conserved(EulerPrimitive{5.0, 800.0, 0.0, 0.4127});
    spec.bc = BoundaryCondition::outflow();
    spec.bc.left = BcKind::DirichletInflow;
    spec.bc.left_inflow = InflowSpec{inflow, -0.05, 0.05};
    spec.ic = [ambient](double, double) { return ambient; };
  } else if (name == "advection1d") {
    spec.name = name;
    spec.model = ModelKind::Advection;
    spec.two_d = false;
    spec.x0 = 0.0;
    spec.x1 = 1.0;
    spec.default_tfinal = 1.0;
    spec.bc = BoundaryCondition::periodic();
    spec.ic = [](double x, double) {
      return scalar_state(std::sin(2.0 * kPi * x));
    };
    spec.exact = [](double x, double, double t) {
      return scalar_state(std::sin(2.0 * kPi * (x - t)));
    };
  } else if (name == "burgers1d") {
    spec.name = name;
    spec.model = ModelKind::Burgers;
    spec.two_d = false;
    spec.x0 = 0.0;
    spec.x1 = 1.0;
    spec.default_tfinal = 0.3;
    spec.bc = BoundaryCondition::periodic();
    spec.ic = [](double x, double) {
      return scalar_state(0.5 + 0.25 * std::sin(2.0 * kPi * x));
    };
  } else {
    throw ConfigError("unknown case '" + name + "'");
  }
  if (gamma_override > 0) spec.gamma = gamma_override;
  return spec;
}

void apply_initial_condition(const CaseSpec& spec, Field& field) {
  if (spec.ic_field) {
    spec.ic_field(field);
    return;
  }
  const Mesh& m = field.mesh();
  for (int j = 0; j < m.ny; ++j)
    for (int i = 0; i < m.nx; ++i)
      field.at(i, j) = spec.ic(m.cx(i), spec.two_d ? m.cy(j) : 0.0);
}

}  // namespace catmood
