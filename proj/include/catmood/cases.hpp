#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catmood/grid.hpp"
#include "catmood/models.hpp"

namespace catmood {

enum class ModelKind { Euler, Advection, Burgers };

// One benchmark setup: domain, gas, initial condition, boundaries and the
// exact solution when one exists.
struct CaseSpec {
  std::string name;
  ModelKind model = ModelKind::Euler;
  bool two_d = true;
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  double gamma = 1.4;
  double default_tfinal = 1.0;
  BoundaryCondition bc;
  // Pointwise conserved-variable IC; null when ic_field is set instead.
  std::function<State(double x, double y)> ic;
  // Mesh-dependent IC (energy deposition); checked against the mesh.
  std::function<void(Field&)> ic_field;
  std::function<State(double x, double y, double t)> exact;  // may be null
};

const std::vector<std::string>& case_names();
CaseSpec make_case(const std::string& name, double gamma_override = -1.0);

// Fills the interior from the case IC.
void apply_initial_condition(const CaseSpec& spec, Field& field);

}  // namespace catmood
