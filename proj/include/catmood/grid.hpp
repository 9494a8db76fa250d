#pragma once

#include <stdexcept>
#include <vector>

#include "catmood/state.hpp"

namespace catmood {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverFatal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Uniform Cartesian mesh; 1D runs use ny = 1. Interior cells are indexed
// 0-based, cell centers at x0 + (i + 1/2) dx.
struct Mesh {
  int nx = 1, ny = 1;
  double x0 = 0.0, y0 = 0.0;
  double dx = 1.0, dy = 1.0;
  int ghost = 1;

  double cx(int i) const { return x0 + (i + 0.5) * dx; }
  double cy(int j) const { return y0 + (j + 0.5) * dy; }
};

enum class BcKind { Periodic, ZeroNeumann, DirichletInflow };

struct InflowSpec {
  State state = zero_state();  // conserved
  double lo = 0.0, hi = 0.0;   // extent along the side's coordinate
};

struct BoundaryCondition {
  BcKind left = BcKind::Periodic;
  BcKind right = BcKind::Periodic;
  BcKind bottom = BcKind::Periodic;
  BcKind top = BcKind::Periodic;
  InflowSpec left_inflow, right_inflow, bottom_inflow, top_inflow;

  static BoundaryCondition periodic() { return BoundaryCondition{}; }
  static BoundaryCondition outflow() {
    return BoundaryCondition{BcKind::ZeroNeumann, BcKind::ZeroNeumann,
                             BcKind::ZeroNeumann, BcKind::ZeroNeumann};
  }
};

// 2D (or 1D when ny = 1) array of States with ghost layers.
class Field {
 public:
  Field() = default;
  Field(const Mesh& mesh, int ncomp)
      : mesh_(mesh),
        ncomp_(ncomp),
        stride_(mesh.nx + 2 * mesh.ghost),
        data_(static_cast<size_t>(mesh.nx + 2 * mesh.ghost) *
                  (mesh.ny + 2 * mesh.ghost),
              zero_state()) {}

  const Mesh& mesh() const { return mesh_; }
  int ncomp() const { return ncomp_; }

  // Indices may range over [-ghost, n + ghost).
  State& at(int i, int j) {
    return data_[static_cast<size_t>(j + mesh_.ghost) * stride_ +
                 (i + mesh_.ghost)];
  }
  const State& at(int i, int j) const {
    return data_[static_cast<size_t>(j + mesh_.ghost) * stride_ +
                 (i + mesh_.ghost)];
  }

  bool operator==(const Field& o) const {
    return mesh_.nx == o.mesh_.nx && mesh_.ny == o.mesh_.ny &&
           data_ == o.data_;
  }

 private:
  Mesh mesh_;
  int ncomp_ = 1;
  int stride_ = 1;
  std::vector<State> data_;
};

// Populates every ghost cell from the interior. Sides are swept dimension
// by dimension, x first, so corner ghosts take their values from the
// y-direction pass. Throws ConfigError on one-sided periodic pairing.
void fill_ghosts(Field& field, const BoundaryCondition& bc);

}  // namespace catmood
