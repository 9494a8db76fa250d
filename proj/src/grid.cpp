#include "catmood/grid.hpp"

namespace catmood {

namespace {

void check_pairing(const BoundaryCondition& bc) {
  const bool lp = bc.left == BcKind::Periodic;
  const bool rp = bc.right == BcKind::Periodic;
  const bool bp = bc.bottom == BcKind::Periodic;
  const bool tp = bc.top == BcKind::Periodic;
  if (lp != rp || bp != tp)
    throw ConfigError("periodic boundaries must be set on both opposing sides");
}

}  // namespace

void fill_ghosts(Field& field, const BoundaryCondition& bc) {
  check_pairing(bc);
  const Mesh& m = field.mesh();
  const int g = m.ghost;

  // x sides, interior rows only; corner ghosts come from the y pass.
  for (int j = 0; j < m.ny; ++j) {
    for (int k = 1; k <= g; ++k) {
      // left ghost i = -k
      switch (bc.left) {
        case BcKind::Periodic:
          field.at(-k, j) = field.at(m.nx - k, j);
          break;
        case BcKind::ZeroNeumann:
          field.at(-k, j) = field.at(0, j);
          break;
        case BcKind::DirichletInflow: {
          const double y = m.cy(j);
          field.at(-k, j) =
              (y >= bc.left_inflow.lo && y <= bc.left_inflow.hi)
                  ? bc.left_inflow.state
                  : field.at(0, j);
          break;
        }
      }
      // right ghost i = nx - 1 + k
      switch (bc.right) {
        case BcKind::Periodic:
          field.at(m.nx - 1 + k, j) = field.at(k - 1, j);
          break;
        case BcKind::ZeroNeumann:
          field.at(m.nx - 1 + k, j) = field.at(m.nx - 1, j);
          break;
        case BcKind::DirichletInflow: {
          const double y = m.cy(j);
          field.at(m.nx - 1 + k, j) =
              (y >= bc.right_inflow.lo && y <= bc.right_inflow.hi)
                  ? bc.right_inflow.state
                  : field.at(m.nx - 1, j);
          break;
        }
      }
    }
  }
  if (m.ny == 1) return;

  // y sides over the full extended x range, filling corners.
  for (int i = -g; i < m.nx + g; ++i) {
    for (int k = 1; k <= g; ++k) {
      switch (bc.bottom) {
        case BcKind::Periodic:
          field.at(i, -k) = field.at(i, m.ny - k);
          break;
        case BcKind::ZeroNeumann:
          field.at(i, -k) = field.at(i, 0);
          break;
        case BcKind::DirichletInflow: {
          const double x = m.cx(i);
          field.at(i, -k) =
              (x >= bc.bottom_inflow.lo && x <= bc.bottom_inflow.hi)
                  ? bc.bottom_inflow.state
                  : field.at(i, 0);
          break;
        }
      }
      switch (bc.top) {
        case BcKind::Periodic:
          field.at(i, m.ny - 1 + k) = field.at(i, k - 1);
          break;
        case BcKind::ZeroNeumann:
          field.at(i, m.ny - 1 + k) = field.at(i, m.ny - 1);
          break;
        case BcKind::DirichletInflow: {
          const double x = m.cx(i);
          field.at(i, m.ny - 1 + k) =
              (x >= bc.top_inflow.lo && x <= bc.top_inflow.hi)
                  ? bc.top_inflow.state
                  : field.at(i, m.ny - 1);
          break;
        }
      }
    }
  }
}

}  // namespace catmood
