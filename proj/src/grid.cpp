#include "permeaflow/grid.hpp"

#include <cmath>
#include <string>

namespace permeaflow {

Grid::Grid(const GridSpec& spec) {
  if (spec.nx < 1 || spec.ny < 1) {
    throw ConfigError("grid: cell counts must be positive, got nx=" + std::to_string(spec.nx) +
                      " ny=" + std::to_string(spec.ny));
  }
  if (!(spec.x_max > spec.x_min) || !(spec.y_max > spec.y_min)) {
    throw ConfigError("grid: domain extents must be ordered (x_min < x_max, y_min < y_max)");
  }
  nx = spec.nx;
  ny = spec.ny;
  x_min = spec.x_min;
  x_max = spec.x_max;
  y_min = spec.y_min;
  y_max = spec.y_max;
  hx = (x_max - x_min) / nx;
  hy = (y_max - y_min) / ny;
}

bool Grid::same_as(const Grid& o) const {
  return nx == o.nx && ny == o.ny && x_min == o.x_min && x_max == o.x_max && y_min == o.y_min &&
         y_max == o.y_max;
}

Grid make_grid(const GridSpec& spec) { return Grid(spec); }

bool ScalarField::all_finite() const {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

bool FaceVectorField::all_finite() const {
  for (double x : u)
    if (!std::isfinite(x)) return false;
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

namespace {

void require_paired_periodic(const VarBC& bc, const char* name) {
  const bool px_l = bc.left.type == BCType::Periodic;
  const bool px_r = bc.right.type == BCType::Periodic;
  const bool py_b = bc.bottom.type == BCType::Periodic;
  const bool py_t = bc.top.type == BCType::Periodic;
  if (px_l != px_r || py_b != py_t) {
    throw ConfigError(std::string("bc[") + name +
                      "]: Periodic must be declared on both opposing sides");
  }
}

bool side_legal(const SideBC& s, VarKind kind) {
  switch (kind) {
    case VarKind::Scalar:
      return s.type == BCType::HomogeneousNeumann || s.type == BCType::Dirichlet ||
             s.type == BCType::Periodic;
    case VarKind::Pressure:
      return s.type == BCType::HomogeneousNeumann || s.type == BCType::Periodic;
    case VarKind::Velocity:
      // Dirichlet(0) is no-slip; nonzero Dirichlet is rejected in favour of MovingWall.
      return (s.type == BCType::Dirichlet && s.value == 0.0) || s.type == BCType::MovingWall ||
             s.type == BCType::Periodic;
  }
  return false;
}

}  // namespace

void validate_var_bc(const VarBC& bc, VarKind kind, const char* name) {
  require_paired_periodic(bc, name);
  for (const SideBC* s : {&bc.left, &bc.right, &bc.bottom, &bc.top}) {
    if (!side_legal(*s, kind)) {
      throw ConfigError(std::string("bc[") + name + "]: illegal boundary type for this variable");
    }
  }
}

BoundarySpec BoundarySpec::periodic_box() {
  BoundarySpec b;
  b.phi = b.mu = b.c = b.p = b.vel = VarBC::all_periodic();
  return b;
}

BoundarySpec BoundarySpec::closed_box() {
  BoundarySpec b;  // scalars default to homogeneous Neumann
  b.vel = {SideBC::no_slip(), SideBC::no_slip(), SideBC::no_slip(), SideBC::no_slip()};
  return b;
}

BoundarySpec BoundarySpec::shear_box(double u_bottom, double u_top) {
  BoundarySpec b;
  const VarBC scalar_x_periodic{SideBC::periodic(), SideBC::periodic(), SideBC::neumann(),
                                SideBC::neumann()};
  b.phi = b.mu = b.c = b.p = scalar_x_periodic;
  b.vel = {SideBC::periodic(), SideBC::periodic(), SideBC::moving_wall(u_bottom),
           SideBC::moving_wall(u_top)};
  return b;
}

void BoundarySpec::validate(const Grid&) const {
  validate_var_bc(phi, VarKind::Scalar, "phi");
  validate_var_bc(mu, VarKind::Scalar, "mu");
  validate_var_bc(c, VarKind::Scalar, "c");
  validate_var_bc(p, VarKind::Pressure, "p");
  validate_var_bc(vel, VarKind::Velocity, "vel");
  // The projection step needs matching periodicity between velocity and pressure.
  if (vel.periodic_x() != p.periodic_x() || vel.periodic_y() != p.periodic_y()) {
    throw ConfigError("bc: velocity and pressure periodicity must agree per direction");
  }
}

double ghost_value(const ScalarField& f, const VarBC& bc, int i, int j) {
  const int nx = f.grid.nx, ny = f.grid.ny;
  if (i == -1) {
    switch (bc.left.type) {
      case BCType::Periodic: return f(nx - 1, j);
      case BCType::Dirichlet: return 2.0 * bc.left.value - f(0, j);
      default: return f(0, j);
    }
  }
  if (i == nx) {
    switch (bc.right.type) {
      case BCType::Periodic: return f(0, j);
      case BCType::Dirichlet: return 2.0 * bc.right.value - f(nx - 1, j);
      default: return f(nx - 1, j);
    }
  }
  if (j == -1) {
    switch (bc.bottom.type) {
      case BCType::Periodic: return f(i, ny - 1);
      case BCType::Dirichlet: return 2.0 * bc.bottom.value - f(i, 0);
      default: return f(i, 0);
    }
  }
  if (j == ny) {
    switch (bc.top.type) {
      case BCType::Periodic: return f(i, 0);
      case BCType::Dirichlet: return 2.0 * bc.top.value - f(i, ny - 1);
      default: return f(i, ny - 1);
    }
  }
  throw ConfigError("ghost_value: index not in the one-cell ghost layer");
}

double at_ghosted(const ScalarField& f, const VarBC& bc, int i, int j) {
  if (i >= 0 && i < f.grid.nx && j >= 0 && j < f.grid.ny) return f(i, j);
  return ghost_value(f, bc, i, j);
}

void sync_periodic_faces(FaceVectorField& f, const VarBC& vel_bc) {
  const int nx = f.grid.nx, ny = f.grid.ny;
  if (vel_bc.periodic_x()) {
    for (int j = 0; j < ny; ++j) f.fu(nx, j) = f.fu(0, j);
  }
  if (vel_bc.periodic_y()) {
    for (int i = 0; i < nx; ++i) f.fv(i, ny) = f.fv(i, 0);
  }
}

}  // namespace permeaflow
