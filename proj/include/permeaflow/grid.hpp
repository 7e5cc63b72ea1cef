#ifndef PERMEAFLOW_GRID_HPP
#define PERMEAFLOW_GRID_HPP

#include <cstddef>
#include <vector>

#include "permeaflow/errors.hpp"

namespace permeaflow {

/// Requested staggered-grid geometry. ny=1 selects 1D mode.
struct GridSpec {
  int nx = 1;
  int ny = 1;
  double x_min = 0.0, x_max = 1.0;
  double y_min = 0.0, y_max = 1.0;
};

/// Uniform MAC grid: scalars at cell centers, u on vertical faces,
/// v on horizontal faces.
class Grid {
 public:
  Grid() = default;
  explicit Grid(const GridSpec& spec);

  int nx = 1, ny = 1;
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  double hx = 1.0, hy = 1.0;

  bool one_d() const { return ny == 1; }
  std::size_t cells() const { return std::size_t(nx) * ny; }
  double cell_area() const { return hx * hy; }

  double xc(int i) const { return x_min + (i + 0.5) * hx; }
  double yc(int j) const { return y_min + (j + 0.5) * hy; }
  double xf(int i) const { return x_min + i * hx; }  // vertical-face x, i in [0,nx]
  double yf(int j) const { return y_min + j * hy; }  // horizontal-face y, j in [0,ny]

  bool same_as(const Grid& o) const;
};

Grid make_grid(const GridSpec& spec);

/// Cell-centered scalar field (phi, mu, c, p).
struct ScalarField {
  ScalarField() = default;
  explicit ScalarField(const Grid& g, double fill = 0.0)
      : grid(g), v(g.cells(), fill) {}

  Grid grid;
  std::vector<double> v;

  double& operator()(int i, int j) { return v[std::size_t(i) + std::size_t(grid.nx) * j]; }
  double operator()(int i, int j) const { return v[std::size_t(i) + std::size_t(grid.nx) * j]; }

  bool all_finite() const;
};

/// Face-centered vector field: u sized (nx+1) x ny, v sized nx x (ny+1).
/// With a periodic direction the two boundary faces hold identical values.
struct FaceVectorField {
  FaceVectorField() = default;
  explicit FaceVectorField(const Grid& g, double fill = 0.0)
      : grid(g),
        u(std::size_t(g.nx + 1) * g.ny, fill),
        v(std::size_t(g.nx) * (g.ny + 1), fill) {}

  Grid grid;
  std::vector<double> u;
  std::vector<double> v;

  double& fu(int i, int j) { return u[std::size_t(i) + std::size_t(grid.nx + 1) * j]; }
  double fu(int i, int j) const { return u[std::size_t(i) + std::size_t(grid.nx + 1) * j]; }
  double& fv(int i, int j) { return v[std::size_t(i) + std::size_t(grid.nx) * j]; }
  double fv(int i, int j) const { return v[std::size_t(i) + std::size_t(grid.nx) * j]; }

  bool all_finite() const;
};

enum class BCType {
  HomogeneousNeumann,
  Dirichlet,
  Periodic,
  MovingWall,  // velocity only: prescribed tangential speed, zero normal
};

struct SideBC {
  BCType type = BCType::HomogeneousNeumann;
  double value = 0.0;

  static SideBC neumann() { return {BCType::HomogeneousNeumann, 0.0}; }
  static SideBC dirichlet(double v) { return {BCType::Dirichlet, v}; }
  static SideBC periodic() { return {BCType::Periodic, 0.0}; }
  static SideBC moving_wall(double tangential) { return {BCType::MovingWall, tangential}; }
  static SideBC no_slip() { return {BCType::Dirichlet, 0.0}; }
};

/// Four-sided boundary condition of one variable.
struct VarBC {
  SideBC left, right, bottom, top;

  bool periodic_x() const { return left.type == BCType::Periodic; }
  bool periodic_y() const { return bottom.type == BCType::Periodic; }

  static VarBC all_neumann() { return {}; }
  static VarBC all_periodic() {
    return {SideBC::periodic(), SideBC::periodic(), SideBC::periodic(), SideBC::periodic()};
  }
};

enum class VarKind { Scalar, Pressure, Velocity };

/// Boundary conditions of the whole coupled system, one VarBC per variable.
struct BoundarySpec {
  VarBC phi, mu, c, p, vel;

  /// Fully periodic box (convergence and energy-stability setups).
  static BoundarySpec periodic_box();
  /// Closed box: no-flux scalars, no-slip walls.
  static BoundarySpec closed_box();
  /// Periodic in x; moving walls u=u_bottom / u=u_top at y walls, no-flux scalars.
  static BoundarySpec shear_box(double u_bottom, double u_top);

  void validate(const Grid& g) const;
};

void validate_var_bc(const VarBC& bc, VarKind kind, const char* name);

/// Value in the one-cell ghost layer of a cell-centered field.
/// Neumann mirrors, Dirichlet extrapolates linearly through the boundary
/// value, Periodic wraps. (i,j) must lie exactly one cell outside the grid.
double ghost_value(const ScalarField& f, const VarBC& bc, int i, int j);

/// Reads f at (i,j), reaching into the ghost layer when out of range.
double at_ghosted(const ScalarField& f, const VarBC& bc, int i, int j);

/// Copies the shared boundary faces onto each other in periodic directions.
void sync_periodic_faces(FaceVectorField& f, const VarBC& vel_bc);

}  // namespace permeaflow

#endif
