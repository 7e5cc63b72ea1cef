#ifndef PERMEAFLOW_OPERATORS_HPP
#define PERMEAFLOW_OPERATORS_HPP

#include "permeaflow/grid.hpp"

namespace permeaflow {

// Second-order block-centered difference operators. gradient and divergence
// are discrete adjoints (summation by parts), so divergence(gradient(f))
// reproduces the 5-point Laplacian exactly. In 1D mode (ny=1) every
// y-derivative is identically zero.

/// Face-centered gradient of a cell field; ghost cells per bc.
/// Homogeneous Neumann yields exactly zero normal gradient on boundary faces.
void gradient_into(const ScalarField& f, const VarBC& bc, FaceVectorField& out);
FaceVectorField gradient(const ScalarField& f, const VarBC& bc);

/// Cell-centered divergence of a face field.
void divergence_into(const FaceVectorField& g, ScalarField& out);
ScalarField divergence(const FaceVectorField& g);

/// divergence(gradient(f, bc)); exact on affine fields away from Dirichlet sides.
void laplacian_into(const ScalarField& f, const VarBC& bc, ScalarField& out);
ScalarField laplacian(const ScalarField& f, const VarBC& bc);

/// Conservative advection div(vel * f) with arithmetic face averages of f.
/// Cell-sum of the result telescopes to the boundary flux, which vanishes
/// for periodic sides and walls with zero normal velocity.
void advect_conservative_into(const FaceVectorField& vel, const ScalarField& f, const VarBC& bc,
                              ScalarField& out);
ScalarField advect_conservative(const FaceVectorField& vel, const ScalarField& f, const VarBC& bc);

/// Arithmetic average of a cell field onto faces (ghosts per bc).
void average_to_faces_into(const ScalarField& f, const VarBC& bc, FaceVectorField& out);
FaceVectorField average_to_faces(const ScalarField& f, const VarBC& bc);

/// Area-weighted sum over cells: sum f_ij * hx * hy.
double cell_integral(const ScalarField& f);

/// Discrete L2 norm over cells, sqrt(sum f^2 hx hy).
double cell_l2_norm(const ScalarField& f);

double linf_norm(const ScalarField& f);

}  // namespace permeaflow

#endif
