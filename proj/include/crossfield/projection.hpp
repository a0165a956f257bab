#ifndef CROSSFIELD_PROJECTION_HPP
#define CROSSFIELD_PROJECTION_HPP

#include "crossfield/rotation.hpp"
#include "crossfield/tensor.hpp"

namespace crossfield {

enum class ProjectionMethod { approx, exact };

struct ProjectionResult {
    CrossTensor9 tensor;      // on-manifold tensor, = tensor_from_rotation(rotation)
    Rotation rotation;        // the recovered/minimizing attitude
    double distance = 0.0;    // Mandel Frobenius distance from the input
    ProjectionMethod method = ProjectionMethod::approx;
};

// Backtracks the rotation encoded by a Mandel matrix: eigendecompose the
// 6x6, sum the three eigenvectors of largest eigenvalue into one symmetric
// 3x3 tensor, and read the cross directions off its eigenvectors. Signs and
// ordering are fixed deterministically and the result has det = +1.
//
// Throws DegenerateSpectrum when the 3x3 spectrum has a gap below `gap_tol`
// and no direction set can be singled out; callers decide the fallback.
Rotation recover_rotation(const Mandel6& m, double gap_tol = 1e-9);

// Eigen-based projection onto the cross manifold: recover, rebuild, measure.
ProjectionResult project_approx(const CrossTensor9& z);

// Projection by simplex minimization of the Mandel Frobenius distance over
// Euler angles, started from the eigen-based guess (identity angles when the
// guess is degenerate). Never returns a larger distance than the guess.
// Throws NoConvergence if the simplex fails to shrink within its budget.
ProjectionResult project_exact(const CrossTensor9& z);

ProjectionResult project(const CrossTensor9& z, ProjectionMethod method);

// Distance from z to the cross manifold, by the requested method.
double projection_distance(const CrossTensor9& z,
                           ProjectionMethod method = ProjectionMethod::approx);

}  // namespace crossfield

#endif  // CROSSFIELD_PROJECTION_HPP
