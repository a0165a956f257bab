#include "crossfield/projection.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "crossfield/nelder_mead.hpp"

namespace crossfield {

namespace {

// Flips each column so its first component of meaningful size is positive.
void fix_column_signs(Mat3& m) {
    for (int c = 0; c < 3; ++c) {
        for (int r = 0; r < 3; ++r) {
            if (std::abs(m(r, c)) > 1e-12) {
                if (m(r, c) < 0.0) m.col(c) = -m.col(c);
                break;
            }
        }
    }
}

}  // namespace

Rotation recover_rotation(const Mandel6& m, double gap_tol) {
    Eigen::SelfAdjointEigenSolver<Mat6> solver6(m.m);

    // Eigenvalues come out ascending; the columns 3..5 span the range of the
    // projector. Their sum is a symmetric tensor whose eigenvectors are the
    // cross directions.
    const Vec6 summed = solver6.eigenvectors().col(3) + solver6.eigenvectors().col(4) +
                        solver6.eigenvectors().col(5);
    const SymTensor2 d = sym_tensor_from_vec6(summed);

    Eigen::SelfAdjointEigenSolver<Mat3> solver3(d.d);
    const Vec3 eigenvalues = solver3.eigenvalues();
    const double gap = std::min(eigenvalues(1) - eigenvalues(0), eigenvalues(2) - eigenvalues(1));
    if (gap < gap_tol) {
        throw DegenerateSpectrum("eigentensor spectrum gap " + std::to_string(gap));
    }

    Mat3 directions = solver3.eigenvectors();
    fix_column_signs(directions);
    if (directions.determinant() < 0.0) {
        // Negating one axis is an octahedral symmetry; the attitude is unchanged.
        directions.col(2) = -directions.col(2);
    }
    Rotation r;
    r.m = directions;
    return r;
}

ProjectionResult project_approx(const CrossTensor9& z) {
    ProjectionResult result;
    result.method = ProjectionMethod::approx;
    result.rotation = recover_rotation(to_mandel(z));
    result.tensor = tensor_from_rotation(result.rotation);
    result.distance = frobenius_distance(z, result.tensor);
    return result;
}

ProjectionResult project_exact(const CrossTensor9& z) {
    bool have_guess = false;
    ProjectionResult guess;
    EulerAngles start{};
    try {
        guess = project_approx(z);
        start = euler_from_rotation(guess.rotation);
        have_guess = true;
    } catch (const DegenerateSpectrum&) {
        // Every attitude is an equally good start; keep the identity angles.
    }

    const Mat6 target = to_mandel(z).m;
    auto objective = [&target](const std::array<double, 3>& angles) {
        const Rotation r = rotation_from_euler({angles[0], angles[1], angles[2]});
        return (to_mandel(tensor_from_rotation(r)).m - target).norm();
    };

    const NelderMeadResult opt =
        nelder_mead(objective, {start.alpha, start.beta, start.gamma});
    if (!opt.converged) {
        throw NoConvergence("simplex diameter stalled after " +
                            std::to_string(opt.iterations) + " iterations");
    }

    ProjectionResult result;
    result.method = ProjectionMethod::exact;
    result.rotation = rotation_from_euler({opt.x[0], opt.x[1], opt.x[2]});
    result.tensor = tensor_from_rotation(result.rotation);
    result.distance = frobenius_distance(z, result.tensor);

    // The minimizer is seeded by the eigen-based guess and must not lose to it.
    if (have_guess && guess.distance < result.distance) {
        result.rotation = guess.rotation;
        result.tensor = guess.tensor;
        result.distance = guess.distance;
    }
    return result;
}

ProjectionResult project(const CrossTensor9& z, ProjectionMethod method) {
    return method == ProjectionMethod::approx ? project_approx(z) : project_exact(z);
}

double projection_distance(const CrossTensor9& z, ProjectionMethod method) {
    return project(z, method).distance;
}

}  // namespace crossfield
