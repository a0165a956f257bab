#ifndef CROSSFIELD_ROTATION_HPP
#define CROSSFIELD_ROTATION_HPP

#include <array>

#include "crossfield/types.hpp"

namespace crossfield {

// ZXZ Euler angles. alpha and gamma live in [-pi, pi), beta in [0, pi].
struct EulerAngles {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

// Element of SO(3): orthonormal 3x3 matrix with determinant +1.
struct Rotation {
    Mat3 m = Mat3::Identity();

    Vec3 axis(int k) const { return m.col(k); }

    // Max deviation from r^T r = I and det = 1.
    double orthonormality_error() const;
    bool is_valid(double tol = 1e-12) const { return orthonormality_error() <= tol; }
};

// Builds the Z1 X2 Z3 rotation, entry by entry.
Rotation rotation_from_euler(const EulerAngles& angles);

// Inverse of rotation_from_euler. At the gimbal-lock locus (beta near 0 or
// pi) gamma is set to 0 and alpha absorbs the total in-plane angle.
EulerAngles euler_from_rotation(const Rotation& r);

// Geodesic angle of a rotation, acos((tr - 1)/2), in [0, pi].
double geodesic_angle(const Rotation& r);

// The 24 rotations mapping {±e1, ±e2, ±e3} onto itself: all signed
// permutation matrices with determinant +1. Entries are exact integers.
// The first element is the identity.
const std::array<Rotation, 24>& octahedral_group();

// Distance between cross attitudes: min over the octahedral group g of the
// geodesic angle of r1 * g * r2^T. Zero iff r1 and r2 represent the same cross.
double cross_distance(const Rotation& r1, const Rotation& r2);

}  // namespace crossfield

#endif  // CROSSFIELD_ROTATION_HPP
