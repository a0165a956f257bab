#include "crossfield/rotation.hpp"

#include <algorithm>
#include <cmath>

namespace crossfield {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Maps an angle to [-pi, pi).
double wrap_angle(double a) {
    if (a >= kPi) a -= 2.0 * kPi;
    if (a < -kPi) a += 2.0 * kPi;
    return a;
}

}  // namespace

double Rotation::orthonormality_error() const {
    const Mat3 gram = m.transpose() * m - Mat3::Identity();
    const double det_err = std::abs(m.determinant() - 1.0);
    return std::max(gram.cwiseAbs().maxCoeff(), det_err);
}

Rotation rotation_from_euler(const EulerAngles& angles) {
    const double c1 = std::cos(angles.alpha), s1 = std::sin(angles.alpha);
    const double c2 = std::cos(angles.beta), s2 = std::sin(angles.beta);
    const double c3 = std::cos(angles.gamma), s3 = std::sin(angles.gamma);

    Rotation r;
    r.m(0, 0) = c1 * c3 - c2 * s1 * s3;
    r.m(0, 1) = -c1 * s3 - c3 * c2 * s1;
    r.m(0, 2) = s2 * s1;
    r.m(1, 0) = c1 * c2 * s3 + c3 * s1;
    r.m(1, 1) = c1 * c2 * c3 - s1 * s3;
    r.m(1, 2) = -c1 * s2;
    r.m(2, 0) = s3 * s2;
    r.m(2, 1) = c3 * s2;
    r.m(2, 2) = c2;
    return r;
}

EulerAngles euler_from_rotation(const Rotation& r) {
    EulerAngles out;
    const double c2 = std::clamp(r.m(2, 2), -1.0, 1.0);
    out.beta = std::acos(c2);

    const double s2 = std::sin(out.beta);
    if (s2 < 1e-9) {
        // Gimbal lock: the matrix is an in-plane spin about x3 (times
        // diag(1,-1,-1) when beta = pi); atan2 of the first column reads
        // off the total angle in both cases.
        out.gamma = 0.0;
        out.alpha = wrap_angle(std::atan2(r.m(1, 0), r.m(0, 0)));
        return out;
    }
    out.alpha = wrap_angle(std::atan2(r.m(0, 2), -r.m(1, 2)));
    out.gamma = wrap_angle(std::atan2(r.m(2, 0), r.m(2, 1)));
    return out;
}

double geodesic_angle(const Rotation& r) {
    return std::acos(std::clamp((r.m.trace() - 1.0) / 2.0, -1.0, 1.0));
}

const std::array<Rotation, 24>& octahedral_group() {
    static const std::array<Rotation, 24> elements = [] {
        std::array<Rotation, 24> out;
        int count = 0;
        std::array<int, 3> perm = {0, 1, 2};
        do {
            for (int signs = 0; signs < 8; ++signs) {
                Mat3 m = Mat3::Zero();
                for (int i = 0; i < 3; ++i) {
                    m(i, perm[i]) = (signs >> i) & 1 ? -1.0 : 1.0;
                }
                if (m.determinant() > 0.0) {
                    out[count++].m = m;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }();
    return elements;
}

double cross_distance(const Rotation& r1, const Rotation& r2) {
    double best = kPi;
    for (const Rotation& g : octahedral_group()) {
        Rotation rel;
        rel.m = r1.m * g.m * r2.m.transpose();
        best = std::min(best, geodesic_angle(rel));
    }
    return best;
}

}  // namespace crossfield
