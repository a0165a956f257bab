#include "crossfield/rng.hpp"

#include <cmath>

namespace crossfield {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Rotation Rng::rotation() {
    double q[4];
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& c : q) {
            c = normal();
            norm2 += c * c;
        }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    const double w = q[0] * inv, x = q[1] * inv, y = q[2] * inv, z = q[3] * inv;

    Rotation r;
    r.m << 1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
        2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
        2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y);
    return r;
}

Vec9 Rng::gaussian9() {
    Vec9 v;
    for (int i = 0; i < 9; ++i) v(i) = normal();
    return v;
}

CrossTensor9 Rng::perturbed_cross(double radius) {
    const CrossTensor9 base = tensor_from_rotation(rotation());
    if (radius <= 0.0) return base;

    Vec9 direction = gaussian9();
    while (direction.norm() < 1e-12) direction = gaussian9();

    // Uniform in the 9-dimensional ball, measured in the Mandel Frobenius
    // metric of the offset.
    const double target = radius * std::pow(uniform(), 1.0 / 9.0);
    const CrossTensor9 offset(direction);
    const double scale = target / frobenius_distance(base + offset, base);
    return base + CrossTensor9(scale * direction);
}

}  // namespace crossfield
