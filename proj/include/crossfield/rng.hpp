#ifndef CROSSFIELD_RNG_HPP
#define CROSSFIELD_RNG_HPP

#include <cstdint>
#include <random>

#include "crossfield/rotation.hpp"
#include "crossfield/tensor.hpp"
#include "crossfield/types.hpp"

namespace crossfield {

// Seeded random source with bit-level reproducible draws. The standard
// distributions are implementation-defined, so uniform and normal variates
// are derived from the raw mt19937_64 stream directly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Standard normal via Box-Muller.
    double normal();

    // Haar-uniform rotation from four normalized Gaussians (quaternion).
    Rotation rotation();

    // Isotropic Gaussian direction in the 9-parameter space.
    Vec9 gaussian9();

    // Cross tensor plus a perturbation drawn uniformly from the Mandel
    // Frobenius ball of the given radius around it.
    CrossTensor9 perturbed_cross(double radius);

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace crossfield

#endif  // CROSSFIELD_RNG_HPP
