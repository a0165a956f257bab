#ifndef CROSSFIELD_NELDER_MEAD_HPP
#define CROSSFIELD_NELDER_MEAD_HPP

#include <array>
#include <functional>

namespace crossfield {

// Derivative-free simplex minimization in three variables, with the
// standard reflection/expansion/contraction/shrink coefficients.
struct NelderMeadOptions {
    double initial_step = 0.1;
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double diameter_tol = 1e-10;
    int max_iterations = 10000;
};

struct NelderMeadResult {
    std::array<double, 3> x{};
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

NelderMeadResult nelder_mead(const std::function<double(const std::array<double, 3>&)>& f,
                             const std::array<double, 3>& start,
                             const NelderMeadOptions& options = {});

}  // namespace crossfield

#endif  // CROSSFIELD_NELDER_MEAD_HPP
