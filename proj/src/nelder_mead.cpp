#include "crossfield/nelder_mead.hpp"

#include <algorithm>
#include <cmath>

namespace crossfield {

namespace {

using Point = std::array<double, 3>;

double distance(const Point& a, const Point& b) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(sum);
}

Point combine(const Point& a, double t, const Point& b) {
    // a + t * (b - a)
    Point out;
    for (int i = 0; i < 3; ++i) out[i] = a[i] + t * (b[i] - a[i]);
    return out;
}

}  // namespace

NelderMeadResult nelder_mead(const std::function<double(const Point&)>& f,
                             const Point& start, const NelderMeadOptions& options) {
    std::array<Point, 4> xs;
    std::array<double, 4> fs;
    xs[0] = start;
    for (int i = 1; i < 4; ++i) {
        xs[i] = start;
        xs[i][i - 1] += options.initial_step;
    }
    for (int i = 0; i < 4; ++i) fs[i] = f(xs[i]);

    auto order = [&] {
        std::array<int, 4> idx = {0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) { return fs[a] < fs[b]; });
        std::array<Point, 4> nx;
        std::array<double, 4> nf;
        for (int i = 0; i < 4; ++i) {
            nx[i] = xs[idx[i]];
            nf[i] = fs[idx[i]];
        }
        xs = nx;
        fs = nf;
    };

    auto diameter = [&] {
        double d = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) d = std::max(d, distance(xs[i], xs[j]));
        return d;
    };

    NelderMeadResult result;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        order();
        result.iterations = iter + 1;
        if (diameter() < options.diameter_tol) {
            result.converged = true;
            break;
        }

        Point centroid = {0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) centroid[k] += xs[i][k] / 3.0;

        const Point reflected = combine(centroid, -options.reflection, xs[3]);
        const double f_reflected = f(reflected);

        if (f_reflected < fs[0]) {
            const Point expanded = combine(centroid, -options.expansion, xs[3]);
            const double f_expanded = f(expanded);
            if (f_expanded < f_reflected) {
                xs[3] = expanded;
                fs[3] = f_expanded;
            } else {
                xs[3] = reflected;
                fs[3] = f_reflected;
            }
            continue;
        }
        if (f_reflected < fs[2]) {
            xs[3] = reflected;
            fs[3] = f_reflected;
            continue;
        }

        if (f_reflected < fs[3]) {
            // Outside contraction, between centroid and the reflected point.
            const Point contracted = combine(centroid, options.contraction, reflected);
            const double f_contracted = f(contracted);
            if (f_contracted <= f_reflected) {
                xs[3] = contracted;
                fs[3] = f_contracted;
                continue;
            }
        } else {
            const Point contracted = combine(centroid, options.contraction, xs[3]);
            const double f_contracted = f(contracted);
            if (f_contracted < fs[3]) {
                xs[3] = contracted;
                fs[3] = f_contracted;
                continue;
            }
        }

        for (int i = 1; i < 4; ++i) {
            xs[i] = combine(xs[0], options.shrink, xs[i]);
            fs[i] = f(xs[i]);
        }
    }

    order();
    result.x = xs[0];
    result.value = fs[0];
    return result;
}

}  // namespace crossfield
