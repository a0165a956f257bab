#include "crossfield/harmonic.hpp"

#include <cmath>
#include <stdexcept>

namespace crossfield {

namespace {

constexpr double kPi = 3.14159265358979323846;

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

}  // namespace

const std::array<std::array<int, 3>, 15>& quartic_exponents() {
    static const std::array<std::array<int, 3>, 15> exponents = [] {
        std::array<std::array<int, 3>, 15> out{};
        int idx = 0;
        for (int p = 4; p >= 0; --p)
            for (int q = 4 - p; q >= 0; --q)
                out[idx++] = {p, q, 4 - p - q};
        return out;
    }();
    return exponents;
}

int quartic_index(int p, int q, int r) {
    const auto& exps = quartic_exponents();
    for (int i = 0; i < 15; ++i) {
        if (exps[i][0] == p && exps[i][1] == q && exps[i][2] == r) return i;
    }
    throw std::out_of_range("not a quartic exponent triple");
}

double QuarticPolynomial::evaluate(const Vec3& x) const {
    double sum = 0.0;
    const auto& exps = quartic_exponents();
    for (int i = 0; i < 15; ++i) {
        sum += c[i] * std::pow(x(0), exps[i][0]) * std::pow(x(1), exps[i][1]) *
               std::pow(x(2), exps[i][2]);
    }
    return sum;
}

QuarticPolynomial polynomial_from_tensor(const CrossTensor9& a) {
    const FullTensor4 t = full_from_tensor(a);
    QuarticPolynomial poly;
    const auto& exps = quartic_exponents();
    for (int i = 0; i < 15; ++i) {
        const auto& e = exps[i];
        int idx[4];
        int slot = 0;
        for (int axis = 0; axis < 3; ++axis)
            for (int rep = 0; rep < e[axis]; ++rep) idx[slot++] = axis;
        const double multiplicity = 24.0 / (factorial(e[0]) * factorial(e[1]) * factorial(e[2]));
        poly.c[i] = multiplicity * t(idx[0], idx[1], idx[2], idx[3]);
    }
    return poly;
}

QuadraticCoeffs laplacian(const QuarticPolynomial& p) {
    // Slot order (x1^2, x2^2, x3^2, x2x3, x1x3, x1x2).
    auto quadratic_slot = [](int a, int b, int c) {
        if (a == 2) return 0;
        if (b == 2) return 1;
        if (c == 2) return 2;
        if (a == 0) return 3;
        if (b == 0) return 4;
        return 5;
    };

    QuadraticCoeffs out{};
    const auto& exps = quartic_exponents();
    for (int i = 0; i < 15; ++i) {
        const auto [a, b, c] = exps[i];
        if (a >= 2) out[quadratic_slot(a - 2, b, c)] += a * (a - 1) * p.c[i];
        if (b >= 2) out[quadratic_slot(a, b - 2, c)] += b * (b - 1) * p.c[i];
        if (c >= 2) out[quadratic_slot(a, b, c - 2)] += c * (c - 1) * p.c[i];
    }
    return out;
}

QuarticPolynomial norm4_polynomial() {
    QuarticPolynomial n4;
    n4.c[quartic_index(4, 0, 0)] = 1.0;
    n4.c[quartic_index(0, 4, 0)] = 1.0;
    n4.c[quartic_index(0, 0, 4)] = 1.0;
    n4.c[quartic_index(2, 2, 0)] = 2.0;
    n4.c[quartic_index(2, 0, 2)] = 2.0;
    n4.c[quartic_index(0, 2, 2)] = 2.0;
    return n4;
}

HarmonicQuartic harmonic_projection(const CrossTensor9& a) {
    HarmonicQuartic h;
    h.p = polynomial_from_tensor(a) - 0.6 * norm4_polynomial();

    const QuadraticCoeffs lap = laplacian(h.p);
    for (double c : lap) {
        if (std::abs(c) > 1e-12) {
            throw std::logic_error("projection produced a non-harmonic quartic");
        }
    }
    return h;
}

double sh4(int m, const Vec3& u) {
    if (std::abs(u.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("sh4 expects a unit vector");
    }
    const double x = u(0), y = u(1), z = u(2);
    const double z2 = z * z;

    // K_{4,m} = sqrt(9/(4 pi) * (4-m)!/(4+m)!); associated Legendre parts are
    // written in Cartesian form (s^m times the azimuthal factor folds into
    // x and y monomials).
    auto norm_factor = [](int mm) {
        return std::sqrt(9.0 / (4.0 * kPi) * factorial(4 - mm) / factorial(4 + mm));
    };
    const double sqrt2 = std::sqrt(2.0);

    switch (m) {
        case 0:
            return norm_factor(0) * 0.125 * (35.0 * z2 * z2 - 30.0 * z2 + 3.0);
        case 1:
            return sqrt2 * norm_factor(1) * 2.5 * (7.0 * z2 - 3.0) * z * x;
        case -1:
            return sqrt2 * norm_factor(1) * 2.5 * (7.0 * z2 - 3.0) * z * y;
        case 2:
            return sqrt2 * norm_factor(2) * 7.5 * (7.0 * z2 - 1.0) * (x * x - y * y);
        case -2:
            return sqrt2 * norm_factor(2) * 7.5 * (7.0 * z2 - 1.0) * (2.0 * x * y);
        case 3:
            return sqrt2 * norm_factor(3) * 105.0 * z * x * (x * x - 3.0 * y * y);
        case -3:
            return sqrt2 * norm_factor(3) * 105.0 * z * y * (3.0 * x * x - y * y);
        case 4:
            return sqrt2 * norm_factor(4) * 105.0 *
                   (x * x * x * x - 6.0 * x * x * y * y + y * y * y * y);
        case -4:
            return sqrt2 * norm_factor(4) * 105.0 * 4.0 * x * y * (x * x - y * y);
        default:
            throw std::out_of_range("sh4 order must be in [-4, 4]");
    }
}

const SphereQuadrature& sphere_quadrature() {
    static const SphereQuadrature rule = [] {
        constexpr int n_polar = 24;
        constexpr int n_azimuth = 48;
        std::vector<double> nodes, weights;
        gauss_legendre(n_polar, nodes, weights);

        SphereQuadrature q;
        q.points.reserve(n_polar * n_azimuth);
        q.weights.reserve(n_polar * n_azimuth);
        for (int i = 0; i < n_polar; ++i) {
            const double ct = nodes[i];
            const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
            for (int j = 0; j < n_azimuth; ++j) {
                const double phi = 2.0 * kPi * j / n_azimuth;
                q.points.emplace_back(st * std::cos(phi), st * std::sin(phi), ct);
                q.weights.push_back(weights[i] * 2.0 * kPi / n_azimuth);
            }
        }
        return q;
    }();
    return rule;
}

double orthogonality_residual(const CrossTensor9& a, int m) {
    const QuarticPolynomial alpha = polynomial_from_tensor(a);
    const QuarticPolynomial diff = harmonic_projection(a).p - alpha;

    const SphereQuadrature& rule = sphere_quadrature();
    double integral = 0.0;
    for (std::size_t i = 0; i < rule.points.size(); ++i) {
        integral += rule.weights[i] * sh4(m, rule.points[i]) * diff.evaluate(rule.points[i]);
    }
    return integral;
}

}  // namespace crossfield
