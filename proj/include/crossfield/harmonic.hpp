#ifndef CROSSFIELD_HARMONIC_HPP
#define CROSSFIELD_HARMONIC_HPP

#include <array>
#include <vector>

#include "crossfield/tensor.hpp"
#include "crossfield/types.hpp"

namespace crossfield {

// Homogeneous quartic polynomial in three variables, stored as 15 monomial
// coefficients. The monomial order is fixed by quartic_exponents().
struct QuarticPolynomial {
    std::array<double, 15> c{};

    double evaluate(const Vec3& x) const;

    friend QuarticPolynomial operator+(const QuarticPolynomial& p, const QuarticPolynomial& q) {
        QuarticPolynomial out;
        for (int i = 0; i < 15; ++i) out.c[i] = p.c[i] + q.c[i];
        return out;
    }
    friend QuarticPolynomial operator-(const QuarticPolynomial& p, const QuarticPolynomial& q) {
        QuarticPolynomial out;
        for (int i = 0; i < 15; ++i) out.c[i] = p.c[i] - q.c[i];
        return out;
    }
    friend QuarticPolynomial operator*(double s, const QuarticPolynomial& p) {
        QuarticPolynomial out;
        for (int i = 0; i < 15; ++i) out.c[i] = s * p.c[i];
        return out;
    }
};

// Quartic with identically vanishing Laplacian.
struct HarmonicQuartic {
    QuarticPolynomial p;

    double evaluate(const Vec3& x) const { return p.evaluate(x); }
};

// Quadratic coefficients in the order (x1^2, x2^2, x3^2, x2x3, x1x3, x1x2).
using QuadraticCoeffs = std::array<double, 6>;

// The 15 exponent triples (p, q, r), p+q+r = 4, in canonical order.
const std::array<std::array<int, 3>, 15>& quartic_exponents();
int quartic_index(int p, int q, int r);

// Monomial expansion of the quartic form T_ijkl x_i x_j x_k x_l, with
// multinomial multiplicities.
QuarticPolynomial polynomial_from_tensor(const CrossTensor9& a);

// Exact second-derivative coefficient arithmetic.
QuadraticCoeffs laplacian(const QuarticPolynomial& p);

// Coefficients of |x|^4 = (x1^2 + x2^2 + x3^2)^2.
QuarticPolynomial norm4_polynomial();

// Orthogonal projection onto degree-4 harmonics: alpha - (3/5) |x|^4.
// The trace structure of the 9-parameter space guarantees the result is
// harmonic; the constructor enforces it.
HarmonicQuartic harmonic_projection(const CrossTensor9& a);

// Orthonormalized real spherical harmonic Y_{4,m}, m in [-4, 4], without the
// Condon-Shortley phase. The argument must be a unit vector.
double sh4(int m, const Vec3& unit_x);

// Fixed product quadrature on the unit sphere (Gauss-Legendre in the polar
// cosine times a uniform azimuthal rule), exact for the polynomial degrees
// appearing here. Weights sum to 4*pi.
struct SphereQuadrature {
    std::vector<Vec3> points;
    std::vector<double> weights;
};
const SphereQuadrature& sphere_quadrature();

// Integral of Y_{4,m} (P(alpha) - alpha) over the sphere; vanishes because
// the projection only removes a multiple of |x|^4.
double orthogonality_residual(const CrossTensor9& a, int m);

}  // namespace crossfield

#endif  // CROSSFIELD_HARMONIC_HPP
