#include "crossfield/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace crossfield {

namespace {

const double kSqrt2 = std::sqrt(2.0);

// Mandel row/column -> tensor index pair, in the row order (11,22,33,23,13,12).
constexpr int kPair[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {0, 2}, {0, 1}};

// Scale factor attached to one Mandel slot: 1 on the diagonal pairs,
// sqrt(2) for each off-diagonal pair.
double mandel_scale(int s) { return s < 3 ? 1.0 : kSqrt2; }

Vec6 mandel_vector(const Vec3& x) {
    Vec6 v;
    v << x(0) * x(0), x(1) * x(1), x(2) * x(2),
        kSqrt2 * x(1) * x(2), kSqrt2 * x(0) * x(2), kSqrt2 * x(0) * x(1);
    return v;
}

}  // namespace

CrossTensor9 CrossTensor9::reference() {
    Vec9 a = Vec9::Zero();
    a(0) = a(1) = a(2) = 1.0;
    return CrossTensor9(a);
}

CrossTensor9 tensor_from_rotation(const Rotation& r) {
    const Mat3& m = r.m;
    auto component = [&m](int i, int j, int k, int l) {
        double sum = 0.0;
        for (int q = 0; q < 3; ++q) {
            sum += m(i, q) * m(j, q) * m(k, q) * m(l, q);
        }
        return sum;
    };
    Vec9 a;
    a(0) = component(0, 0, 0, 0);
    a(1) = component(1, 1, 1, 1);
    a(2) = component(2, 2, 2, 2);
    a(3) = component(1, 2, 1, 1);
    a(4) = component(1, 2, 2, 2);
    a(5) = component(0, 2, 0, 0);
    a(6) = component(0, 2, 2, 2);
    a(7) = component(0, 1, 0, 0);
    a(8) = component(0, 1, 1, 1);
    return CrossTensor9(a);
}

Mandel6 to_mandel(const CrossTensor9& t) {
    const Vec9& a = t.a;
    const double a1 = a(0), a2 = a(1), a3 = a(2);
    const double a4 = a(3), a5 = a(4), a6 = a(5);
    const double a7 = a(6), a8 = a(7), a9 = a(8);

    Mat6 m;
    m(0, 0) = a1;
    m(1, 0) = 0.5 * (1.0 + a3 - a2 - a1);
    m(1, 1) = a2;
    m(2, 0) = 0.5 * (1.0 + a2 - a3 - a1);
    m(2, 1) = 0.5 * (1.0 + a1 - a2 - a3);
    m(2, 2) = a3;
    m(3, 0) = -kSqrt2 * (a4 + a5);
    m(3, 1) = kSqrt2 * a4;
    m(3, 2) = kSqrt2 * a5;
    m(3, 3) = 1.0 + a1 - a3 - a2;
    m(4, 0) = kSqrt2 * a6;
    m(4, 1) = -kSqrt2 * (a6 + a7);
    m(4, 2) = kSqrt2 * a7;
    m(4, 3) = -2.0 * (a8 + a9);
    m(4, 4) = 1.0 + a2 - a3 - a1;
    m(5, 0) = kSqrt2 * a8;
    m(5, 1) = kSqrt2 * a9;
    m(5, 2) = -kSqrt2 * (a8 + a9);
    m(5, 3) = -2.0 * (a6 + a7);
    m(5, 4) = -2.0 * (a4 + a5);
    m(5, 5) = 1.0 + a3 - a2 - a1;

    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            m(i, j) = m(j, i);
        }
    }
    return Mandel6(m);
}

CrossTensor9 from_mandel(const Mandel6& m, double tol) {
    Vec9 a;
    a(0) = m.m(0, 0);
    a(1) = m.m(1, 1);
    a(2) = m.m(2, 2);
    a(3) = m.m(3, 1) / kSqrt2;
    a(4) = m.m(3, 2) / kSqrt2;
    a(5) = m.m(4, 0) / kSqrt2;
    a(6) = m.m(4, 2) / kSqrt2;
    a(7) = m.m(5, 0) / kSqrt2;
    a(8) = m.m(5, 1) / kSqrt2;

    const CrossTensor9 result(a);
    const Mat6 rebuilt = to_mandel(result).m;
    const double deviation = (rebuilt - m.m).cwiseAbs().maxCoeff();
    if (deviation > tol) {
        std::ostringstream msg;
        msg << "Mandel matrix deviates from the 9-parameter pattern by " << deviation;
        throw StructureViolation(msg.str());
    }
    return result;
}

FullTensor4 full_from_tensor(const CrossTensor9& t) {
    const Vec9& a = t.a;
    // The 15 canonical components, keyed by the sorted index multiset. The
    // six dependent ones follow from the partial trace relations.
    auto canonical = [&a](int i, int j, int k, int l) {
        int idx[4] = {i, j, k, l};
        std::sort(idx, idx + 4);
        const int key = ((idx[0] * 3 + idx[1]) * 3 + idx[2]) * 3 + idx[3];
        switch (key) {
            case FullTensor4::index(0, 0, 0, 0): return a(0);
            case FullTensor4::index(1, 1, 1, 1): return a(1);
            case FullTensor4::index(2, 2, 2, 2): return a(2);
            case FullTensor4::index(1, 1, 1, 2): return a(3);
            case FullTensor4::index(1, 2, 2, 2): return a(4);
            case FullTensor4::index(0, 0, 0, 2): return a(5);
            case FullTensor4::index(0, 2, 2, 2): return a(6);
            case FullTensor4::index(0, 0, 0, 1): return a(7);
            case FullTensor4::index(0, 1, 1, 1): return a(8);
            case FullTensor4::index(0, 0, 1, 1): return 0.5 * (1.0 + a(2) - a(0) - a(1));
            case FullTensor4::index(0, 0, 2, 2): return 0.5 * (1.0 + a(1) - a(0) - a(2));
            case FullTensor4::index(1, 1, 2, 2): return 0.5 * (1.0 + a(0) - a(1) - a(2));
            case FullTensor4::index(0, 0, 1, 2): return -(a(3) + a(4));
            case FullTensor4::index(0, 1, 1, 2): return -(a(5) + a(6));
            case FullTensor4::index(0, 1, 2, 2): return -(a(7) + a(8));
            default: return 0.0;  // unreachable
        }
    };

    FullTensor4 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    out(i, j, k, l) = canonical(i, j, k, l);
    return out;
}

ValidationReport validate_structure(const FullTensor4& t, double tol) {
    ValidationReport report;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                for (int l = 0; l < 3; ++l) {
                    int idx[4] = {i, j, k, l};
                    std::sort(idx, idx + 4);
                    const double deviation =
                        std::abs(t(i, j, k, l) - t(idx[0], idx[1], idx[2], idx[3]));
                    report.max_symmetry_violation =
                        std::max(report.max_symmetry_violation, deviation);
                }
            }
        }
    }
    for (int k = 0; k < 3; ++k) {
        for (int l = k; l < 3; ++l) {
            double trace = 0.0;
            for (int i = 0; i < 3; ++i) trace += t(i, i, k, l);
            const double expected = (k == l) ? 1.0 : 0.0;
            report.max_trace_violation =
                std::max(report.max_trace_violation, std::abs(trace - expected));
        }
    }
    report.passed = report.max_symmetry_violation < tol && report.max_trace_violation < tol;
    return report;
}

double evaluate_polynomial(const CrossTensor9& a, const Vec3& x) {
    const Vec6 v = mandel_vector(x);
    return v.dot(to_mandel(a).m * v);
}

Mandel6 contract(const Mandel6& m1, const Mandel6& m2) {
    return Mandel6(m1.m * m2.m);
}

double frobenius_distance(const CrossTensor9& a, const CrossTensor9& b) {
    return (to_mandel(a).m - to_mandel(b).m).norm();
}

SymTensor2 sym_tensor_from_vec6(const Vec6& v) {
    Mat3 d;
    d(0, 0) = v(0);
    d(1, 1) = v(1);
    d(2, 2) = v(2);
    d(1, 2) = d(2, 1) = v(3) / kSqrt2;
    d(0, 2) = d(2, 0) = v(4) / kSqrt2;
    d(0, 1) = d(1, 0) = v(5) / kSqrt2;
    return SymTensor2(d);
}

Vec6 vec6_from_sym_tensor(const SymTensor2& d) {
    Vec6 v;
    for (int s = 0; s < 6; ++s) {
        v(s) = mandel_scale(s) * d.d(kPair[s][0], kPair[s][1]);
    }
    return v;
}

CrossTensor9 rotate_tensor(const CrossTensor9& a, const Rotation& s) {
    const FullTensor4 t = full_from_tensor(a);
    const Mat3& r = s.m;

    auto transformed = [&](int i, int j, int k, int l) {
        double sum = 0.0;
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n)
                for (int o = 0; o < 3; ++o)
                    for (int p = 0; p < 3; ++p)
                        sum += r(i, m) * r(j, n) * r(k, o) * r(l, p) * t(m, n, o, p);
        return sum;
    };

    Vec9 out;
    out(0) = transformed(0, 0, 0, 0);
    out(1) = transformed(1, 1, 1, 1);
    out(2) = transformed(2, 2, 2, 2);
    out(3) = transformed(1, 2, 1, 1);
    out(4) = transformed(1, 2, 2, 2);
    out(5) = transformed(0, 2, 0, 0);
    out(6) = transformed(0, 2, 2, 2);
    out(7) = transformed(0, 1, 0, 0);
    out(8) = transformed(0, 1, 1, 1);
    return CrossTensor9(out);
}

std::ostream& operator<<(std::ostream& os, const CrossTensor9& a) {
    for (int i = 0; i < 9; ++i) {
        if (i) os << ' ';
        os << a.a(i);
    }
    return os;
}

CrossTensor9 parse_tensor9(const std::string& line) {
    std::istringstream is(line);
    Vec9 a;
    for (int i = 0; i < 9; ++i) {
        if (!(is >> a(i))) {
            throw ParseError("expected 9 coefficients, got " + std::to_string(i));
        }
    }
    std::string trailing;
    if (is >> trailing) {
        throw ParseError("trailing token '" + trailing + "' after 9 coefficients");
    }
    return CrossTensor9(a);
}

}  // namespace crossfield
