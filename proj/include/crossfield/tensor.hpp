#ifndef CROSSFIELD_TENSOR_HPP
#define CROSSFIELD_TENSOR_HPP

#include <array>
#include <iosfwd>

#include "crossfield/rotation.hpp"
#include "crossfield/types.hpp"

namespace crossfield {

// The 9 free parameters (a1..a9) of a fully symmetric, trace-constrained
// 4th order tensor. This type is the linear space that finite element
// interpolation operates on; nothing beyond finiteness is required of the
// coefficients.
//
// Parameter correspondence with the full tensor T:
//   a1 = T1111  a2 = T2222  a3 = T3333
//   a4 = T2322  a5 = T2333  a6 = T1311
//   a7 = T1333  a8 = T1211  a9 = T1222
struct CrossTensor9 {
    Vec9 a = Vec9::Zero();

    CrossTensor9() = default;
    explicit CrossTensor9(const Vec9& coeffs) : a(coeffs) {}

    // The axis-aligned cross: a1 = a2 = a3 = 1, all others zero.
    static CrossTensor9 reference();

    friend CrossTensor9 operator+(const CrossTensor9& x, const CrossTensor9& y) {
        return CrossTensor9(x.a + y.a);
    }
    friend CrossTensor9 operator-(const CrossTensor9& x, const CrossTensor9& y) {
        return CrossTensor9(x.a - y.a);
    }
    friend CrossTensor9 operator*(double s, const CrossTensor9& x) {
        return CrossTensor9(s * x.a);
    }
};

// Symmetric 6x6 Mandel encoding of the 4th order tensor. The sqrt(2) and 2
// scale factors make double contraction an ordinary matrix product and the
// Frobenius norm of the matrix equal to the tensor norm.
struct Mandel6 {
    Mat6 m = Mat6::Zero();

    Mandel6() = default;
    explicit Mandel6(const Mat6& matrix) : m(matrix) {}
};

// Symmetric second order tensor (an eigentensor candidate).
struct SymTensor2 {
    Mat3 d = Mat3::Zero();

    SymTensor2() = default;
    explicit SymTensor2(const Mat3& matrix) : d(matrix) {}
};

// All 81 entries of the 4th order tensor, stored symmetrized. Kept for
// validation and test oracles; the 9-parameter form is the working
// representation everywhere else.
class FullTensor4 {
public:
    double operator()(int i, int j, int k, int l) const {
        return t_[index(i, j, k, l)];
    }
    double& operator()(int i, int j, int k, int l) {
        return t_[index(i, j, k, l)];
    }

    static constexpr int index(int i, int j, int k, int l) {
        return ((i * 3 + j) * 3 + k) * 3 + l;
    }

private:
    std::array<double, 81> t_{};
};

struct ValidationReport {
    double max_symmetry_violation = 0.0;
    double max_trace_violation = 0.0;
    bool passed = false;
};

// Tensor of a rotated cross: T_ijkl = sum_q R_iq R_jq R_kq R_lq, reduced to
// the 9 free parameters.
CrossTensor9 tensor_from_rotation(const Rotation& r);

// Fills the 6x6 Mandel matrix from the 9 parameters: the diagonal carries
// a1..a3, everything else follows from full symmetry and the partial traces.
Mandel6 to_mandel(const CrossTensor9& a);

// Reads the 9 parameters back from a Mandel matrix. Throws StructureViolation
// if any dependent entry deviates from the 9-parameter pattern by more than
// `tol`.
CrossTensor9 from_mandel(const Mandel6& m, double tol = 1e-9);

// Expands the 9 parameters into the unique fully symmetric 81-entry tensor
// whose partial traces are the Kronecker delta.
FullTensor4 full_from_tensor(const CrossTensor9& a);

// Checks full symmetry (max deviation from the canonical representative over
// all index permutations) and the six partial trace relations. Passes iff
// both violations are below `tol`.
ValidationReport validate_structure(const FullTensor4& t, double tol = 1e-9);

// Value of the quartic form T_ijkl x_i x_j x_k x_l, computed as the Mandel
// quadratic form on (x1^2, x2^2, x3^2, s x2 x3, s x1 x3, s x1 x2), s = sqrt 2.
double evaluate_polynomial(const CrossTensor9& a, const Vec3& x);

// Tensor double contraction as a 6x6 matrix product.
Mandel6 contract(const Mandel6& m1, const Mandel6& m2);

// Frobenius distance between the Mandel forms. Zero iff a == b.
double frobenius_distance(const CrossTensor9& a, const CrossTensor9& b);

// Mandel 6-vector <-> symmetric 3x3 tensor, with the 1/sqrt(2) off-diagonal
// factor so the 6-vector dot product equals the tensor double contraction.
SymTensor2 sym_tensor_from_vec6(const Vec6& v);
Vec6 vec6_from_sym_tensor(const SymTensor2& d);

// Applies a rotation to a general member of the 9-parameter space via the
// full-tensor transformation law. Cross tensors map to cross tensors.
CrossTensor9 rotate_tensor(const CrossTensor9& a, const Rotation& s);

// ASCII serialization: 9 whitespace-separated floats, a1..a9.
std::ostream& operator<<(std::ostream& os, const CrossTensor9& a);
CrossTensor9 parse_tensor9(const std::string& line);

}  // namespace crossfield

#endif  // CROSSFIELD_TENSOR_HPP
