#pragma once

#include <array>
#include <complex>

#include "toda/poly.hpp"

namespace toda {

/// Point on the Riemann sphere in binary64; at_infinity overrides re/im.
struct ComplexPoint {
    double re = 0.0;
    double im = 0.0;
    bool at_infinity = false;

    static ComplexPoint infinity() { return {0.0, 0.0, true}; }
    std::complex<double> value() const {
        if (at_infinity)
            throw Error(ErrorCode::InfiniteArgument, "point at infinity has no finite value");
        return {re, im};
    }
};

/// 2x2 matrix over any ring T, row-major.
template <typename T>
struct Mat2 {
    std::array<T, 4> e{T(0), T(0), T(0), T(0)};

    Mat2() = default;
    Mat2(T a, T b, T c, T d) : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

    const T& operator()(int r, int c) const { return e[static_cast<size_t>(2 * r + c)]; }
    T& operator()(int r, int c) { return e[static_cast<size_t>(2 * r + c)]; }

    T det() const { return e[0] * e[3] - e[1] * e[2]; }
    T trace() const { return e[0] + e[3]; }

    Mat2 transpose() const { return {e[0], e[2], e[1], e[3]}; }

    /// Adjugate; equals the inverse when det = 1.
    Mat2 adjugate() const { return {e[3], -e[1], -e[2], e[0]}; }

    bool is_zero() const {
        return e[0] == T(0) && e[1] == T(0) && e[2] == T(0) && e[3] == T(0);
    }

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2], a.e[3] + b.e[3]};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.e[0] - b.e[0], a.e[1] - b.e[1], a.e[2] - b.e[2], a.e[3] - b.e[3]};
    }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
    }
    friend Mat2 operator*(const T& k, const Mat2& m) {
        return {k * m.e[0], k * m.e[1], k * m.e[2], k * m.e[3]};
    }
    Mat2 operator-() const { return {-e[0], -e[1], -e[2], -e[3]}; }

    friend bool operator==(const Mat2& a, const Mat2& b) { return a.e == b.e; }
    friend bool operator!=(const Mat2& a, const Mat2& b) { return !(a == b); }
};

using Mat2Q = Mat2<Rational>;
using Mat2C = Mat2<std::complex<double>>;
using PolyMat = Mat2<PolyQ>;

/// J = [[0,-1],[1,0]], rotation by 90 degrees.
inline Mat2Q mat_j() { return {Rational(0), Rational(-1), Rational(1), Rational(0)}; }

/// I = diag(1,-1); conjugation by it flips off-diagonal signs.
inline Mat2Q mat_i_sign() { return {Rational(1), Rational(0), Rational(0), Rational(-1)}; }

inline Mat2Q rational_inverse(const Mat2Q& m) {
    Rational d = m.det();
    if (d.is_zero()) throw Error(ErrorCode::SingularMatrix, "singular 2x2 matrix");
    Rational inv = d.inverse();
    Mat2Q adj = m.adjugate();
    return {inv * adj(0, 0), inv * adj(0, 1), inv * adj(1, 0), inv * adj(1, 1)};
}

inline PolyMat poly_mat(const Mat2Q& m) {
    return {PolyQ(m(0, 0)), PolyQ(m(0, 1)), PolyQ(m(1, 0)), PolyQ(m(1, 1))};
}

inline PolyMat mat_poly_mul(const PolyMat& a, const PolyMat& b) { return a * b; }

inline PolyQ mat_poly_det(const PolyMat& a) { return a.det(); }

/// max entry degree; the identity (and any constant) has degree 0, the
/// zero matrix -1.
inline int mat_poly_degree(const PolyMat& a) {
    int d = -1;
    for (const auto& p : a.e) d = std::max(d, p.degree());
    return d;
}

/// Coefficient matrix of z^k in A = sum z^k A_k.
inline Mat2Q mat_poly_coeff(const PolyMat& a, int k) {
    return {a.e[0].coeff(k), a.e[1].coeff(k), a.e[2].coeff(k), a.e[3].coeff(k)};
}

inline Mat2Q mat_poly_at_zero(const PolyMat& a) { return mat_poly_coeff(a, 0); }

inline bool has_det_one(const PolyMat& a) { return mat_poly_det(a) == PolyQ::one(); }

/// Adjugate inverse, valid in SL(2): requires det(a) = 1 exactly.
inline PolyMat sl2_poly_inverse(const PolyMat& a) {
    if (!has_det_one(a))
        throw Error(ErrorCode::DetNotOne, "matrix determinant is not the constant 1");
    return a.adjugate();
}

/// Entrywise Horner evaluation at a finite point.
inline Mat2C mat_eval(const PolyMat& a, const ComplexPoint& z) {
    std::complex<double> w = z.value();
    return {a.e[0].eval_c(w), a.e[1].eval_c(w), a.e[2].eval_c(w), a.e[3].eval_c(w)};
}

inline Mat2C mat_eval(const PolyMat& a, std::complex<double> w) {
    return {a.e[0].eval_c(w), a.e[1].eval_c(w), a.e[2].eval_c(w), a.e[3].eval_c(w)};
}

}  // namespace toda
