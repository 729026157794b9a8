#pragma once

#include <vector>

#include "toda/mat2.hpp"

namespace toda {

/// Rank-one orthogonal projection P = v v^t / (v.v), parameterized by a
/// primitive integer direction vector.  The line through v determines P,
/// so the stored representative is canonical: gcd-reduced with the first
/// nonzero component positive.  Equality of projections is then a bit
/// comparison of the direction pairs.
class Projection {
  public:
    Projection(Int v1, Int v2) : v1_(std::move(v1)), v2_(std::move(v2)) {
        if (v1_ == 0 && v2_ == 0)
            throw Error(ErrorCode::ZeroDirection, "projection direction must be nonzero");
        Int g;
        mpz_gcd(g.get_mpz_t(), v1_.get_mpz_t(), v2_.get_mpz_t());
        v1_ /= g;
        v2_ /= g;
        if (v1_ < 0 || (v1_ == 0 && v2_ < 0)) {
            v1_ = -v1_;
            v2_ = -v2_;
        }
    }

    const Int& v1() const { return v1_; }
    const Int& v2() const { return v2_; }

    /// The projection matrix v v^t / (v.v), exact rational entries.
    Mat2Q matrix() const {
        Rational n(Int(v1_ * v1_ + v2_ * v2_));
        Rational inv = n.inverse();
        return {inv * Rational(Int(v1_ * v1_)), inv * Rational(Int(v1_ * v2_)),
                inv * Rational(Int(v1_ * v2_)), inv * Rational(Int(v2_ * v2_))};
    }

    /// Primitive direction of the null space N(P), the line orthogonal to v.
    Projection kernel_line() const { return Projection(-v2_, v1_); }

    friend bool operator==(const Projection& a, const Projection& b) {
        return a.v1_ == b.v1_ && a.v2_ == b.v2_;
    }
    friend bool operator!=(const Projection& a, const Projection& b) { return !(a == b); }

  private:
    Int v1_;
    Int v2_;
};

inline Projection projection_of(const Int& v1, const Int& v2) { return Projection(v1, v2); }

/// Projection onto the line through a rational vector (w1, w2).
inline Projection projection_of_rational(const Rational& w1, const Rational& w2) {
    Int scale;
    mpz_lcm(scale.get_mpz_t(), w1.den().get_mpz_t(), w2.den().get_mpz_t());
    return Projection(w1.num() * (scale / w1.den()), w2.num() * (scale / w2.den()));
}

/// Elementary factor (p, P) of the product form 1 + p(z) J P; the
/// polynomial is nonzero and vanishes at 0.
struct Factor {
    PolyQ p;
    Projection proj;

    Factor(PolyQ p_, Projection proj_) : p(std::move(p_)), proj(std::move(proj_)) {
        if (p.is_zero())
            throw Error(ErrorCode::ZeroMatrix, "factor polynomial must be nonzero");
        if (!p.at_zero().is_zero())
            throw Error(ErrorCode::NonRationalCoefficient, "factor polynomial must vanish at 0");
    }

    friend bool operator==(const Factor& a, const Factor& b) {
        return a.p == b.p && a.proj == b.proj;
    }
    friend bool operator!=(const Factor& a, const Factor& b) { return !(a == b); }
};

/// Ordered product prefix * (1+p_1 J P_1) ... (1+p_N J P_N); consecutive
/// projections are distinct and the prefix is a constant SL(2) matrix.
struct Factorization {
    Mat2Q prefix = Mat2Q::identity();
    std::vector<Factor> factors;

    friend bool operator==(const Factorization& a, const Factorization& b) {
        return a.prefix == b.prefix && a.factors == b.factors;
    }
    friend bool operator!=(const Factorization& a, const Factorization& b) { return !(a == b); }
};

/// 1 + p(z) J P as an exact polynomial matrix; det = 1 since PJP = 0.
inline PolyMat elementary(const Factor& f) {
    Mat2Q jp = mat_j() * f.proj.matrix();
    PolyMat m = poly_mat(Mat2Q::identity());
    for (int i = 0; i < 4; ++i)
        m.e[static_cast<size_t>(i)] += jp.e[static_cast<size_t>(i)] * f.p;
    return m;
}

struct ConjugatedJp {
    Rational c;
    Projection proj;
};

/// S^-1 (J P) S = c (J Q) with c > 0 and Q the projection onto S^t v.
inline ConjugatedJp conjugate_jp(const Mat2Q& s, const Projection& p) {
    if (s.det() != Rational(1))
        throw Error(ErrorCode::DetNotOne, "conjugating matrix must have det 1");
    Mat2Q st = s.transpose();
    Rational w1 = st(0, 0) * Rational(p.v1()) + st(0, 1) * Rational(p.v2());
    Rational w2 = st(1, 0) * Rational(p.v1()) + st(1, 1) * Rational(p.v2());
    Projection q = projection_of_rational(w1, w2);

    Mat2Q lhs = rational_inverse(s) * (mat_j() * p.matrix()) * s;
    Mat2Q jq = mat_j() * q.matrix();
    Rational c;
    for (int i = 0; i < 4; ++i) {
        if (!jq.e[static_cast<size_t>(i)].is_zero()) {
            c = lhs.e[static_cast<size_t>(i)] / jq.e[static_cast<size_t>(i)];
            break;
        }
    }
    // the identity must hold entrywise, and the scale is positive
    for (int i = 0; i < 4; ++i)
        if (lhs.e[static_cast<size_t>(i)] != c * jq.e[static_cast<size_t>(i)])
            throw Error(ErrorCode::ZeroMatrix, "conjugation identity failed");
    if (!(c > Rational(0)))
        throw Error(ErrorCode::ZeroMatrix, "conjugation scale not positive");
    return {c, q};
}

struct JpChain {
    Mat2Q product;
    bool nonzero;
    bool diagonalizable;
};

/// Product J P_1 J P_2 ... J P_N.  nonzero iff no two consecutive
/// projections coincide; on such chains the product is diagonalizable iff
/// its trace is nonzero, equivalently P_1 != P_N.
inline JpChain jp_chain(const std::vector<Projection>& projs) {
    if (projs.empty())
        throw Error(ErrorCode::EmptyChain, "projection chain must be nonempty");
    Mat2Q prod = Mat2Q::identity();
    for (const auto& p : projs) prod = prod * (mat_j() * p.matrix());
    bool nonzero = !prod.is_zero();
    bool diag = !prod.trace().is_zero();
    return {prod, nonzero, diag};
}

}  // namespace toda
