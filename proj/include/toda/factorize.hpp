#pragma once

#include "toda/projection.hpp"

namespace toda {

enum class NormalFormKind { DiagonalizableTopLeft, NilpotentUpperRight };

/// Similarity taking a singular leading coefficient to Jordan normal form:
/// s A s^-1 = diag(trace, 0) when trace != 0, or [[0, e],[0,0]] with e != 0
/// when the matrix is nilpotent.  Over the rationals the nilpotent entry e
/// can only be rescaled by squares, so it is normalized to +-1 exactly when
/// |e| is a rational square and left as is otherwise.
struct JordanStep {
    Mat2Q s;
    NormalFormKind kind;
    Rational trace;
    Rational nilpotent_entry;  // the (0,1) entry of the normal form; 0 in the diagonalizable case
};

struct PeelResult {
    Factor factor;
    PolyMat rest;
};

/// a = a(0) * normalized with normalized(0) = identity.
std::pair<Mat2Q, PolyMat> split_constant(const PolyMat& a);

/// Exact SL(2,Q) similarity for a nonzero singular 2x2 rational matrix.
JordanStep jordan_similarity(const Mat2Q& an);

/// Splits one elementary factor off the left of b (member of P, degree >= 1):
/// b = elementary(factor) * rest, with factor.p a monomial and
/// deg rest <= deg b - 1.
PeelResult peel_left(const PolyMat& b);

/// The unique factorization a = a(0) * (1+p_1 J P_1) ... (1+p_N J P_N) with
/// consecutive projections distinct.
Factorization factorize(const PolyMat& a);

/// prefix * product of elementary factors, exact.
PolyMat expand(const Factorization& f);

}  // namespace toda
