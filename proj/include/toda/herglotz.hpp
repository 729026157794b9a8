#pragma once

#include "toda/classify.hpp"
#include "toda/ratfunc.hpp"

namespace toda {

/// Point of CP^1 in homogeneous binary64 coordinates, never both zero.
struct ProjectivePoint {
    std::complex<double> w1;
    std::complex<double> w2;

    static ProjectivePoint of(std::complex<double> z) { return {z, {1.0, 0.0}}; }
    static ProjectivePoint infinity() { return {{1.0, 0.0}, {0.0, 0.0}}; }

    bool at_infinity(double tol = 1e-12) const {
        return std::abs(w2) <= tol * (std::abs(w1) + std::abs(w2));
    }
    std::complex<double> value() const {
        if (at_infinity())
            throw Error(ErrorCode::InfiniteArgument, "projective point at infinity");
        return w1 / w2;
    }
};

/// Matrix action on homogeneous coordinates; infinity needs no special case.
ProjectivePoint moebius_point(const Mat2C& b, const ProjectivePoint& w);

enum class TodaSide { Plus, Minus };

/// Pointwise linear fractional action of A(z) on a rational function:
/// plus side (a11 f + a12)/(a21 f + a22), minus side the same with A
/// replaced by IAI (off-diagonal signs flipped).  Returns the flagged
/// constant infinity when the denominator collapses identically.
RatFunc toda_apply(const PolyMat& a, const RatFunc& f, TodaSide side);

struct HerglotzSample {
    bool passed = true;
    double min_imag = 0.0;
    std::complex<double> witness;
    size_t witness_index = 0;
    int poles_skipped = 0;
};

/// Samples Im f over the grid; grid points within 1e-9 of a pole are
/// skipped and counted.  Each sampled point passes when
/// Im f(z) >= -1e-9 * (1 + |f(z)|).
HerglotzSample herglotz_check(const RatFunc& f, const SampleGrid& grid);

/// Single-threaded reference implementation with the identical contract.
HerglotzSample herglotz_check_serial(const RatFunc& f, const SampleGrid& grid);

/// The rational Herglotz function T^-1(z) . y for a transfer-matrix
/// factorization and a boundary value y in the extended reals.
RatFunc herglotz_generate(const Factorization& tm, const ExtendedReal& y);

struct Asymptotics {
    Rational b;           // lim -i F(iy)/y, from leading coefficients
    bool c_infinite = true;
    Rational c;           // lim -iy F(iy) when finite
};

/// Exact large-y asymptotics of a real rational function, read off the
/// degree gap and leading coefficients; no numerical limits.
Asymptotics asymptotics(const RatFunc& f);

}  // namespace toda
