#include "toda/herglotz.hpp"

namespace toda {

ProjectivePoint moebius_point(const Mat2C& b, const ProjectivePoint& w) {
    if (std::abs(b.det()) <= 1e-14)
        throw Error(ErrorCode::SingularMatrix, "Moebius matrix is singular");
    return {b(0, 0) * w.w1 + b(0, 1) * w.w2, b(1, 0) * w.w1 + b(1, 1) * w.w2};
}

RatFunc toda_apply(const PolyMat& a, const RatFunc& f, TodaSide side) {
    PolyMat m = a;
    if (side == TodaSide::Minus) {
        // IAI: flip the off-diagonal signs
        m(0, 1) = -m(0, 1);
        m(1, 0) = -m(1, 0);
    }
    PolyG num = promote(m(0, 0)) * f.num() + promote(m(0, 1)) * f.den();
    PolyG den = promote(m(1, 0)) * f.num() + promote(m(1, 1)) * f.den();
    if (num.is_zero() && den.is_zero())
        throw Error(ErrorCode::IdenticallyInfinite, "Toda image collapsed to 0/0");
    return RatFunc(std::move(num), std::move(den));
}

namespace {

void herglotz_point(const RatFunc& f, std::complex<double> z, double& im, bool& ok,
                    bool& skipped) {
    std::complex<double> nv = f.num().eval_c(z);
    std::complex<double> dv = f.den().eval_c(z);
    if (std::abs(dv) <= 1e-9 * (1.0 + std::abs(nv))) {
        skipped = true;
        im = 0.0;
        ok = true;
        return;
    }
    skipped = false;
    std::complex<double> v = nv / dv;
    im = v.imag();
    ok = im >= -1e-9 * (1.0 + std::abs(v));
}

HerglotzSample herglotz_reduce(const std::vector<std::complex<double>>& pts,
                               const std::vector<double>& im, const std::vector<char>& ok,
                               const std::vector<char>& skipped) {
    HerglotzSample s;
    s.min_imag = std::numeric_limits<double>::infinity();
    bool found = false;
    for (size_t k = 0; k < pts.size(); ++k) {
        if (skipped[k]) {
            ++s.poles_skipped;
            continue;
        }
        if (!ok[k]) s.passed = false;
        if (!found || im[k] < s.min_imag) {
            s.min_imag = im[k];
            s.witness = pts[k];
            s.witness_index = k;
            found = true;
        }
    }
    return s;
}

}  // namespace

HerglotzSample herglotz_check_serial(const RatFunc& f, const SampleGrid& grid) {
    if (f.is_infinite()) return HerglotzSample{true, std::numeric_limits<double>::infinity(), {}, 0, 0};
    auto pts = grid.points();
    std::vector<double> im(pts.size());
    std::vector<char> ok(pts.size()), skipped(pts.size());
    for (size_t k = 0; k < pts.size(); ++k) {
        bool o, s;
        herglotz_point(f, pts[k], im[k], o, s);
        ok[k] = o;
        skipped[k] = s;
    }
    return herglotz_reduce(pts, im, ok, skipped);
}

HerglotzSample herglotz_check(const RatFunc& f, const SampleGrid& grid) {
    if (f.is_infinite()) return HerglotzSample{true, std::numeric_limits<double>::infinity(), {}, 0, 0};
    auto pts = grid.points();
    std::vector<double> im(pts.size());
    std::vector<char> ok(pts.size()), skipped(pts.size());
    const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static)
    for (long k = 0; k < n; ++k) {
        bool o, s;
        herglotz_point(f, pts[static_cast<size_t>(k)], im[static_cast<size_t>(k)], o, s);
        ok[static_cast<size_t>(k)] = o;
        skipped[static_cast<size_t>(k)] = s;
    }
    return herglotz_reduce(pts, im, ok, skipped);
}

RatFunc herglotz_generate(const Factorization& tm, const ExtendedReal& y) {
    Verdict v = classify(tm);
    if (v.kind != VerdictKind::TransferMatrix && v.kind != VerdictKind::Constant)
        throw Error(ErrorCode::NotATransferMatrix,
                    "herglotz generation requires a transfer-matrix factorization");
    PolyMat tinv = sl2_poly_inverse(expand(tm));
    PolyQ y1 = y.at_infinity ? PolyQ::one() : PolyQ(y.x);
    PolyQ y2 = y.at_infinity ? PolyQ::zero() : PolyQ::one();
    PolyQ num = tinv(0, 0) * y1 + tinv(0, 1) * y2;
    PolyQ den = tinv(1, 0) * y1 + tinv(1, 1) * y2;
    return RatFunc::from_real(num, den);
}

Asymptotics asymptotics(const RatFunc& f) {
    if (f.is_infinite())
        throw Error(ErrorCode::IdenticallyInfinite, "asymptotics of the constant infinity");
    if (!f.is_real())
        throw Error(ErrorCode::NonRationalCoefficient, "asymptotics requires real coefficients");

    Asymptotics out;
    out.b = Rational(0);
    out.c = Rational(0);
    if (f.is_zero()) {
        // degenerate: F = 0 sits on the boundary; both limits are 0
        out.c_infinite = false;
        return out;
    }
    int dn = f.num().degree();
    int dd = f.den().degree();
    Rational ratio = f.num().leading().re() / f.den().leading().re();
    if (dn == dd + 1) out.b = ratio;
    if (dn == dd - 1) {
        out.c_infinite = false;
        out.c = -ratio;
    }
    return out;
}

}  // namespace toda
