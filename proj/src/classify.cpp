#include "toda/classify.hpp"

#include <cmath>

namespace toda {

namespace {

bool is_identity(const Mat2Q& m) { return m == Mat2Q::identity(); }

/// p = L z for some nonzero L?
std::optional<Rational> linear_coupling(const PolyQ& p) {
    if (p.degree() != 1) return std::nullopt;
    return p.coeff(1);
}

}  // namespace

Verdict classify(const Factorization& f) {
    if (!is_identity(f.prefix))
        throw Error(ErrorCode::NonIdentityPrefix,
                    "classify expects an identity prefix; classify the normalized part");

    Verdict v;
    if (f.factors.empty()) {
        v.kind = VerdictKind::Constant;
        return v;
    }

    bool all_linear = true;
    bool all_pos = true;
    bool all_neg = true;
    for (const auto& fac : f.factors) {
        auto L = linear_coupling(fac.p);
        if (!L) {
            all_linear = false;
            break;
        }
        if (*L > Rational(0))
            all_neg = false;
        else
            all_pos = false;
    }

    if (all_linear && (all_pos || all_neg)) {
        v.kind = all_pos ? VerdictKind::TransferMatrix : VerdictKind::InverseTransferMatrix;
        for (const auto& fac : f.factors)
            v.couplings.emplace_back(fac.p.coeff(1), fac.proj);
        return v;
    }

    if (f.factors.size() == 1 && f.factors[0].p.degree() >= 2) {
        v.kind = VerdictKind::TrivialSingular;
        v.trivial = f.factors[0];
        // boundary point: x represented by the primitive vector spanning N(P)
        Projection ker = f.factors[0].proj.kernel_line();
        v.boundary_v1 = ker.v1();
        v.boundary_v2 = ker.v2();
        if (ker.v2() == 0)
            v.boundary = ExtendedReal::infinity();
        else
            v.boundary = ExtendedReal::finite(Rational(ker.v1(), ker.v2()));
        return v;
    }

    v.kind = VerdictKind::EmptyDomain;
    return v;
}

void hp_point(const PolyMat& a, std::complex<double> z, double& lambda_min, bool& ok) {
    using C = std::complex<double>;
    const C i(0.0, 1.0);
    Mat2C e = mat_eval(a, z);
    Mat2C jc{C(0.0), C(-1.0), C(1.0), C(0.0)};
    Mat2C star{std::conj(e(0, 0)), std::conj(e(1, 0)), std::conj(e(0, 1)), std::conj(e(1, 1))};
    Mat2C m = star * jc * e - jc;
    for (auto& x : m.e) x *= i;

    double norm_inf = std::max(std::abs(m(0, 0)) + std::abs(m(0, 1)),
                               std::abs(m(1, 0)) + std::abs(m(1, 1)));
    double herm = std::max({std::abs(m(0, 1) - std::conj(m(1, 0))),
                            std::abs(m(0, 0).imag()), std::abs(m(1, 1).imag())});
    if (herm > 1e-12 * (1.0 + norm_inf))
        throw Error(ErrorCode::ZeroMatrix, "hp sample matrix is not Hermitian");

    double alpha = m(0, 0).real();
    double gamma = m(1, 1).real();
    C beta = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    double mid = 0.5 * (alpha + gamma);
    double dev = 0.5 * (alpha - gamma);
    lambda_min = mid - std::sqrt(dev * dev + std::norm(beta));
    ok = lambda_min >= -1e-9 * (1.0 + norm_inf);
}

namespace {

HpReport hp_reduce(std::vector<std::complex<double>> pts, const std::vector<double>& lam,
                   const std::vector<char>& ok) {
    HpReport rep;
    rep.min_eigenvalue = lam[0];
    rep.witness_index = 0;
    rep.passed = true;
    for (size_t k = 0; k < lam.size(); ++k) {
        if (lam[k] < rep.min_eigenvalue) {
            rep.min_eigenvalue = lam[k];
            rep.witness_index = k;
        }
        if (!ok[k]) rep.passed = false;
    }
    rep.witness = pts[rep.witness_index];
    rep.grid = std::move(pts);
    return rep;
}

}  // namespace

HpReport hp_min_eigen_sample_serial(const PolyMat& a, const SampleGrid& grid) {
    if (!has_det_one(a))
        throw Error(ErrorCode::DetNotOne, "matrix determinant is not the constant 1");
    auto pts = grid.points();
    std::vector<double> lam(pts.size());
    std::vector<char> ok(pts.size());
    for (size_t k = 0; k < pts.size(); ++k) {
        bool b;
        hp_point(a, pts[k], lam[k], b);
        ok[k] = b;
    }
    return hp_reduce(std::move(pts), lam, ok);
}

HpReport hp_min_eigen_sample(const PolyMat& a, const SampleGrid& grid) {
    if (!has_det_one(a))
        throw Error(ErrorCode::DetNotOne, "matrix determinant is not the constant 1");
    auto pts = grid.points();
    std::vector<double> lam(pts.size());
    std::vector<char> ok(pts.size());
    const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static)
    for (long k = 0; k < n; ++k) {
        bool b;
        hp_point(a, pts[static_cast<size_t>(k)], lam[static_cast<size_t>(k)], b);
        ok[static_cast<size_t>(k)] = b;
    }
    return hp_reduce(std::move(pts), lam, ok);
}

namespace {

using C = std::complex<double>;

struct ProjImage {
    C value;
    bool at_infinity;
};

ProjImage apply_hom(const Mat2C& g, C w1, C w2) {
    C n = g(0, 0) * w1 + g(0, 1) * w2;
    C d = g(1, 0) * w1 + g(1, 1) * w2;
    if (std::abs(d) <= 1e-12 * (std::abs(n) + std::abs(d))) return {C(0.0), true};
    return {n / d, false};
}

double cross(C u, C v) { return u.real() * v.imag() - u.imag() * v.real(); }

}  // namespace

Disk weyl_disk(const PolyMat& a, const ComplexPoint& z) {
    if (z.at_infinity || z.im <= 0.0)
        throw Error(ErrorCode::ArgumentNotInUpperHalfPlane,
                    "weyl disk requires z strictly in the upper half plane");
    if (!has_det_one(a))
        throw Error(ErrorCode::DetNotOne, "matrix determinant is not the constant 1");

    Mat2C g = mat_eval(a, z.value()).adjugate();  // A^{-1}(z), det = 1

    // interior reference: image of an interior point of C+
    C interior;
    for (double h = 1.0;; h += 1.0) {
        ProjImage q = apply_hom(g, C(0.0, h), C(1.0));
        if (!q.at_infinity) {
            interior = q.value;
            break;
        }
    }

    Disk d;
    d.interior = interior;

    // The image of R u {inf} under w -> (aw+b)/(cw+d) is the circle with
    // center (a conj(d) - b conj(c)) / (2i Im(c conj(d))) and radius
    // |ad - bc| / |2 Im(c conj(d))|; it degenerates to a line exactly when
    // the pole -d/c lies on R u {inf}, i.e. Im(c conj(d)) = 0.
    const C ga = g(0, 0), gb = g(0, 1), gc = g(1, 0), gd = g(1, 1);
    double denom = 2.0 * (gc * std::conj(gd)).imag();
    if (std::abs(denom) > 1e-12 * std::abs(gc) * std::abs(gd)) {
        C num = ga * std::conj(gd) - gb * std::conj(gc);
        d.center = C(num.imag() / denom, -num.real() / denom);  // num / (i denom)
        d.radius = 1.0 / std::abs(denom);                       // det g = 1
        ProjImage img0 = apply_hom(g, C(0.0), C(1.0));
        ProjImage img1 = apply_hom(g, C(1.0), C(1.0));
        ProjImage imginf = apply_hom(g, C(1.0), C(0.0));
        d.boundary1 = img0.at_infinity ? imginf.value : img0.value;
        d.boundary2 = img1.at_infinity ? imginf.value : img1.value;
        return d;
    }

    // degenerate: boundary is a line through the finite boundary images
    std::vector<C> finite;
    for (const auto& im :
         {apply_hom(g, C(0.0), C(1.0)), apply_hom(g, C(1.0), C(1.0)), apply_hom(g, C(1.0), C(0.0))})
        if (!im.at_infinity) finite.push_back(im.value);
    if (finite.size() < 2)
        throw Error(ErrorCode::SingularMatrix, "degenerate Moebius image");
    d.is_half_plane = true;
    d.boundary1 = finite[0];
    d.boundary2 = finite[1];
    // prefer the most separated pair for numerical stability
    if (finite.size() == 3) {
        double d01 = std::abs(finite[1] - finite[0]);
        double d02 = std::abs(finite[2] - finite[0]);
        double d12 = std::abs(finite[2] - finite[1]);
        if (d02 >= d01 && d02 >= d12) d.boundary2 = finite[2];
        else if (d12 >= d01 && d12 >= d02) { d.boundary1 = finite[1]; d.boundary2 = finite[2]; }
    }
    return d;
}

bool disk_contains_point(const Disk& d, C w, double tol) {
    if (!d.is_half_plane) return std::abs(w - d.center) <= d.radius + tol;
    C dir = d.boundary2 - d.boundary1;
    double len = std::abs(dir);
    double sw = cross(dir, w - d.boundary1) / len;
    double si = cross(dir, d.interior - d.boundary1) / len;
    return (si >= 0.0 ? sw : -sw) >= -tol;
}

bool disk_contains_disk(const Disk& outer, const Disk& inner, double tol) {
    if (!outer.is_half_plane && !inner.is_half_plane)
        return std::abs(inner.center - outer.center) + inner.radius <= outer.radius + tol;
    if (outer.is_half_plane && !inner.is_half_plane) {
        C dir = outer.boundary2 - outer.boundary1;
        double len = std::abs(dir);
        double sc = cross(dir, inner.center - outer.boundary1) / len;
        double si = cross(dir, outer.interior - outer.boundary1) / len;
        double toward = si >= 0.0 ? sc : -sc;
        return toward >= inner.radius - tol;
    }
    if (outer.is_half_plane && inner.is_half_plane) {
        return disk_contains_point(outer, inner.boundary1, tol) &&
               disk_contains_point(outer, inner.boundary2, tol) &&
               disk_contains_point(outer, inner.interior, tol);
    }
    return false;  // a bounded disk cannot contain a half plane
}

}  // namespace toda
