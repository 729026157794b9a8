#include "toda/factorize.hpp"

namespace toda {

namespace {

struct IntVec {
    Int x;
    Int y;
};

IntVec primitive(const Rational& a, const Rational& b) {
    Int scale;
    mpz_lcm(scale.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    Int x = a.num() * (scale / a.den());
    Int y = b.num() * (scale / b.den());
    Int g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (g != 0) {
        x /= g;
        y /= g;
    }
    if (x < 0 || (x == 0 && y < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

/// Primitive kernel vector of a singular nonzero 2x2 matrix.
IntVec kernel_vector(const Mat2Q& m) {
    if (!m(0, 0).is_zero() || !m(0, 1).is_zero())
        return primitive(m(0, 1), -m(0, 0));
    return primitive(m(1, 1), -m(1, 0));
}

Rational rat_of(const IntVec& v, int i) { return Rational(i == 0 ? v.x : v.y); }

/// Builds the det-1 basis matrix with the given columns (second column
/// rescaled by 1/det) and returns its inverse.
Mat2Q sl2_inverse_of_columns(const IntVec& col1, const Rational& c2x, const Rational& c2y) {
    Rational d = rat_of(col1, 0) * c2y - c2x * rat_of(col1, 1);
    if (d.is_zero()) throw Error(ErrorCode::SingularMatrix, "degenerate eigenbasis");
    Rational inv = d.inverse();
    Mat2Q basis{rat_of(col1, 0), inv * c2x, rat_of(col1, 1), inv * c2y};
    return basis.adjugate();  // det = 1
}

/// True if |r| = (a/b)^2 for integers a, b; then root = a/b > 0.
bool rational_square_root(const Rational& r, Rational& root) {
    Rational a = r.abs();
    if (!mpz_perfect_square_p(a.num().get_mpz_t()) ||
        !mpz_perfect_square_p(a.den().get_mpz_t()))
        return false;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), a.num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), a.den().get_mpz_t());
    root = Rational(n, d);
    return true;
}

}  // namespace

std::pair<Mat2Q, PolyMat> split_constant(const PolyMat& a) {
    if (!has_det_one(a))
        throw Error(ErrorCode::DetNotOne, "matrix determinant is not the constant 1");
    Mat2Q prefix = mat_poly_at_zero(a);
    PolyMat normalized = poly_mat(prefix.adjugate()) * a;
    return {prefix, normalized};
}

JordanStep jordan_similarity(const Mat2Q& an) {
    if (an.is_zero()) throw Error(ErrorCode::ZeroMatrix, "leading coefficient is zero");
    if (!an.det().is_zero())
        throw Error(ErrorCode::NonSingular, "leading coefficient must be singular");

    Rational tau = an.trace();
    IntVec ker = kernel_vector(an);

    if (!tau.is_zero()) {
        // eigenvector for the trace eigenvalue, then columns (eigvec, kernel)
        Mat2Q shifted = an - Mat2Q{tau, Rational(0), Rational(0), tau};
        IntVec eig = kernel_vector(shifted);
        Mat2Q s = sl2_inverse_of_columns(eig, rat_of(ker, 0), rat_of(ker, 1));
        JordanStep step{s, NormalFormKind::DiagonalizableTopLeft, tau, Rational(0)};
        Mat2Q nf = s * an * rational_inverse(s);
        if (nf != Mat2Q{tau, Rational(0), Rational(0), Rational(0)})
            throw Error(ErrorCode::ZeroMatrix, "diagonalization failed");
        return step;
    }

    // nilpotent: an^2 = 0, columns (kernel, preimage of kernel)
    Rational mu;  // an * e_j = mu * ker for the chosen unit vector
    Rational w1, w2;
    if (!an(0, 0).is_zero() || !an(1, 0).is_zero()) {
        mu = ker.x != 0 ? an(0, 0) / Rational(ker.x) : an(1, 0) / Rational(ker.y);
        w1 = mu.inverse();
        w2 = Rational(0);
    } else {
        mu = ker.x != 0 ? an(0, 1) / Rational(ker.x) : an(1, 1) / Rational(ker.y);
        w1 = Rational(0);
        w2 = mu.inverse();
    }
    // an * (w1,w2) = ker now; basis columns [alpha*ker, w/(alpha*delta)]
    Rational delta = rat_of(ker, 0) * w2 - w1 * rat_of(ker, 1);
    Rational alpha(1);
    Rational root;
    if (rational_square_root(delta, root)) alpha = root.inverse();
    Rational d = alpha * alpha * delta;
    Rational inv = (alpha * delta).inverse();
    Mat2Q basis{alpha * rat_of(ker, 0), inv * w1, alpha * rat_of(ker, 1), inv * w2};
    Mat2Q s = basis.adjugate();
    Rational entry = d.inverse();
    JordanStep step{s, NormalFormKind::NilpotentUpperRight, Rational(0), entry};
    Mat2Q nf = s * an * rational_inverse(s);
    if (nf != Mat2Q{Rational(0), entry, Rational(0), Rational(0)})
        throw Error(ErrorCode::ZeroMatrix, "nilpotent normalization failed");
    return step;
}

PeelResult peel_left(const PolyMat& b) {
    int n = mat_poly_degree(b);
    if (n < 1) throw Error(ErrorCode::DegreeZero, "cannot peel a constant matrix");
    Mat2Q an = mat_poly_coeff(b, n);
    JordanStep js = jordan_similarity(an);

    Mat2Q s_inv = js.s.adjugate();
    PolyMat bp = poly_mat(js.s) * b * poly_mat(s_inv);

    // the degree-n entry sits in the top row; kill it with a row operation
    // against the entry below, which is nonzero since det bp = 1
    int col = js.kind == NormalFormKind::DiagonalizableTopLeft ? 0 : 1;
    const PolyQ& top = bp(0, col);
    const PolyQ& bottom = bp(1, col);
    if (top.degree() != n || bottom.is_zero())
        throw Error(ErrorCode::ZeroMatrix, "unexpected degree pattern in peel");
    int t = bottom.degree();
    Rational h = top.leading() / bottom.leading();
    int m = n - t;

    // E = [[1, h z^m],[0,1]] = 1 - h z^m J P_2;  C = E^-1 bp
    PolyQ hm = PolyQ::monomial(h, m);
    PolyMat c = bp;
    c(0, 0) = bp(0, 0) - hm * bp(1, 0);
    c(0, 1) = bp(0, 1) - hm * bp(1, 1);
    if (mat_poly_degree(c) > n - 1)
        throw Error(ErrorCode::ZeroMatrix, "peel did not reduce the degree");

    ConjugatedJp cj = conjugate_jp(js.s, Projection(0, 1));
    Factor f(PolyQ::monomial(-(cj.c * h), m), cj.proj);
    PolyMat rest = poly_mat(s_inv) * c * poly_mat(js.s);
    return {std::move(f), std::move(rest)};
}

Factorization factorize(const PolyMat& a) {
    auto [prefix, b] = split_constant(a);

    std::vector<Factor> peeled;
    while (mat_poly_degree(b) >= 1) {
        PeelResult r = peel_left(b);
        peeled.push_back(std::move(r.factor));
        b = std::move(r.rest);
    }
    // normalized part fully consumed; b is now the identity
    if (b != poly_mat(Mat2Q::identity()))
        throw Error(ErrorCode::ZeroMatrix, "factorization residue is not the identity");

    // merge adjacent factors with equal projections: (1+pJP)(1+qJP) = 1+(p+q)JP
    Factorization out;
    out.prefix = prefix;
    for (auto& f : peeled) {
        if (!out.factors.empty() && out.factors.back().proj == f.proj) {
            PolyQ sum = out.factors.back().p + f.p;
            out.factors.pop_back();
            if (!sum.is_zero())
                out.factors.emplace_back(std::move(sum), f.proj);
        } else {
            out.factors.push_back(std::move(f));
        }
    }
    return out;
}

PolyMat expand(const Factorization& f) {
    PolyMat out = poly_mat(f.prefix);
    for (const auto& fac : f.factors) out = out * elementary(fac);
    return out;
}

}  // namespace toda
