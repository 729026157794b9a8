#include <doctest.h>

#include "testutil.hpp"

using namespace toda;
using namespace toda::testutil;

namespace {

const PolyQ Z = PolyQ::monomial(Rational(1), 1);

Mat2Q q4(long a, long b, long c, long d) {
    return {Rational(a), Rational(b), Rational(c), Rational(d)};
}

PolyMat pm(PolyQ a, PolyQ b, PolyQ c, PolyQ d) {
    return {std::move(a), std::move(b), std::move(c), std::move(d)};
}

const PolyMat kWorked = pm(PolyQ::one(), -Z, Z, PolyQ::one() - Z * Z);

}  // namespace

TEST_CASE("split_constant examples") {
    auto [p1, n1] = split_constant(kWorked);
    CHECK(p1 == Mat2Q::identity());
    CHECK(n1 == kWorked);

    PolyMat c = poly_mat(Mat2Q{Rational(2), Rational(0), Rational(0), Rational(1, 2)});
    auto [p2, n2] = split_constant(c);
    CHECK(p2 == Mat2Q{Rational(2), Rational(0), Rational(0), Rational(1, 2)});
    CHECK(n2 == poly_mat(Mat2Q::identity()));

    PolyMat a = pm(PolyQ(Rational(2)), PolyQ::monomial(Rational(2), 1), PolyQ::zero(),
                   PolyQ(Rational(1, 2)));
    auto [p3, n3] = split_constant(a);
    CHECK(p3 == Mat2Q{Rational(2), Rational(0), Rational(0), Rational(1, 2)});
    CHECK(n3 == pm(PolyQ::one(), Z, PolyQ::zero(), PolyQ::one()));
    CHECK(poly_mat(p3) * n3 == a);

    CHECK_THROWS_AS(split_constant(pm(PolyQ::one(), Z, PolyQ::zero(), PolyQ(Rational(2)))),
                    Error);
}

TEST_CASE("jordan_similarity examples") {
    SUBCASE("diagonalizable, trace 1") {
        JordanStep js = jordan_similarity(q4(1, 1, 0, 0));
        CHECK(js.kind == NormalFormKind::DiagonalizableTopLeft);
        CHECK(js.trace == Rational(1));
        CHECK(js.s == q4(1, 1, 0, 1));
        CHECK(js.s * q4(1, 1, 0, 0) * rational_inverse(js.s) == q4(1, 0, 0, 0));
    }
    SUBCASE("diagonalizable, trace -1") {
        JordanStep js = jordan_similarity(q4(0, 0, 0, -1));
        CHECK(js.kind == NormalFormKind::DiagonalizableTopLeft);
        CHECK(js.trace == Rational(-1));
        CHECK(js.s == q4(0, 1, -1, 0));  // -J
        CHECK(js.s * q4(0, 0, 0, -1) * rational_inverse(js.s) == q4(-1, 0, 0, 0));
    }
    SUBCASE("nilpotent") {
        JordanStep js = jordan_similarity(q4(0, 0, 1, 0));
        CHECK(js.kind == NormalFormKind::NilpotentUpperRight);
        CHECK(js.s == q4(0, 1, -1, 0));  // -J
        Mat2Q nf = js.s * q4(0, 0, 1, 0) * rational_inverse(js.s);
        CHECK(nf(0, 1) == js.nilpotent_entry);
        CHECK(js.nilpotent_entry.abs() == Rational(1));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(jordan_similarity(q4(0, 0, 0, 0)), Error);
        CHECK_THROWS_AS(jordan_similarity(q4(1, 0, 0, 1)), Error);
    }
}

TEST_CASE("jordan_similarity on random singular matrices") {
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        // rank-one matrix u w^t
        Rational u1 = rand_rational(rng), u2 = rand_rational(rng);
        Rational w1 = rand_rational(rng), w2 = rand_rational(rng);
        Mat2Q m{u1 * w1, u1 * w2, u2 * w1, u2 * w2};
        if (m.is_zero()) continue;
        JordanStep js = jordan_similarity(m);
        CHECK(js.s.det() == Rational(1));
        Mat2Q nf = js.s * m * rational_inverse(js.s);
        if (js.kind == NormalFormKind::DiagonalizableTopLeft)
            CHECK(nf == Mat2Q{js.trace, Rational(0), Rational(0), Rational(0)});
        else
            CHECK(nf == Mat2Q{Rational(0), js.nilpotent_entry, Rational(0), Rational(0)});
    }
}

TEST_CASE("peel_left examples") {
    SUBCASE("already elementary") {
        auto [f, rest] = peel_left(pm(PolyQ::one(), -Z, PolyQ::zero(), PolyQ::one()));
        CHECK(f == Factor(Z, projection_of(0, 1)));
        CHECK(rest == poly_mat(Mat2Q::identity()));
    }
    SUBCASE("worked example") {
        auto [f, rest] = peel_left(kWorked);
        CHECK(f == Factor(Z, projection_of(1, 0)));
        CHECK(rest == pm(PolyQ::one(), -Z, PolyQ::zero(), PolyQ::one()));
        CHECK(elementary(f) * rest == kWorked);
    }
    SUBCASE("negative degree-2 monomial") {
        PolyMat b = pm(PolyQ::one(), PolyQ::zero(), PolyQ::monomial(Rational(-3), 2),
                       PolyQ::one());
        auto [f, rest] = peel_left(b);
        CHECK(f == Factor(PolyQ::monomial(Rational(-3), 2), projection_of(1, 0)));
        CHECK(rest == poly_mat(Mat2Q::identity()));
        CHECK(elementary(f) * rest == b);
    }
    SUBCASE("constant input rejected") {
        CHECK_THROWS_AS(peel_left(poly_mat(Mat2Q::identity())), Error);
    }
}

TEST_CASE("peel decreases degree and is exact") {
    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        PolyMat b = expand(rand_factorization(rng));
        while (mat_poly_degree(b) >= 1) {
            int n = mat_poly_degree(b);
            auto [f, rest] = peel_left(b);
            CHECK(elementary(f) * rest == b);
            CHECK(mat_poly_degree(rest) <= n - 1);
            CHECK(f.p.degree() >= 1);
            b = rest;
        }
    }
}

TEST_CASE("factorize examples") {
    CHECK(factorize(poly_mat(Mat2Q::identity())) == Factorization{});

    Factorization f1 = factorize(kWorked);
    CHECK(f1.prefix == Mat2Q::identity());
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0] == Factor(Z, projection_of(1, 0)));
    CHECK(f1.factors[1] == Factor(Z, projection_of(0, 1)));

    PolyMat a2 = pm(PolyQ::one(), Z, Z, Z * Z + PolyQ::one());
    Factorization f2 = factorize(a2);
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0] == Factor(Z, projection_of(1, 0)));
    CHECK(f2.factors[1] == Factor(-Z, projection_of(0, 1)));
    CHECK(expand(f2) == a2);
}

TEST_CASE("expand examples") {
    CHECK(expand(Factorization{}) == poly_mat(Mat2Q::identity()));
    Factorization f;
    f.factors.emplace_back(Z, projection_of(1, 0));
    f.factors.emplace_back(Z, projection_of(0, 1));
    CHECK(expand(f) == kWorked);
    Factorization g;
    g.factors.emplace_back(Z * Z, projection_of(0, 1));
    CHECK(expand(g) == pm(PolyQ::one(), -(Z * Z), PolyQ::zero(), PolyQ::one()));
}

TEST_CASE("round trip factorize(expand(F)) = F") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        Factorization f = rand_factorization(rng);
        Factorization g = factorize(expand(f));
        REQUIRE(g == f);
    }
}

TEST_CASE("factorize is deterministic and idempotent through expand") {
    Rng rng(43);
    for (int i = 0; i < 30; ++i) {
        PolyMat a = expand(rand_factorization(rng));
        Factorization f = factorize(a);
        CHECK(factorize(expand(f)) == f);
        CHECK(expand(f) == a);
    }
}

TEST_CASE("leading coefficient null space matches last projection") {
    Rng rng(47);
    for (int i = 0; i < 50; ++i) {
        Factorization f = rand_factorization(rng);
        PolyMat a = expand(f);
        int n = mat_poly_degree(a);
        Mat2Q an = mat_poly_coeff(a, n);
        const Projection& last = f.factors.back().proj;
        // N(A_n) = N(P_N): A_n annihilates the kernel direction of P_N
        Projection ker = last.kernel_line();
        Rational k1(ker.v1()), k2(ker.v2());
        CHECK((an(0, 0) * k1 + an(0, 1) * k2).is_zero());
        CHECK((an(1, 0) * k1 + an(1, 1) * k2).is_zero());
        CHECK_FALSE(an.is_zero());
    }
}
