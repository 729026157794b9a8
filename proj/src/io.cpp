#include "toda/io.hpp"

namespace toda {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Int(j.get<long>()));
    throw Error(ErrorCode::NonRationalCoefficient,
                "rationals must be strings like \"p/q\": " + j.dump());
}

Int integer_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw Error(ErrorCode::NonRationalCoefficient, "not an integer: " + j.dump());
        return v;
    }
    throw Error(ErrorCode::NonRationalCoefficient, "not an integer: " + j.dump());
}

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Mat2Q mat2q_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw Error(ErrorCode::SyntaxError, "expected a 2x2 matrix of rationals");
    return {rational_from_json(j[0][0]), rational_from_json(j[0][1]),
            rational_from_json(j[1][0]), rational_from_json(j[1][1])};
}

json mat2q_to_json(const Mat2Q& m) {
    return json::array({json::array({m(0, 0).str(), m(0, 1).str()}),
                        json::array({m(1, 0).str(), m(1, 1).str()})});
}

PolyQ poly_from_coeff_list(const json& j, int first_degree) {
    if (!j.is_array())
        throw Error(ErrorCode::SyntaxError, "expected a coefficient list");
    std::vector<Rational> coeffs(static_cast<size_t>(first_degree), Rational(0));
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return PolyQ(std::move(coeffs));
}

}  // namespace

PolyMat matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw Error(ErrorCode::SyntaxError, "matrix: expected a nonempty coefficient list");
    PolyMat a{PolyQ::zero(), PolyQ::zero(), PolyQ::zero(), PolyQ::zero()};
    int k = 0;
    for (const auto& jk : j) {
        Mat2Q ak = mat2q_from_json(jk);
        for (int i = 0; i < 4; ++i)
            a.e[static_cast<size_t>(i)] +=
                PolyQ::monomial(ak.e[static_cast<size_t>(i)], k);
        ++k;
    }
    if (!has_det_one(a))
        throw Error(ErrorCode::DetNotOne, "matrix determinant is not the constant 1");
    return a;
}

json matrix_to_json(const PolyMat& a) {
    json out = json::array();
    int n = std::max(mat_poly_degree(a), 0);
    for (int k = 0; k <= n; ++k) out.push_back(mat2q_to_json(mat_poly_coeff(a, k)));
    return out;
}

Factorization factorization_from_json(const json& j) {
    if (!j.is_object())
        throw Error(ErrorCode::SyntaxError, "factorization: expected an object");
    Factorization f;
    if (j.contains("prefix")) {
        f.prefix = mat2q_from_json(j.at("prefix"));
        if (f.prefix.det() != Rational(1))
            throw Error(ErrorCode::DetNotOne, "factorization prefix must have det 1");
    }
    if (!j.contains("factors") || !j.at("factors").is_array())
        throw Error(ErrorCode::SyntaxError, "factorization: missing factors array");
    for (const auto& jf : j.at("factors")) {
        if (!jf.is_object() || !jf.contains("poly") || !jf.contains("direction"))
            throw Error(ErrorCode::SyntaxError, "factor: expected {poly, direction}");
        const auto& dir = jf.at("direction");
        if (!dir.is_array() || dir.size() != 2)
            throw Error(ErrorCode::SyntaxError, "factor direction: expected [v1, v2]");
        // coefficients start at degree 1; p(0) = 0 is unrepresentable
        PolyQ p = poly_from_coeff_list(jf.at("poly"), 1);
        f.factors.emplace_back(std::move(p),
                               Projection(integer_from_json(dir[0]), integer_from_json(dir[1])));
    }
    for (size_t i = 1; i < f.factors.size(); ++i)
        if (f.factors[i].proj == f.factors[i - 1].proj)
            throw Error(ErrorCode::SyntaxError,
                        "consecutive factors must have distinct projections");
    return f;
}

json factorization_to_json(const Factorization& f) {
    json out;
    out["prefix"] = mat2q_to_json(f.prefix);
    json factors = json::array();
    for (const auto& fac : f.factors) {
        json poly = json::array();
        for (int k = 1; k <= fac.p.degree(); ++k) poly.push_back(fac.p.coeff(k).str());
        factors.push_back({{"poly", poly},
                           {"direction", json::array({int_to_json(fac.proj.v1()),
                                                      int_to_json(fac.proj.v2())})}});
    }
    out["factors"] = factors;
    return out;
}

json ratfunc_to_json(const RatFunc& f) {
    auto poly_json = [](const PolyG& p) {
        json out = json::array();
        for (const auto& c : p.coeffs()) {
            if (c.is_real())
                out.push_back(c.re().str());
            else
                out.push_back(json::array({c.re().str(), c.im().str()}));
        }
        return out;
    };
    json out;
    out["num"] = poly_json(f.num());
    out["den"] = poly_json(f.den());
    if (f.is_infinite()) out["infinite"] = true;
    return out;
}

ProblemFile parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, std::string("JSON parse error: ") + e.what());
    }
    if (!j.is_object())
        throw Error(ErrorCode::SyntaxError, "problem file must be a JSON object");

    ProblemFile p;
    if (j.contains("matrix")) p.matrix = matrix_from_json(j.at("matrix"));
    if (j.contains("factorization"))
        p.factorization = factorization_from_json(j.at("factorization"));
    if (j.contains("herglotz")) {
        const auto& jh = j.at("herglotz");
        if (!jh.is_object())
            throw Error(ErrorCode::SyntaxError, "herglotz: expected an object");
        HerglotzInput h;
        if (jh.contains("transfer")) {
            Factorization tm = factorization_from_json(jh.at("transfer"));
            ExtendedReal y = ExtendedReal::infinity();
            if (jh.contains("y")) {
                const auto& jy = jh.at("y");
                if (!(jy.is_string() && jy.get<std::string>() == "inf"))
                    y = ExtendedReal::finite(rational_from_json(jy));
            }
            h.generator = {std::move(tm), y};
        } else if (jh.contains("num") && jh.contains("den")) {
            PolyQ num = poly_from_coeff_list(jh.at("num"), 0);
            PolyQ den = poly_from_coeff_list(jh.at("den"), 0);
            if (den.is_zero() && num.is_zero())
                throw Error(ErrorCode::SyntaxError, "herglotz 0/0 is not a function");
            h.explicit_f = RatFunc::from_real(num, den);
        } else {
            throw Error(ErrorCode::SyntaxError,
                        "herglotz: expected {transfer, y} or {num, den}");
        }
        p.herglotz = std::move(h);
    }
    if (!p.matrix && !p.factorization && !p.herglotz)
        throw Error(ErrorCode::SyntaxError,
                    "problem file needs one of: matrix, factorization, herglotz");
    return p;
}

std::string serialize_problem(const ProblemFile& p) {
    json out;
    if (p.matrix) out["matrix"] = matrix_to_json(*p.matrix);
    if (p.factorization) out["factorization"] = factorization_to_json(*p.factorization);
    if (p.herglotz) {
        json jh;
        if (p.herglotz->generator) {
            jh["transfer"] = factorization_to_json(p.herglotz->generator->first);
            const auto& y = p.herglotz->generator->second;
            jh["y"] = y.at_infinity ? json("inf") : json(y.x.str());
        } else {
            json rf = ratfunc_to_json(*p.herglotz->explicit_f);
            jh["num"] = rf["num"];
            jh["den"] = rf["den"];
        }
        out["herglotz"] = jh;
    }
    return out.dump();
}

namespace {

const char* verdict_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Constant: return "constant";
        case VerdictKind::TransferMatrix: return "transfer-matrix";
        case VerdictKind::InverseTransferMatrix: return "inverse-transfer-matrix";
        case VerdictKind::TrivialSingular: return "trivial-singular";
        case VerdictKind::EmptyDomain: return "empty-domain";
    }
    return "?";
}

json complex_to_json(std::complex<double> z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

}  // namespace

json verdict_to_json(const Verdict& v) {
    json out;
    out["kind"] = verdict_name(v.kind);
    if (!v.couplings.empty()) {
        json c = json::array();
        for (const auto& [L, p] : v.couplings)
            c.push_back({{"L", L.str()},
                         {"direction", json::array({int_to_json(p.v1()), int_to_json(p.v2())})}});
        out["couplings"] = c;
    }
    if (v.trivial) {
        json poly = json::array();
        for (int k = 1; k <= v.trivial->p.degree(); ++k)
            poly.push_back(v.trivial->p.coeff(k).str());
        out["factor"] = {{"poly", poly},
                         {"direction", json::array({int_to_json(v.trivial->proj.v1()),
                                                    int_to_json(v.trivial->proj.v2())})}};
        out["boundary"] = v.boundary->at_infinity ? json("inf") : json(v.boundary->x.str());
        out["boundary_vector"] = json::array({int_to_json(v.boundary_v1), int_to_json(v.boundary_v2)});
    }
    return out;
}

json hp_report_to_json(const HpReport& r) {
    return {{"passed", r.passed},
            {"min_eigenvalue", r.min_eigenvalue},
            {"witness", complex_to_json(r.witness)},
            {"grid_points", r.grid.size()}};
}

json herglotz_sample_to_json(const HerglotzSample& s) {
    return {{"passed", s.passed},
            {"min_imag", s.min_imag},
            {"witness", complex_to_json(s.witness)},
            {"poles_skipped", s.poles_skipped}};
}

json disk_to_json(const Disk& d) {
    json out;
    out["is_half_plane"] = d.is_half_plane;
    if (d.is_half_plane) {
        out["boundary"] = json::array({complex_to_json(d.boundary1), complex_to_json(d.boundary2)});
        out["interior"] = complex_to_json(d.interior);
    } else {
        out["center"] = complex_to_json(d.center);
        out["radius"] = d.radius;
    }
    return out;
}

}  // namespace toda
