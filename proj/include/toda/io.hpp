#pragma once

#include <optional>
#include <string>

#include "toda/herglotz.hpp"

#include <json.hpp>

namespace toda {

/// A herglotz input is either a generator pair (transfer-matrix
/// factorization + boundary value y) or explicit num/den coefficient lists.
struct HerglotzInput {
    std::optional<std::pair<Factorization, ExtendedReal>> generator;
    std::optional<RatFunc> explicit_f;

    RatFunc function() const {
        if (explicit_f) return *explicit_f;
        return herglotz_generate(generator->first, generator->second);
    }
};

/// Parsed problem file; at least one of the members is set.
struct ProblemFile {
    std::optional<PolyMat> matrix;
    std::optional<Factorization> factorization;
    std::optional<HerglotzInput> herglotz;
};

ProblemFile parse_problem(const std::string& text);

nlohmann::json matrix_to_json(const PolyMat& a);
nlohmann::json factorization_to_json(const Factorization& f);
nlohmann::json ratfunc_to_json(const RatFunc& f);
nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json hp_report_to_json(const HpReport& r);
nlohmann::json herglotz_sample_to_json(const HerglotzSample& s);
nlohmann::json disk_to_json(const Disk& d);

PolyMat matrix_from_json(const nlohmann::json& j);
Factorization factorization_from_json(const nlohmann::json& j);

std::string serialize_problem(const ProblemFile& p);

}  // namespace toda
