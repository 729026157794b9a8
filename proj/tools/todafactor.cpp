#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "toda/io.hpp"

namespace {

using nlohmann::json;
using namespace toda;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GridFlags {
    SampleGrid grid;
    void attach(CLI::App* cmd) {
        cmd->add_option("--re-min", grid.re_min);
        cmd->add_option("--re-max", grid.re_max);
        cmd->add_option("--re-count", grid.re_count);
        cmd->add_option("--im-min", grid.im_min);
        cmd->add_option("--im-max", grid.im_max);
        cmd->add_option("--im-count", grid.im_count);
    }
};

std::complex<double> parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw Error(ErrorCode::SyntaxError, "--z expects RE,IM");
    try {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorCode::SyntaxError, "--z expects RE,IM");
    }
}

PolyMat matrix_of(const ProblemFile& p) {
    if (p.matrix) return *p.matrix;
    if (p.factorization) return expand(*p.factorization);
    throw Error(ErrorCode::IncompatibleInput, "command needs a matrix or factorization input");
}

Factorization factorization_of(const ProblemFile& p) {
    if (p.factorization) return *p.factorization;
    if (p.matrix) return factorize(*p.matrix);
    throw Error(ErrorCode::IncompatibleInput, "command needs a matrix or factorization input");
}

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::SyntaxError:
        case ErrorCode::IncompatibleInput:
            return 2;
        default:
            return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact factorization and Toda-map classification of polynomial SL(2) "
                 "matrix functions"};
    app.require_subcommand(1);

    std::string input_path;
    std::string z_flag;
    std::string side_flag = "plus";
    unsigned long seed = 0;
    app.add_option("--seed", seed, "random seed for sampling commands")->capture_default_str();

    GridFlags gf;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", input_path, "problem file (JSON); '-' for stdin");
        return cmd;
    };

    auto* c_factor = add_common(app.add_subcommand("factor", "factor a matrix into elementary factors"));
    auto* c_classify = add_common(app.add_subcommand("classify", "classify a factorization or matrix"));
    auto* c_synth = add_common(app.add_subcommand("synthesize", "expand a factorization into a matrix"));
    auto* c_hp = add_common(app.add_subcommand("verify-hp", "sample the transfer-matrix positivity condition"));
    gf.attach(c_hp);
    auto* c_act = add_common(app.add_subcommand("act", "apply the Toda map to a Herglotz function"));
    gf.attach(c_act);
    c_act->add_option("--side", side_flag, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
    auto* c_disk = add_common(app.add_subcommand("weyl-disk", "Weyl disk at a point of the upper half plane"));
    c_disk->add_option("--z", z_flag, "evaluation point RE,IM")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        ProblemFile problem = parse_problem(read_input(input_path));
        json report;
        int rc = 0;

        if (c_factor->parsed()) {
            report["command"] = "factor";
            report["factorization"] = factorization_to_json(factorization_of(problem));
        } else if (c_classify->parsed()) {
            report["command"] = "classify";
            Factorization f = factorization_of(problem);
            bool up_to_prefix = f.prefix != Mat2Q::identity();
            if (up_to_prefix) {
                // verdict of the normalized part; prefixes do not change
                // whether the domain is empty
                report["up_to_constant_prefix"] = true;
                report["prefix"] = factorization_to_json(f)["prefix"];
                f.prefix = Mat2Q::identity();
            }
            report["verdict"] = verdict_to_json(classify(f));
        } else if (c_synth->parsed()) {
            report["command"] = "synthesize";
            if (!problem.factorization)
                throw Error(ErrorCode::IncompatibleInput, "synthesize needs a factorization input");
            report["matrix"] = matrix_to_json(expand(*problem.factorization));
        } else if (c_hp->parsed()) {
            report["command"] = "verify-hp";
            HpReport r = hp_min_eigen_sample(matrix_of(problem), gf.grid);
            report["hp"] = hp_report_to_json(r);
            if (!r.passed) rc = 1;
        } else if (c_act->parsed()) {
            report["command"] = "act";
            if (!problem.herglotz)
                throw Error(ErrorCode::IncompatibleInput, "act needs a herglotz input");
            TodaSide side = side_flag == "minus" ? TodaSide::Minus : TodaSide::Plus;
            RatFunc g = toda_apply(matrix_of(problem), problem.herglotz->function(), side);
            HerglotzSample s = herglotz_check(g, gf.grid);
            report["result"] = ratfunc_to_json(g);
            report["sample"] = herglotz_sample_to_json(s);
            if (!s.passed) rc = 1;
        } else if (c_disk->parsed()) {
            report["command"] = "weyl-disk";
            std::complex<double> z = parse_point(z_flag);
            ComplexPoint zp{z.real(), z.imag(), false};
            report["disk"] = disk_to_json(weyl_disk(matrix_of(problem), zp));
            report["z"] = {{"re", z.real()}, {"im", z.imag()}};
        }

        std::cout << report.dump(2) << "\n";
        return rc;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
