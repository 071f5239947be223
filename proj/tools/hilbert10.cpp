#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbert10/arith.hpp"
#include "hilbert10/combiner.hpp"
#include "hilbert10/lucas.hpp"
#include "hilbert10/parse.hpp"
#include "hilbert10/pipeline.hpp"
#include "hilbert10/selfcheck.hpp"

namespace {

// Expansion ceiling for the subcommands that need a canonical form.
constexpr std::size_t kTermBudget = std::size_t(1) << 22;

h10::BigInt parse_bigint(const std::string& s) {
    try {
        return h10::BigInt(s, 10);
    } catch (const std::invalid_argument&) {
        throw h10::ParseError("not a decimal integer: " + s, 1, 1);
    }
}

h10::SparsePoly expand_or_fail(const h10::Expr& e) {
    auto p = e.expand(kTermBudget);
    if (!p) throw std::domain_error("polynomial too large to expand");
    return std::move(*p);
}

std::vector<h10::BigInt> parse_point(const std::string& csv) {
    std::vector<h10::BigInt> z;
    if (csv.empty()) return z;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) z.push_back(parse_bigint(item));
    return z;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::domain_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_verify(const std::string& suite) {
    const auto results = h10::run_suites(suite);
    bool ok = true;
    for (const auto& r : results) {
        std::cout << r.name << ": " << r.checks << " checks, " << r.failures.size()
                  << " failures\n";
        for (const auto& f : r.failures) std::cout << "  FAIL " << f << "\n";
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Number-theoretic toolkit: polynomial engine, Lucas/Pell sequences, "
                 "relation combining and the 11-unknown reduction"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "1.0.0");

    std::string poly_text, at_csv, which, file_path, suite;
    std::string s_nu, s_delta, s_A, s_n, s_count;
    std::vector<std::string> m3_args;

    auto* cmd_parse = app.add_subcommand("parse", "Echo the canonical form of a polynomial");
    cmd_parse->add_option("poly", poly_text, "polynomial text")->required();

    auto* cmd_eval = app.add_subcommand("eval", "Evaluate a polynomial at a point");
    cmd_eval->add_option("poly", poly_text, "polynomial text")->required();
    cmd_eval->add_option("--at", at_csv, "comma-separated values for a,z1,z2,...; "
                                         "missing variables are 0");

    auto* cmd_degree = app.add_subcommand("degree", "Total degree of a polynomial");
    cmd_degree->add_option("poly", poly_text, "polynomial text")->required();

    auto* cmd_eta = app.add_subcommand("eta", "Degree bound eta(nu, delta)");
    cmd_eta->add_option("nu", s_nu, "unknown count over N")->required();
    cmd_eta->add_option("delta", s_delta, "degree over N, at least 1")->required();

    auto* cmd_reduce =
        app.add_subcommand("reduce", "Build the 11-unknown form of a polynomial file "
                                     "and report its structure");
    cmd_reduce->add_option("poly-file", file_path, "file in the polynomial grammar")
        ->required();

    auto* cmd_lucas = app.add_subcommand("lucas", "Lucas sequence value");
    cmd_lucas->add_option("which", which, "psi or chi")
        ->required()
        ->check(CLI::IsMember({"psi", "chi"}));
    cmd_lucas->add_option("A", s_A, "sequence parameter")->required();
    cmd_lucas->add_option("n", s_n, "index, may be negative")->required();

    auto* cmd_m3 = app.add_subcommand("m3", "Relation-combining polynomial");
    cmd_m3->require_subcommand(1);
    auto* cmd_m3_decide = cmd_m3->add_subcommand(
        "decide", "Smallest n >= 0 with M3(A1,A2,A3,S,T,R,n) = 0, or none");
    cmd_m3_decide->add_option("args", m3_args, "A1 A2 A3 S T R")
        ->required()
        ->expected(6);

    auto* cmd_three = app.add_subcommand("three-squares",
                                         "Decompose n as x^2 + y^2 + z^2 + z");
    cmd_three->add_option("n", s_n, "nonnegative integer")->required();

    auto* cmd_verify = app.add_subcommand("verify", "Run a named property suite");
    cmd_verify->add_option("suite", suite, "suite name or 'all'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_parse) {
            std::cout << h10::print_poly(expand_or_fail(h10::parse_poly(poly_text)))
                      << "\n";
        } else if (*cmd_eval) {
            std::cout << h10::to_string(h10::parse_poly(poly_text).eval(parse_point(at_csv)))
                      << "\n";
        } else if (*cmd_degree) {
            const h10::Expr e = h10::parse_poly(poly_text);
            if (const auto p = e.expand(kTermBudget)) {
                std::cout << p->total_degree() << "\n";
            } else {
                std::cout << h10::to_string(e.degree_bound(h10::DegreeEnv())) << "\n";
            }
        } else if (*cmd_eta) {
            const h10::BigInt nu = parse_bigint(s_nu);
            if (sgn(nu) < 0 || !nu.fits_ulong_p())
                throw std::domain_error("nu out of range");
            std::cout << h10::to_string(h10::eta(nu.get_ui(), parse_bigint(s_delta)))
                      << "\n";
        } else if (*cmd_reduce) {
            const h10::SparsePoly P = expand_or_fail(h10::parse_poly(read_file(file_path)));
            const auto cp = h10::default_coding(P);
            const auto rep = h10::reduction_report(P, cp);
            nlohmann::json doc;
            doc["max_var"] = rep.max_var;
            doc["degree_bound"] = h10::to_string(rep.degree_bound);
            doc["eta"] = h10::to_string(rep.eta_value);
            doc["node_count"] = rep.node_count;
            doc["nu"] = P.max_vars();
            doc["delta"] = std::to_string(P.total_degree());
            std::cout << doc.dump(2) << "\n";
        } else if (*cmd_lucas) {
            const h10::BigInt A = parse_bigint(s_A);
            const h10::BigInt n = parse_bigint(s_n);
            std::cout << h10::to_string(which == "psi" ? h10::lucas_psi_int(A, n)
                                                       : h10::lucas_chi_int(A, n))
                      << "\n";
        } else if (*cmd_m3_decide) {
            std::vector<h10::BigInt> v;
            for (const auto& s : m3_args) v.push_back(parse_bigint(s));
            const auto root = h10::m3_exists_nonneg_root(v[0], v[1], v[2], v[3], v[4], v[5]);
            std::cout << (root ? h10::to_string(*root) : "none") << "\n";
        } else if (*cmd_three) {
            const auto t = h10::three_squares_decompose(parse_bigint(s_n));
            std::cout << h10::to_string(t.x) << " " << h10::to_string(t.y) << " "
                      << h10::to_string(t.z) << "\n";
        } else if (*cmd_verify) {
            return run_verify(suite);
        }
    } catch (const h10::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
