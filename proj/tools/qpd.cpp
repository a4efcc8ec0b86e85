// qpd: exact quantum-partial-derivative calculus on the central extension of
// U(u(2)). Subcommands: normalize, derive, matrix, verify, limit.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 parse error,
// 4 pole or degenerate input.

#include <cctype>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpd/central.hpp"
#include "qpd/errors.hpp"
#include "qpd/inversion.hpp"
#include "qpd/random.hpp"
#include "qpd/suites.hpp"
#include "qpd/textio.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailure = 1;
constexpr int kUsageError = 2;
constexpr int kParseError = 3;
constexpr int kPoleOrDegenerate = 4;

qpd::AlphaVector parse_alpha(const std::string& text) {
    std::vector<mpq_class> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw qpd::parse_error(0, "empty component in --alpha");
        mpq_class q(cur);
        q.canonicalize();
        parts.push_back(q);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            cur.push_back(c);
    }
    flush();
    if (parts.size() != 4) throw qpd::parse_error(0, "--alpha needs four comma-separated rationals");
    return {qpd::GaussRational(parts[0]), qpd::GaussRational(parts[1]), qpd::GaussRational(parts[2]),
            qpd::GaussRational(parts[3])};
}

json check_to_json(const qpd::CheckResult& c) {
    json j;
    j["identity"] = c.identity;
    j["status"] = c.pass ? "pass" : "fail";
    if (!c.alpha.empty()) j["alpha"] = c.alpha;
    if (!c.residual.empty()) j["residual_entry"] = c.residual;
    j["wall_time"] = c.wall_time;
    return j;
}

int emit_checks(const qpd::CheckList& checks, bool as_json) {
    bool ok = qpd::all_pass(checks);
    if (as_json) {
        json out = json::array();
        for (const auto& c : checks) out.push_back(check_to_json(c));
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.identity;
            if (!c.alpha.empty()) std::cout << " [alpha=" << c.alpha << "]";
            if (!c.pass && !c.residual.empty()) std::cout << "  residual: " << c.residual;
            std::cout << "\n";
        }
        std::cout << (ok ? "all identities hold\n" : "verification FAILED\n");
    }
    return ok ? kOk : kVerifyFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact QPD calculus on the central extension of U(u(2))"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string expr_arg, deriv_name, suite_name, alpha_arg, fixture_path;
    int matrix_size = 4;

    auto* cmd_normalize = app.add_subcommand("normalize", "print the PBW normal form of an expression");
    cmd_normalize->add_option("expr", expr_arg, "expression")->required();

    auto* cmd_derive = app.add_subcommand(
        "derive", "apply a quantum partial derivative (dt means the shifted t-derivative)");
    cmd_derive->add_option("name", deriv_name, "one of dt dx dy dz")->required();
    cmd_derive->add_option("expr", expr_arg, "expression")->required();

    auto* cmd_matrix = app.add_subcommand("matrix", "derivative matrix of an expression");
    cmd_matrix->add_option("size", matrix_size, "2 or 4")->required();
    cmd_matrix->add_option("expr", expr_arg, "expression")->required();

    auto* cmd_verify = app.add_subcommand("verify", "run a named identity suite");
    cmd_verify->add_option("suite", suite_name, "suite name (see --list)")->required();
    cmd_verify->add_option("--alpha", alpha_arg, "a0,a1,a2,a3 rational coefficients of b");
    cmd_verify->add_option("--fixture", fixture_path, "zero-residual witness file, one expression per line");

    auto* cmd_limit = app.add_subcommand(
        "limit", "classical limit hb->0; dt(E) is taken unshifted here since the shift 2/h diverges");
    cmd_limit->add_option("expr", expr_arg, "expression")->required();

    for (CLI::App* sub : {cmd_normalize, cmd_derive, cmd_matrix, cmd_verify, cmd_limit})
        sub->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (cmd_normalize->parsed()) {
            qpd::NCPoly v = qpd::parse_expression(expr_arg);
            if (as_json) {
                json j{{"input", expr_arg}, {"normal_form", qpd::to_string(v)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << qpd::to_string(v) << "\n";
            }
            return kOk;
        }
        if (cmd_derive->parsed()) {
            if (deriv_name != "dt" && deriv_name != "dx" && deriv_name != "dy" && deriv_name != "dz") {
                std::cerr << "derive: name must be one of dt dx dy dz\n";
                return kUsageError;
            }
            qpd::NCPoly v = qpd::parse_expression(deriv_name + "(" + expr_arg + ")");
            if (as_json) {
                json j{{"input", expr_arg}, {"derivative", deriv_name}, {"value", qpd::to_string(v)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << qpd::to_string(v) << "\n";
            }
            return kOk;
        }
        if (cmd_matrix->parsed()) {
            if (matrix_size != 2 && matrix_size != 4) {
                std::cerr << "matrix: size must be 2 or 4\n";
                return kUsageError;
            }
            qpd::NCPoly v = qpd::parse_expression(expr_arg);
            if (v.preset().kind() == qpd::PresetKind::GlN) {
                std::cerr << "matrix: expression must live in the compact algebra\n";
                return kUsageError;
            }
            qpd::DerivMatrix m = (matrix_size == 4) ? qpd::CentralExtension(+1).hatt_ext(v)
                                                    : qpd::SkewFieldExtension().dmat_ext(v);
            if (as_json) {
                json entries = json::array();
                for (int r = 0; r < m.size; ++r) {
                    json row = json::array();
                    for (int c = 0; c < m.size; ++c) row.push_back(qpd::to_string(m.at(r, c)));
                    entries.push_back(row);
                }
                json j{{"size", m.size}, {"entries", entries}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << qpd::matrix_grid(m);
            }
            return kOk;
        }
        if (cmd_verify->parsed()) {
            if (!qpd::is_suite_name(suite_name)) {
                std::cerr << "verify: unknown suite '" << suite_name << "'; available:";
                for (const auto& s : qpd::suite_names()) std::cerr << " " << s;
                std::cerr << "\n";
                return kUsageError;
            }
            qpd::SuiteOptions opts;
            opts.seed = qpd::RandomSource::seed_from_env();
            if (!alpha_arg.empty()) opts.alpha = parse_alpha(alpha_arg);
            opts.fixture_path = fixture_path;
            return emit_checks(qpd::run_suite(suite_name, opts), as_json);
        }
        if (cmd_limit->parsed()) {
            qpd::EvalOptions eopts;
            eopts.unshifted_dt = true;
            qpd::NCPoly v = qpd::parse_expression(expr_arg, eopts);
            qpd::NCPoly lim = v.classical_limit();
            if (as_json) {
                json j{{"input", expr_arg}, {"limit", qpd::to_string(lim)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << qpd::to_string(lim) << "\n";
            }
            return kOk;
        }
    } catch (const qpd::parse_error& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return kParseError;
    } catch (const qpd::pole_error& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return kPoleOrDegenerate;
    } catch (const qpd::degenerate_alpha& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return kPoleOrDegenerate;
    } catch (const qpd::division_by_zero& e) {
        std::cerr << "division by zero: " << e.what() << "\n";
        return kPoleOrDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
