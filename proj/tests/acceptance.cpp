// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line per criterion with its wall time and budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <sys/wait.h>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpd/central.hpp"
#include "qpd/qdouble.hpp"
#include "qpd/random.hpp"
#include "qpd/suites.hpp"
#include "qpd/textio.hpp"

using namespace qpd;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int k, const std::string& what, bool pass, double seconds, double budget,
            const std::string& detail = "") {
    bool in_budget = seconds < budget;
    bool ok = pass && in_budget;
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%.1fs of %.0fs budget)%s%s\n", ok ? "PASS" : "FAIL", k,
                what.c_str(), seconds, budget, pass ? "" : " -- identity failure",
                detail.empty() ? "" : (" [" + detail + "]").c_str());
    std::fflush(stdout);
}

std::string first_failure(const CheckList& checks) {
    for (const auto& c : checks)
        if (!c.pass) return c.identity + (c.residual.empty() ? "" : ": " + c.residual);
    return "";
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QPD_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void criterion_1() {
    auto t0 = Clock::now();
    CheckList all;
    for (int n : {2, 3}) {
        QuantumDouble qd(n);
        for (auto& c : qd.check_compatibility()) all.push_back(c);
        for (auto& c : qd.check_coassociativity()) all.push_back(c);
        for (auto& c : qd.elements_ideal_check()) all.push_back(c);
        for (auto& c : qd.second_order_action_check()) all.push_back(c);
        for (auto& c : qd.transpose_variant_check()) all.push_back(c);
        for (auto& c : qd.grouplike_check(3, 1)) all.push_back(c);
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(1,
           "quantum double suite (N=2,3): sigma compatibility, coassociativity, ideal elements "
           "killed, second-order action, transposed variant, group-likeness",
           all_pass(all), dt, 10.0, first_failure(all));
}

void criterion_2() {
    auto t0 = Clock::now();
    CheckList all;
    for (auto& c : verify_leib_table()) all.push_back(c);
    for (auto& c : quaternion_table_check()) all.push_back(c);
    for (auto& c : hatt_homomorphism_check(100, 2)) all.push_back(c);
    for (auto& c : cross_validate_with_double(100, 3)) all.push_back(c);
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(2,
           "compact Leibniz suite: the 16-relation table on the degree<=3 basis, quaternion "
           "table, multiplicativity x100, sigma-route agreement x100",
           all_pass(all), dt, 30.0, first_failure(all));
}

void criterion_3() {
    auto t0 = Clock::now();
    CheckList all;
    CentralExtension ce(+1);
    for (auto& c : ce.ch_identity_L()) all.push_back(c);
    for (auto& c : ce.mu_symmetric_check()) all.push_back(c);
    for (auto& c : ce.hatt_mu_square_root_check()) all.push_back(c);
    for (auto& c : ce.sign_choice_audit()) all.push_back(c);
    for (auto& c : ce.mu_power_checks()) all.push_back(c);
    for (auto& c : ce.hatt_rho_check()) all.push_back(c);
    for (auto& c : ce.ideal_welldef_check()) all.push_back(c);
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(3,
           "central extension suite: p(L)=0, mu symmetric functions, hatt(mu)^2, sign audit (1,1), "
           "mu-power coherence {-2..3}, radius derivatives, ideal well-definedness",
           all_pass(all), dt, 20.0, first_failure(all));
}

void criterion_4() {
    auto t0 = Clock::now();
    CheckList all;
    SkewFieldExtension sf;
    for (auto& c : sf.ch_check_rho()) all.push_back(c);
    for (auto& c : sf.linear_system_check()) all.push_back(c);
    for (auto& c : sf.cramer_check()) all.push_back(c);
    const std::vector<AlphaVector> alphas = {AlphaVector::axis_z(), AlphaVector::axis_x(),
                                             AlphaVector::three_four()};
    for (const auto& a : alphas) {
        for (auto& c : sf.ch_check_b(a)) all.push_back(c);
        for (auto& c : sf.commute_check_rho_b(a)) all.push_back(c);
        for (auto& c : sf.invert_dmat_b_check(a)) all.push_back(c);
        for (auto& c : sf.two_sided_inverse_check(a)) all.push_back(c);
        for (auto& c : sf.gradient_check(a)) all.push_back(c);
        for (auto& c : sf.classical_limit_check(a)) all.push_back(c);
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(4,
           "skew-field suite: CH identities and factorization, commutation, DD(b)^-1, linear "
           "system, Cramer, two-sided c-inverse, final dt/nabla formulas, classical limits",
           all_pass(all), dt, 60.0, first_failure(all));
}

void criterion_5() {
    auto t0 = Clock::now();
    struct Case {
        const char* suite;
        const char* fixture;
    };
    const Case cases[] = {
        {"leibniz-table", "corrupted_leibniz_table.txt"},
        {"central", "corrupted_central_radius.txt"},
        {"ch-rho", "corrupted_ch_rho.txt"},
        {"quaternions", "corrupted_ch_L.txt"},
        {"qdouble", "corrupted_brackets.txt"},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        std::string fx = std::string(QPD_FIXTURES) + "/" + c.fixture;
        RunResult bad = run_cli(std::string("--json verify ") + c.suite + " --fixture " + fx);
        bool case_ok = bad.exit_code == 1;
        bool nonzero_residual = false;
        if (case_ok) {
            auto parsed = nlohmann::json::parse(bad.out, nullptr, false);
            if (parsed.is_array()) {
                for (const auto& item : parsed)
                    if (item["status"] == "fail" && item.contains("residual_entry") &&
                        item["residual_entry"] != "0" && item["residual_entry"] != "")
                        nonzero_residual = true;
            }
        }
        // the pristine twin must pass
        std::string pristine = fx;
        auto pos = pristine.find("corrupted_");
        pristine.erase(pos, std::string("corrupted_").size());
        RunResult good = run_cli(std::string("verify ") + c.suite + " --fixture " + pristine);
        if (!(case_ok && nonzero_residual && good.exit_code == 0)) {
            ok = false;
            detail = c.fixture;
        }
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(5, "negative controls: 5 corrupted fixtures exit 1 with nonzero residuals; pristine twins pass",
           ok, dt, 120.0, detail);
}

void criterion_6() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    RandomSource rnd(6);
    // PBW confluence, 200 random words
    for (int k = 0; k < 200 && ok; ++k) {
        const Preset* presets[3] = {&Preset::u2ext(), &Preset::gl(2), &Preset::gl(3)};
        const Preset& p = *presets[k % 3];
        Word w = rnd.word(p, rnd.uniform(0, 4), p.has_rho());
        if (NCPoly::from_words(p, {{HbarScalar::one(), w}}, RewriteOrder::Leftmost) !=
            NCPoly::from_words(p, {{HbarScalar::one(), w}}, RewriteOrder::Rightmost)) {
            ok = false;
            detail = "confluence";
        }
    }
    // associativity, 200 random triples
    for (int k = 0; k < 200 && ok; ++k) {
        const Preset& p = (k % 2 == 0) ? Preset::u2ext() : Preset::gl(2);
        NCPoly a = rnd.poly(p, 2, 2, true), b = rnd.poly(p, 2, 2, true), c = rnd.poly(p, 2, 2, true);
        if ((a * b) * c != a * (b * c)) {
            ok = false;
            detail = "associativity";
        }
    }
    // Jacobi on every generator triple
    for (const Preset* pp : {&Preset::u2(), &Preset::gl(2), &Preset::gl(3)}) {
        const Preset& p = *pp;
        for (int a = 0; a < p.num_gens() && ok; ++a)
            for (int b = 0; b < p.num_gens() && ok; ++b)
                for (int c = 0; c < p.num_gens() && ok; ++c) {
                    NCPoly ga = NCPoly::generator(p, a), gb = NCPoly::generator(p, b),
                           gc = NCPoly::generator(p, c);
                    if (!(commutator(commutator(ga, gb), gc) + commutator(commutator(gb, gc), ga) +
                          commutator(commutator(gc, ga), gb))
                             .is_zero()) {
                        ok = false;
                        detail = "jacobi";
                    }
                }
    }
    // scalar field axioms
    for (int k = 0; k < 200 && ok; ++k) {
        HbarScalar a = rnd.coefficient() * HbarScalar::hbar() + rnd.coefficient();
        HbarScalar b = rnd.coefficient() * HbarScalar::hbar() + rnd.coefficient();
        HbarScalar c = rnd.coefficient();
        if ((a + b) + c != a + (b + c) || a * (b + c) != a * b + a * c ||
            (!a.is_zero() && a * a.inverse() != HbarScalar::one())) {
            ok = false;
            detail = "field axioms";
        }
    }
    double dt = std::chrono::duration<double>(Clock::now() - t0).count();
    report(6, "property suites: PBW confluence x200, associativity x200, Jacobi, field axioms", ok, dt,
           30.0, detail);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    if (failures == 0) {
        std::printf("acceptance: all 6 criteria hold\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
