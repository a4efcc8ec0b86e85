#include "qpd/suites.hpp"

#include <chrono>
#include <fstream>
#include <stdexcept>

#include "qpd/central.hpp"
#include "qpd/qdouble.hpp"
#include "qpd/textio.hpp"

namespace qpd {

namespace {

using Clock = std::chrono::steady_clock;

void append_timed(CheckList& out, CheckList items, Clock::time_point start) {
    double dt = std::chrono::duration<double>(Clock::now() - start).count() /
                std::max<std::size_t>(1, items.size());
    for (auto& c : items) {
        c.wall_time = dt;
        out.push_back(std::move(c));
    }
}

template <typename F>
void run_timed(CheckList& out, F&& f) {
    auto start = Clock::now();
    append_timed(out, f(), start);
}

std::vector<AlphaVector> alpha_samples(const SuiteOptions& opts) {
    if (opts.alpha) return {*opts.alpha};
    return {AlphaVector::axis_z(), AlphaVector::axis_x(), AlphaVector::three_four()};
}

CheckList suite_qdouble(const SuiteOptions& opts) {
    CheckList out;
    for (int n : {2, 3}) {
        QuantumDouble qd(n);
        run_timed(out, [&] { return qd.check_compatibility(); });
        run_timed(out, [&] { return qd.check_coassociativity(); });
        run_timed(out, [&] { return qd.elements_ideal_check(); });
        run_timed(out, [&] { return qd.second_order_action_check(); });
        run_timed(out, [&] { return qd.transpose_variant_check(); });
        run_timed(out, [&] { return qd.shifted_permute_check(50, opts.seed); });
        run_timed(out, [&] { return qd.grouplike_check(n == 2 ? 4 : 2, opts.seed + 1); });
        run_timed(out, [&] { return qd.act_well_defined_check(2, opts.seed + 2); });
        run_timed(out, [&] { return qd.sigma_confluence_check(40, opts.seed + 3); });
        run_timed(out, [&] { return qd.a_commutativity_check(); });
    }
    return out;
}

CheckList suite_leibniz(const SuiteOptions&) {
    CheckList out;
    run_timed(out, [] { return verify_leib_table(); });
    return out;
}

CheckList leib_classical_degeneration() {
    // At hb = 0 the Leibniz table degenerates to the classical pairs:
    // [d_u, v] acts as delta_uv (the hatted t-derivative hides the unit, since
    // i hb dt^ -> id as hb -> 0 on the shift term).
    const Preset& p = Preset::u2ext();
    HattEngine engine(p);
    CheckResult res{"leib-classical-degeneration", true, "", "", 0};
    const DerivName all[4] = {DerivName::DtHat, DerivName::Dx, DerivName::Dy, DerivName::Dz};
    for (int u = 0; u < 4 && res.pass; ++u)
        for (int v = 0; v < 4 && res.pass; ++v) {
            NCPoly gv = NCPoly::generator(p, v);
            for (int w = 0; w < 4 && res.pass; ++w) {
                NCPoly gw = NCPoly::generator(p, w);
                NCPoly commutated =
                    qpd_derive(all[u], gv * gw, engine) - gv * qpd_derive(all[u], gw, engine);
                NCPoly want = (u == v) ? gw : NCPoly::zero(p);
                if (commutated.classical_limit() != want.classical_limit()) {
                    res.pass = false;
                    res.residual = p.gen_name(u) + "," + p.gen_name(v);
                }
            }
        }
    return {res};
}

CheckList suite_quaternions(const SuiteOptions&) {
    CheckList out;
    run_timed(out, [] { return quaternion_table_check(); });
    run_timed(out, [] { return m_matrix_ch_check(); });
    return out;
}

CheckList suite_central(const SuiteOptions& opts) {
    CheckList out;
    for (int sign : {+1, -1}) {
        CentralExtension ce(sign);
        std::string tag = sign > 0 ? "" : " [sign -1]";
        auto retag = [&](CheckList l) {
            for (auto& c : l) c.identity += tag;
            return l;
        };
        if (sign > 0) run_timed(out, [&] { return ce.ch_identity_L(); });
        run_timed(out, [&] { return retag(ce.mu_symmetric_check()); });
        run_timed(out, [&] { return retag(ce.spectral_squares_check()); });
        run_timed(out, [&] { return retag(ce.hatt_mu_squared_check()); });
        run_timed(out, [&] { return retag(ce.hatt_mu_square_root_check()); });
        run_timed(out, [&] { return retag(ce.sign_choice_audit()); });
        run_timed(out, [&] { return retag(ce.mu_power_checks()); });
        run_timed(out, [&] { return retag(ce.hatt_mu12_check()); });
        run_timed(out, [&] { return retag(ce.hatt_rho_check()); });
        run_timed(out, [&] { return retag(ce.ideal_welldef_check()); });
        run_timed(out, [&] { return retag(ce.centrality_check()); });
    }
    (void)opts;
    return out;
}

CheckList suite_ch_rho(const SuiteOptions& opts) {
    CheckList out;
    SkewFieldExtension sf;
    run_timed(out, [&] { return sf.ch_check_rho(); });
    for (const AlphaVector& a : alpha_samples(opts)) {
        run_timed(out, [&] { return sf.ch_check_b(a); });
        run_timed(out, [&] { return sf.commute_check_rho_b(a); });
        run_timed(out, [&] { return sf.scalar_commutation_check(a); });
    }
    // Non-unit alpha: (DD(b)-bI)^2 = 2 hb^2 I for (0,1,1,0).
    AlphaVector two{GaussRational(0), GaussRational(1), GaussRational(1), GaussRational(0)};
    run_timed(out, [&] { return sf.ch_check_b(two); });
    return out;
}

CheckList suite_inverse_b(const SuiteOptions& opts) {
    CheckList out;
    SkewFieldExtension sf;
    std::vector<AlphaVector> alphas = alpha_samples(opts);
    if (!opts.alpha) {
        // a0 != 0 exercises the shifted denominator
        alphas.push_back({GaussRational(1), GaussRational::rational(2, 3), GaussRational(-1),
                          GaussRational::rational(4, 5)});
    }
    for (const AlphaVector& a : alphas) {
        run_timed(out, [&] { return sf.dmat_b_check(a); });
        run_timed(out, [&] { return sf.invert_dmat_b_check(a); });
    }
    return out;
}

CheckList suite_inverse_c(const SuiteOptions& opts) {
    CheckList out;
    SkewFieldExtension sf;
    run_timed(out, [&] { return sf.linear_system_check(); });
    run_timed(out, [&] { return sf.cramer_check(); });
    for (const AlphaVector& a : alpha_samples(opts)) {
        run_timed(out, [&] { return sf.two_sided_inverse_check(a); });
    }
    run_timed(out, [&] { return sf.negative_control_check(alpha_samples(opts).front()); });
    return out;
}

CheckList suite_gradients(const SuiteOptions& opts) {
    CheckList out;
    SkewFieldExtension sf;
    run_timed(out, [&] { return sf.cross_product_check(); });
    for (const AlphaVector& a : alpha_samples(opts)) {
        run_timed(out, [&] { return sf.gradient_check(a); });
    }
    return out;
}

CheckList suite_classical(const SuiteOptions& opts) {
    CheckList out;
    SkewFieldExtension sf;
    CentralExtension ce(+1);
    run_timed(out, [&] { return leib_classical_degeneration(); });
    run_timed(out, [&] { return ce.hatt_rho_check(); });
    run_timed(out, [&] { return ce.sign_choice_audit(); });
    for (const AlphaVector& a : alpha_samples(opts)) {
        run_timed(out, [&] { return sf.classical_limit_check(a); });
    }
    run_timed(out, [&] { return sf.invert_dmat_b_check(alpha_samples(opts).front()); });
    return out;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"qdouble",   "leibniz-table", "quaternions",
                                                   "central",   "ch-rho",        "inverse-b",
                                                   "inverse-c", "gradients",     "classical-limits",
                                                   "all"};
    return names;
}

bool is_suite_name(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

CheckList run_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture file: " + path);
    CheckList out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        auto start = Clock::now();
        NCPoly value = parse_expression(trimmed);
        CheckResult res;
        res.identity = "fixture:" + std::to_string(lineno);
        res.pass = value.is_zero();
        if (!res.pass) res.residual = to_string(value);
        res.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
        out.push_back(std::move(res));
    }
    return out;
}

CheckList run_suite(const std::string& name, const SuiteOptions& opts) {
    CheckList out;
    if (name == "qdouble") {
        out = suite_qdouble(opts);
    } else if (name == "leibniz-table") {
        out = suite_leibniz(opts);
    } else if (name == "quaternions") {
        out = suite_quaternions(opts);
    } else if (name == "central") {
        out = suite_central(opts);
    } else if (name == "ch-rho") {
        out = suite_ch_rho(opts);
    } else if (name == "inverse-b") {
        out = suite_inverse_b(opts);
    } else if (name == "inverse-c") {
        out = suite_inverse_c(opts);
    } else if (name == "gradients") {
        out = suite_gradients(opts);
    } else if (name == "classical-limits") {
        out = suite_classical(opts);
    } else if (name == "all") {
        SuiteOptions sub = opts;
        sub.fixture_path.clear();
        for (const auto& s : suite_names())
            if (s != "all") {
                CheckList part = run_suite(s, sub);
                for (auto& c : part) {
                    c.identity = s + "/" + c.identity;
                    out.push_back(std::move(c));
                }
            }
    } else {
        throw std::invalid_argument("unknown suite: " + name);
    }
    if (!opts.fixture_path.empty()) {
        CheckList fx = run_fixture(opts.fixture_path);
        for (auto& c : fx) out.push_back(std::move(c));
    }
    return out;
}

} // namespace qpd
