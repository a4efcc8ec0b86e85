#include "qpd/central.hpp"

#include <stdexcept>

#include "qpd/errors.hpp"

namespace qpd {

namespace {

constexpr int kT = 0, kX = 1, kY = 2, kZ = 3;

const HbarScalar kI = HbarScalar::i();
const HbarScalar kHb = HbarScalar::hbar();
const HbarScalar kIHb = kI * kHb;

/// Numerator/denominator pair in the commutative central subalgebra
/// generated by rho (and hb); no reduction, equality by cross-multiplication.
struct ScalarFrac {
    NCPoly num, den;

    ScalarFrac operator*(const ScalarFrac& o) const { return {num * o.num, den * o.den}; }
    ScalarFrac operator+(const ScalarFrac& o) const { return {num * o.den + o.num * den, den * o.den}; }
    ScalarFrac operator-(const ScalarFrac& o) const { return {num * o.den - o.num * den, den * o.den}; }
    ScalarFrac pow(int k) const {
        ScalarFrac acc{NCPoly::one(num.preset()), NCPoly::one(num.preset())};
        for (int q = 0; q < k; ++q) acc = acc * (*this);
        return acc;
    }
};

} // namespace

MatrixFraction MatrixFraction::whole(DerivMatrix m) {
    NCPoly one = NCPoly::one(*m.preset);
    return {std::move(m), std::move(one)};
}

MatrixFraction MatrixFraction::operator*(const MatrixFraction& o) const {
    return {num * o.num, den * o.den};
}

bool MatrixFraction::operator==(const MatrixFraction& o) const {
    return num.scale_right(o.den) == o.num.scale_right(den);
}

CentralExtension::CentralExtension(int sign)
    : preset_(&Preset::u2ext()), sign_(sign), engine_(Preset::u2ext()) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("mu sign convention must be +1 or -1");
}

NCPoly CentralExtension::mu() const {
    return NCPoly::rho_power(*preset_, 1).scaled(HbarScalar(2 * sign_) * kI);
}

NCPoly CentralExtension::mu1() const {
    return NCPoly::generator(*preset_, kT) + NCPoly::scalar(*preset_, kIHb) +
           mu().scaled(HbarScalar::rational(1, 2));
}

NCPoly CentralExtension::mu2() const {
    return NCPoly::generator(*preset_, kT) + NCPoly::scalar(*preset_, kIHb) -
           mu().scaled(HbarScalar::rational(1, 2));
}

DerivMatrix CentralExtension::hatt_mu_squared() const {
    const Preset& p = *preset_;
    NCPoly m2 = mu() * mu(); // -4(Cas + hb^2) after reduction
    NCPoly icoef = m2 - NCPoly::scalar(p, HbarScalar(12) * kHb * kHb);
    return DerivMatrix::scalar(p, 4, icoef) - engine_.m_matrix().scaled(HbarScalar(8) * kIHb);
}

DerivMatrix CentralExtension::hatt_mu() const {
    const Preset& p = *preset_;
    // mu^{-1} = rho^{-1} / (2 i s)
    NCPoly mu_inv = NCPoly::rho_power(p, -1).scaled((HbarScalar(2 * sign_) * kI).inverse());
    NCPoly m2 = mu() * mu();
    NCPoly icoef = (m2 - NCPoly::scalar(p, HbarScalar(4) * kHb * kHb)) * mu_inv;
    NCPoly mcoef = NCPoly::scalar(p, HbarScalar(4) * kIHb) * mu_inv;
    return DerivMatrix::scalar(p, 4, icoef) - engine_.m_matrix().scale_left(mcoef);
}

DerivMatrix CentralExtension::hatt_rho() const {
    const Preset& p = *preset_;
    NCPoly rho_inv = NCPoly::rho_power(p, -1);
    NCPoly icoef = (NCPoly::rho_power(p, 2) + NCPoly::scalar(p, kHb * kHb)) * rho_inv;
    NCPoly mcoef = rho_inv.scaled(kIHb);
    return DerivMatrix::scalar(p, 4, icoef) + engine_.m_matrix().scale_left(mcoef);
}

MatrixFraction CentralExtension::hatt_mu_power(int p) const {
    if (p < -8 || p > 8) throw std::invalid_argument("hatt_mu_power supports |p| <= 8");
    const Preset& pr = *preset_;
    const NCPoly two_i_hb = NCPoly::scalar(pr, HbarScalar(2) * kIHb);
    const NCPoly u = mu() - two_i_hb;
    const NCPoly v = mu() + two_i_hb;
    // I-part: (u^{p+1} + v^{p+1}) / (2 mu); M-part: (u^p - v^p) / mu.
    if (p >= 0) {
        NCPoly icoef = (u.pow(p + 1) + v.pow(p + 1)).scaled(HbarScalar::rational(1, 2));
        NCPoly mcoef = u.pow(p) - v.pow(p);
        DerivMatrix num = DerivMatrix::scalar(pr, 4, icoef) + engine_.m_matrix().scale_left(mcoef);
        return {std::move(num), mu()};
    }
    // Negative powers over the shared central denominator (uv)^m with
    // uv = -4 Cas:  u^{1-m} = v^{m-1}(uv)/(uv)^m,  u^{-m} = v^m/(uv)^m.
    // Negative powers over the shared central denominator (uv)^m mu with
    // uv = -4 Cas:  u^{1-m} = v^{m-1}(uv)/(uv)^m,  u^{-m} = v^m/(uv)^m.
    // Keeping mu in the denominator keeps every numerator entry polynomial.
    const int m = -p;
    NCPoly uv = u * v;
    NCPoly icoef = ((v.pow(m - 1) + u.pow(m - 1)) * uv).scaled(HbarScalar::rational(1, 2));
    NCPoly mcoef = v.pow(m) - u.pow(m);
    DerivMatrix num =
        DerivMatrix::scalar(pr, 4, icoef) + engine_.m_matrix().scale_left(mcoef);
    return {std::move(num), uv.pow(m) * mu()};
}

std::pair<DerivMatrix, DerivMatrix> CentralExtension::hatt_mu12() const {
    const Preset& p = *preset_;
    DerivMatrix base = DerivMatrix::scalar(
        p, 4, NCPoly::generator(p, kT) + NCPoly::scalar(p, HbarScalar(2) * kIHb));
    DerivMatrix half = hatt_mu().scaled(HbarScalar::rational(1, 2));
    return {base + half, base - half};
}

DerivMatrix CentralExtension::hatt_ext(const NCPoly& a) const {
    const Preset& p = *preset_;
    DerivMatrix out(p, 4);
    const DerivMatrix hrho = hatt_rho();
    for (const auto& [m, c] : a.terms()) {
        if (m.rho < 0)
            throw degenerate_alpha("hatt is not defined on negative rho powers; use the skew-field extension");
        Monomial flat = m;
        flat.rho = 0;
        DerivMatrix img = engine_.of(NCPoly::monomial(p, std::move(flat), c));
        if (m.rho == 1) img = img * hrho;
        out = out + img;
    }
    return out;
}

NCPoly CentralExtension::derive(DerivName d, const NCPoly& a) const {
    return extract_from_hatt4(d, hatt_ext(a));
}

NCPoly CentralExtension::derive_t_unshifted(const NCPoly& a) const {
    return unshift_t(derive(DerivName::DtHat, a), a);
}

CheckList CentralExtension::ch_identity_L() const {
    CheckList out;
    const Preset& u2 = Preset::u2();
    NCPoly t = NCPoly::generator(u2, kT), x = NCPoly::generator(u2, kX);
    NCPoly y = NCPoly::generator(u2, kY), z = NCPoly::generator(u2, kZ);
    DerivMatrix L(u2, 2);
    L.at(0, 0) = t - z.scaled(kI);
    L.at(0, 1) = x.scaled(-kI) - y;
    L.at(1, 0) = x.scaled(-kI) + y;
    L.at(1, 1) = t + z.scaled(kI);
    NCPoly cas = x * x + y * y + z * z;
    NCPoly tr = t.scaled(HbarScalar(2)) + NCPoly::scalar(u2, HbarScalar(2) * kIHb);
    NCPoly det = t * t + cas + t.scaled(HbarScalar(2) * kIHb);
    DerivMatrix residual = L * L - L.scale_left(tr) + DerivMatrix::scalar(u2, 2, det);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.push_back({"ch-L-entry-" + std::to_string(r + 1) + std::to_string(c + 1),
                           residual.at(r, c).is_zero(), residual.at(r, c).is_zero() ? "" : "nonzero", "", 0});
    // Classical limit: plain 2x2 Cayley-Hamilton over the commutative preset.
    const Preset& cl = Preset::u2ext_classical();
    NCPoly tc = NCPoly::generator(cl, kT), xc = NCPoly::generator(cl, kX);
    NCPoly yc = NCPoly::generator(cl, kY), zc = NCPoly::generator(cl, kZ);
    DerivMatrix Lc(cl, 2);
    Lc.at(0, 0) = tc - zc.scaled(kI);
    Lc.at(0, 1) = xc.scaled(-kI) - yc;
    Lc.at(1, 0) = xc.scaled(-kI) + yc;
    Lc.at(1, 1) = tc + zc.scaled(kI);
    DerivMatrix res_cl = Lc * Lc - Lc.scale_left(tc.scaled(HbarScalar(2))) +
                         DerivMatrix::scalar(cl, 2, tc * tc + xc * xc + yc * yc + zc * zc);
    out.push_back({"ch-L-classical-limit", res_cl.is_zero(), res_cl.first_nonzero(), "", 0});
    return out;
}

CheckList CentralExtension::mu_symmetric_check() const {
    const Preset& p = *preset_;
    CheckList out;
    NCPoly t = NCPoly::generator(p, kT);
    NCPoly cas = NCPoly::generator(p, kX).pow(2) + NCPoly::generator(p, kY).pow(2) +
                 NCPoly::generator(p, kZ).pow(2);
    NCPoly sum = mu1() + mu2();
    NCPoly want_sum = t.scaled(HbarScalar(2)) + NCPoly::scalar(p, HbarScalar(2) * kIHb);
    out.push_back({"mu1+mu2", sum == want_sum, "", "", 0});
    NCPoly prod = mu1() * mu2();
    NCPoly want_prod = t * t + cas + t.scaled(HbarScalar(2) * kIHb);
    out.push_back({"mu1*mu2", prod == want_prod, "", "", 0});
    NCPoly m2 = mu() * mu();
    NCPoly want_m2 = (cas + NCPoly::scalar(p, kHb * kHb)).scaled(HbarScalar(-4));
    out.push_back({"mu^2=-4(Cas+hb^2)", m2 == want_m2, "", "", 0});
    return out;
}

CheckList CentralExtension::spectral_squares_check() const {
    const Preset& p = *preset_;
    const NCPoly two_i_hb = NCPoly::scalar(p, HbarScalar(2) * kIHb);
    NCPoly m2 = mu() * mu();
    NCPoly nu1 = m2 - NCPoly::scalar(p, HbarScalar(4) * kHb * kHb) - mu().scaled(HbarScalar(4) * kIHb);
    NCPoly nu2 = m2 - NCPoly::scalar(p, HbarScalar(4) * kHb * kHb) + mu().scaled(HbarScalar(4) * kIHb);
    CheckList out;
    out.push_back({"nu1=(mu-2ihb)^2", nu1 == (mu() - two_i_hb).pow(2), "", "", 0});
    out.push_back({"nu2=(mu+2ihb)^2", nu2 == (mu() + two_i_hb).pow(2), "", "", 0});
    return out;
}

CheckList CentralExtension::hatt_mu_squared_check() const {
    const Preset& p = *preset_;
    CheckList out;
    NCPoly cas = NCPoly::generator(p, kX).pow(2) + NCPoly::generator(p, kY).pow(2) +
                 NCPoly::generator(p, kZ).pow(2);
    NCPoly hb2 = NCPoly::scalar(p, kHb * kHb);
    DerivMatrix route_multiplicative = engine_.of((cas + hb2).scaled(HbarScalar(-4)));
    DerivMatrix route_closed = hatt_mu_squared();
    out.push_back({"hatt-mu2-two-routes", route_multiplicative == route_closed,
                   (route_multiplicative - route_closed).first_nonzero(), "", 0});
    // Display-constant audit: the printed argument -4(Cas + 4 hb^2) does not
    // reproduce the closed form; -4(Cas + hb^2) does. Reported, not fixed.
    DerivMatrix display_variant = engine_.of((cas + hb2.scaled(HbarScalar(4))).scaled(HbarScalar(-4)));
    out.push_back({"hatt-mu2-display-constant-hb2-matches", route_multiplicative == route_closed, "", "", 0});
    out.push_back({"hatt-mu2-display-constant-4hb2-differs", display_variant != route_closed, "", "", 0});
    // Trace: 4(mu^2 - 12 hb^2), since tr M = 0.
    NCPoly want_tr = (mu() * mu() - NCPoly::scalar(p, HbarScalar(12) * kHb * kHb)).scaled(HbarScalar(4));
    out.push_back({"hatt-mu2-trace", route_closed.trace() == want_tr, "", "", 0});
    // Classical limit: -4 Cas I.
    bool cl_ok = true;
    DerivMatrix cl(Preset::u2ext_classical(), 4);
    const Preset& pcl = Preset::u2ext_classical();
    NCPoly cas_cl = NCPoly::generator(pcl, kX).pow(2) + NCPoly::generator(pcl, kY).pow(2) +
                    NCPoly::generator(pcl, kZ).pow(2);
    for (int r = 0; r < 4 && cl_ok; ++r)
        for (int c = 0; c < 4 && cl_ok; ++c) {
            NCPoly lim = route_closed.at(r, c).classical_limit();
            NCPoly want = (r == c) ? cas_cl.scaled(HbarScalar(-4)) : NCPoly::zero(pcl);
            cl_ok = lim == want;
        }
    out.push_back({"hatt-mu2-classical-limit", cl_ok, "", "", 0});
    return out;
}

CheckList CentralExtension::hatt_mu_square_root_check() const {
    DerivMatrix h = hatt_mu();
    bool ok = (h * h) == hatt_mu_squared();
    CheckList out;
    out.push_back({"hatt-mu-squares-to-hatt-mu2", ok, "", "", 0});
    out.push_back({"hatt-mu-equals-2is-hatt-rho", h == hatt_rho().scaled(HbarScalar(2 * sign_) * kI), "", "", 0});
    return out;
}

DerivMatrix CentralExtension::spectral_candidate(int eps1, int eps2) const {
    const Preset& p = *preset_;
    // hatt(mu^2) - nu2 I = -4 i hb [(mu - 2 i hb) I + 2 M], over nu1 - nu2 = -8 i hb mu:
    // candidate = eps1 (mu-2ihb) [(mu-2ihb) I + 2M] / (2 mu)
    //           + eps2 (mu+2ihb) [(mu+2ihb) I - 2M] / (2 mu)
    const NCPoly two_i_hb = NCPoly::scalar(p, HbarScalar(2) * kIHb);
    NCPoly mu_inv_half = NCPoly::rho_power(p, -1).scaled((HbarScalar(4 * sign_) * kI).inverse());
    NCPoly um = mu() - two_i_hb, vp = mu() + two_i_hb;
    DerivMatrix M = engine_.m_matrix();
    DerivMatrix first =
        (DerivMatrix::scalar(p, 4, um) + M.scaled(HbarScalar(2))).scale_left(um * mu_inv_half);
    DerivMatrix second =
        (DerivMatrix::scalar(p, 4, vp) - M.scaled(HbarScalar(2))).scale_left(vp * mu_inv_half);
    return first.scaled(HbarScalar(eps1)) + second.scaled(HbarScalar(eps2));
}

CheckList CentralExtension::sign_choice_audit() const {
    const Preset& pcl = Preset::u2ext_classical();
    CheckList out;
    // Classical-limit targets: dt(mu) -> 0 and dx(mu) -> -4x/mu = 2 i s x rho^{-1}.
    NCPoly want_dx = (NCPoly::generator(pcl, kX) * NCPoly::rho_power(pcl, -1))
                         .scaled(HbarScalar(2 * sign_) * kI);
    int survivors = 0;
    for (int eps1 : {1, -1})
        for (int eps2 : {1, -1}) {
            DerivMatrix cand = spectral_candidate(eps1, eps2);
            bool dt_ok = false, dx_ok = false;
            std::string why;
            try {
                NCPoly dt_mu = unshift_t(extract_from_hatt4(DerivName::DtHat, cand), mu());
                dt_ok = dt_mu.classical_limit().is_zero();
                if (!dt_ok) why = "dt limit nonzero";
            } catch (const pole_error&) {
                why = "dt limit pole";
            }
            try {
                NCPoly dx_mu = extract_from_hatt4(DerivName::Dx, cand);
                dx_ok = dx_mu.classical_limit() == want_dx;
                if (!dx_ok && why.empty()) why = "dx limit mismatch";
            } catch (const pole_error&) {
                if (why.empty()) why = "dx limit pole";
            }
            bool both = dt_ok && dx_ok;
            bool expected = (eps1 == 1 && eps2 == 1);
            if (both) ++survivors;
            std::string name = "sign-audit-(" + std::to_string(eps1) + "," + std::to_string(eps2) + ")" +
                               (expected ? "-passes" : "-fails");
            out.push_back({name, both == expected, both == expected ? "" : why, "", 0});
            if (expected && both) {
                // The surviving candidate must be the closed form of hatt(mu).
                out.push_back({"sign-audit-candidate-is-closed-form", cand == hatt_mu(), "", "", 0});
            }
        }
    out.push_back({"sign-audit-unique-survivor", survivors == 1, survivors == 1 ? "" : "not unique", "", 0});
    return out;
}

CheckList CentralExtension::mu_power_checks() const {
    CheckList out;
    out.push_back({"mu-power-p1-closed-form", hatt_mu_power(1) == MatrixFraction::whole(hatt_mu()), "", "", 0});
    out.push_back({"mu-power-p0-is-I",
                   hatt_mu_power(0) == MatrixFraction::whole(DerivMatrix::identity(*preset_, 4)), "", "", 0});
    out.push_back(
        {"mu-power-p2-matches-square", hatt_mu_power(2) == MatrixFraction::whole(hatt_mu_squared()), "", "", 0});
    out.push_back({"mu-power-p3-matches-cube",
                   hatt_mu_power(3) == MatrixFraction::whole(hatt_mu() * hatt_mu() * hatt_mu()), "", "", 0});

    // Coherence hatt(mu^{p+q}) = hatt(mu^p) hatt(mu^q) for p, q in {-2..3}.
    // All denominators are central elements of the form (uv)^m mu, so the
    // fraction identity reduces by cancellation (the algebra is a domain) to
    //   num_p num_q = num_{p+q} * ratio,   den_p den_q = den_{p+q} * ratio,
    // with the small polynomial ratio = (uv)^{m_p + m_q - m_{p+q}} mu.
    std::map<int, MatrixFraction> fr;
    for (int p = -4; p <= 6; ++p) fr.emplace(p, hatt_mu_power(p));
    const NCPoly uv = (mu() - NCPoly::scalar(*preset_, HbarScalar(2) * kIHb)) *
                      (mu() + NCPoly::scalar(*preset_, HbarScalar(2) * kIHb));
    auto m_of = [](int p) { return p >= 0 ? 0 : -p; };
    bool coherent = true;
    std::string fail;
    for (int p = -2; p <= 3 && coherent; ++p)
        for (int q = -2; q <= 3 && coherent; ++q) {
            int drop = m_of(p) + m_of(q) - m_of(p + q);
            NCPoly ratio = uv.pow(drop) * mu();
            const MatrixFraction& a = fr.at(p);
            const MatrixFraction& b = fr.at(q);
            const MatrixFraction& c = fr.at(p + q);
            bool dens_ok = (a.den * b.den) == (c.den * ratio);
            bool nums_ok = (a.num * b.num) == c.num.scale_right(ratio);
            if (!dens_ok || !nums_ok) {
                coherent = false;
                fail = "p=" + std::to_string(p) + " q=" + std::to_string(q);
            }
        }
    out.push_back({"mu-power-coherence", coherent, fail, "", 0});
    return out;
}

CheckList CentralExtension::hatt_mu12_check() const {
    const Preset& p = *preset_;
    CheckList out;
    auto [h1, h2] = hatt_mu12();
    NCPoly t = NCPoly::generator(p, kT);
    DerivMatrix want_sum = DerivMatrix::scalar(
        p, 4, t.scaled(HbarScalar(2)) + NCPoly::scalar(p, HbarScalar(4) * kIHb));
    out.push_back({"hatt-mu12-sum-rule", (h1 + h2) == want_sum, "", "", 0});
    out.push_back({"hatt-mu12-difference-closed-form", (h1 - h2) == hatt_mu(), "", "", 0});

    // dt^(mu1) = -(i/hb)(t + (mu+2ihb)^2/(2mu)); a variant reading with mu^2
    // inside the binomial circulates, so both are compared and reported.
    const NCPoly two_i_hb = NCPoly::scalar(p, HbarScalar(2) * kIHb);
    NCPoly mu_inv_half = NCPoly::rho_power(p, -1).scaled((HbarScalar(4 * sign_) * kI).inverse());
    NCPoly got_dt = extract_from_hatt4(DerivName::DtHat, h1);
    NCPoly want_dt = (t + (mu() + two_i_hb).pow(2) * mu_inv_half).scaled(-(kI * kHb.inverse()));
    out.push_back({"hatt-mu1-dt-matches-mu-variant", got_dt == want_dt, "", "", 0});
    NCPoly typo_dt =
        (t + (mu() * mu() + two_i_hb).pow(2) * mu_inv_half).scaled(-(kI * kHb.inverse()));
    out.push_back({"hatt-mu1-dt-differs-from-mu2-variant", got_dt != typo_dt, "", "", 0});

    // dx(mu1) = -2x/mu = i s x rho^{-1}
    NCPoly got_dx = extract_from_hatt4(DerivName::Dx, h1);
    NCPoly want_dx =
        (NCPoly::generator(p, kX) * NCPoly::rho_power(p, -1)).scaled(HbarScalar(sign_) * kI);
    out.push_back({"hatt-mu1-dx", got_dx == want_dx, "", "", 0});
    return out;
}

CheckList CentralExtension::hatt_rho_check() const {
    const Preset& p = *preset_;
    const Preset& pcl = Preset::u2ext_classical();
    CheckList out;
    NCPoly rho = NCPoly::rho_power(p, 1);
    NCPoly rho_inv = NCPoly::rho_power(p, -1);

    NCPoly dt = derive_t_unshifted(rho);
    out.push_back({"dt-rho=-ihb/rho", dt == rho_inv.scaled(-kIHb), "", "", 0});
    struct G {
        DerivName d;
        int g;
        const char* name;
    };
    for (const G& g : {G{DerivName::Dx, kX, "dx-rho=x/rho"}, G{DerivName::Dy, kY, "dy-rho=y/rho"},
                       G{DerivName::Dz, kZ, "dz-rho=z/rho"}}) {
        NCPoly got = derive(g.d, rho);
        out.push_back({g.name, got == NCPoly::generator(p, g.g) * rho_inv, "", "", 0});
    }
    // Classical limits: dt r -> 0, dx r -> x/r.
    out.push_back({"dt-rho-classical-vanishes", dt.classical_limit().is_zero(), "", "", 0});
    NCPoly dx_cl = derive(DerivName::Dx, rho).classical_limit();
    out.push_back({"dx-rho-classical",
                   dx_cl == NCPoly::generator(pcl, kX) * NCPoly::rho_power(pcl, -1), "", "", 0});
    return out;
}

CheckList CentralExtension::ideal_welldef_check() const {
    const Preset& p = *preset_;
    CheckList out;
    NCPoly cas = NCPoly::generator(p, kX).pow(2) + NCPoly::generator(p, kY).pow(2) +
                 NCPoly::generator(p, kZ).pow(2);
    NCPoly cas_hb = cas + NCPoly::scalar(p, kHb * kHb);
    DerivMatrix lhs = engine_.of(cas_hb);
    DerivMatrix rho2 = hatt_rho() * hatt_rho();
    DerivMatrix residual = lhs - rho2;
    out.push_back({"hatt-kills-ideal-generator", residual.is_zero(), residual.first_nonzero(), "", 0});
    DerivMatrix with_x = residual * engine_.of(NCPoly::generator(p, kX));
    out.push_back({"hatt-kills-ideal-times-x", with_x.is_zero(), with_x.first_nonzero(), "", 0});
    // hatt_ext of rho^2 written as a monomial agrees with the flat image.
    DerivMatrix via_ext = hatt_ext(NCPoly::rho_power(p, 1) * NCPoly::rho_power(p, 1));
    out.push_back({"hatt-ext-rho2-consistent", via_ext == lhs, "", "", 0});
    // Classical identity r^2 = x^2 + y^2 + z^2 in the commutative preset.
    const Preset& pcl = Preset::u2ext_classical();
    NCPoly classical_residual = NCPoly::rho_power(pcl, 2) -
                                (NCPoly::generator(pcl, kX).pow(2) + NCPoly::generator(pcl, kY).pow(2) +
                                 NCPoly::generator(pcl, kZ).pow(2));
    out.push_back({"classical-r2-identity", classical_residual.is_zero(), "", "", 0});
    return out;
}

CheckList CentralExtension::centrality_check() const {
    const Preset& p = *preset_;
    CheckList out;
    bool rho_ok = true, mu_ok = true;
    DerivMatrix hrho = hatt_rho();
    for (int g = 0; g < 4; ++g) {
        DerivMatrix img = engine_.of(NCPoly::generator(p, g));
        if (!(hrho * img - img * hrho).is_zero()) rho_ok = false;
        DerivMatrix hmu = hatt_mu();
        if (!(hmu * img - img * hmu).is_zero()) mu_ok = false;
        NCPoly c = commutator(NCPoly::rho_power(p, 1), NCPoly::generator(p, g));
        if (!c.is_zero()) rho_ok = false;
    }
    out.push_back({"rho-central", rho_ok, "", "", 0});
    out.push_back({"mu-central", mu_ok, "", "", 0});
    return out;
}

} // namespace qpd
