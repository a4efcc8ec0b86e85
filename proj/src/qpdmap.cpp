#include "qpd/qpdmap.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "qpd/qdouble.hpp"
#include "qpd/random.hpp"

namespace qpd {

namespace {

constexpr int kT = 0, kX = 1, kY = 2, kZ = 3;

const HbarScalar kIHb = HbarScalar::i() * HbarScalar::hbar();

NCPoly sc(const Preset& p, const HbarScalar& v) { return NCPoly::scalar(p, v); }

} // namespace

const char* deriv_name_str(DerivName d) {
    switch (d) {
        case DerivName::DtHat: return "dt";
        case DerivName::Dx: return "dx";
        case DerivName::Dy: return "dy";
        case DerivName::Dz: return "dz";
    }
    return "?";
}

DerivMatrix DerivMatrix::identity(const Preset& p, int n) {
    DerivMatrix m(p, n);
    for (int r = 0; r < n; ++r) m.at(r, r) = NCPoly::one(p);
    return m;
}

DerivMatrix DerivMatrix::scalar(const Preset& p, int n, const NCPoly& v) {
    DerivMatrix m(p, n);
    for (int r = 0; r < n; ++r) m.at(r, r) = v;
    return m;
}

DerivMatrix DerivMatrix::operator+(const DerivMatrix& o) const {
    DerivMatrix r = *this;
    for (std::size_t k = 0; k < e.size(); ++k) r.e[k] = r.e[k] + o.e[k];
    return r;
}

DerivMatrix DerivMatrix::operator-(const DerivMatrix& o) const {
    DerivMatrix r = *this;
    for (std::size_t k = 0; k < e.size(); ++k) r.e[k] = r.e[k] - o.e[k];
    return r;
}

DerivMatrix DerivMatrix::operator-() const {
    DerivMatrix r = *this;
    for (auto& x : r.e) x = -x;
    return r;
}

DerivMatrix DerivMatrix::operator*(const DerivMatrix& o) const {
    DerivMatrix r(*preset, size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            NCPoly acc = NCPoly::zero(*preset);
            for (int k = 0; k < size; ++k) acc = acc + at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

DerivMatrix DerivMatrix::scaled(const HbarScalar& c) const {
    DerivMatrix r = *this;
    for (auto& x : r.e) x = x.scaled(c);
    return r;
}

DerivMatrix DerivMatrix::scale_right(const NCPoly& a) const {
    DerivMatrix r = *this;
    for (auto& x : r.e) x = x * a;
    return r;
}

DerivMatrix DerivMatrix::scale_left(const NCPoly& a) const {
    DerivMatrix r = *this;
    for (auto& x : r.e) x = a * x;
    return r;
}

NCPoly DerivMatrix::trace() const {
    NCPoly acc = NCPoly::zero(*preset);
    for (int i = 0; i < size; ++i) acc = acc + at(i, i);
    return acc;
}

bool DerivMatrix::is_zero() const {
    for (const auto& x : e)
        if (!x.is_zero()) return false;
    return true;
}

std::string DerivMatrix::first_nonzero() const {
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c)
            if (!at(r, c).is_zero()) {
                std::ostringstream os;
                os << "(" << r + 1 << "," << c + 1 << ") nonzero";
                return os.str();
            }
    return "";
}

QuaternionUnits QuaternionUnits::units4(const Preset& p) {
    auto build = [&p](std::array<std::array<int, 4>, 4> rows) {
        DerivMatrix m(p, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
                    m.at(r, c) = sc(p, HbarScalar(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
        return m;
    };
    QuaternionUnits u{build({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}}),
                      build({{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}}}),
                      build({{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}})};
    return u;
}

QuaternionUnits QuaternionUnits::units2(const Preset& p) {
    const HbarScalar i = HbarScalar::i();
    // A2 = i sigma_x, B2 = -i sigma_y, C2 = i sigma_z; same multiplication table.
    DerivMatrix A(p, 2), B(p, 2), C(p, 2);
    A.at(0, 1) = sc(p, i);
    A.at(1, 0) = sc(p, i);
    B.at(0, 1) = sc(p, -HbarScalar::one());
    B.at(1, 0) = sc(p, HbarScalar::one());
    C.at(0, 0) = sc(p, i);
    C.at(1, 1) = sc(p, -i);
    return {A, B, C};
}

HattEngine::HattEngine(const Preset& p)
    : preset_(&p),
      identity_(DerivMatrix::identity(p, 4)) {
    QuaternionUnits q = QuaternionUnits::units4(p);
    NCPoly t = NCPoly::generator(p, kT), x = NCPoly::generator(p, kX);
    NCPoly y = NCPoly::generator(p, kY), z = NCPoly::generator(p, kZ);
    // hatt(t) = (t + i hb) I, hatt(x) = x I + i hb A, ...
    gen_images_.push_back(DerivMatrix::scalar(p, 4, t + sc(p, kIHb)));
    gen_images_.push_back(DerivMatrix::scalar(p, 4, x) + q.A.scaled(kIHb));
    gen_images_.push_back(DerivMatrix::scalar(p, 4, y) + q.B.scaled(kIHb));
    gen_images_.push_back(DerivMatrix::scalar(p, 4, z) + q.C.scaled(kIHb));
}

DerivMatrix HattEngine::m_matrix() const {
    const Preset& p = *preset_;
    QuaternionUnits q = QuaternionUnits::units4(p);
    return q.A.scale_left(NCPoly::generator(p, kX)) + q.B.scale_left(NCPoly::generator(p, kY)) +
           q.C.scale_left(NCPoly::generator(p, kZ));
}

const DerivMatrix& HattEngine::monomial_image(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    if (m.is_one()) return cache_.emplace(m, identity_).first->second;
    // Peel the last generator: image(m) = image(m') * image(g).
    Monomial head = m;
    int g = -1;
    for (int q = preset_->num_gens() - 1; q >= 0; --q)
        if (head.exps[static_cast<std::size_t>(q)] > 0) {
            g = q;
            break;
        }
    head.exps[static_cast<std::size_t>(g)]--;
    DerivMatrix img = monomial_image(head) * gen_images_[static_cast<std::size_t>(g)];
    return cache_.emplace(m, std::move(img)).first->second;
}

DerivMatrix HattEngine::of(const NCPoly& a) {
    DerivMatrix r(*preset_, 4);
    for (const auto& [m, c] : a.terms()) {
        if (m.rho != 0) throw std::invalid_argument("hatt4 takes rho-free arguments; see the central extension");
        r = r + monomial_image(m).scaled(c);
    }
    return r;
}

Dmat2Engine::Dmat2Engine(const Preset& p)
    : preset_(&p),
      identity_(DerivMatrix::identity(p, 2)) {
    const HbarScalar hb = HbarScalar::hbar();
    const HbarScalar i = HbarScalar::i();
    NCPoly t = NCPoly::generator(p, kT), x = NCPoly::generator(p, kX);
    NCPoly y = NCPoly::generator(p, kY), z = NCPoly::generator(p, kZ);
    // DD(t) = (t+i hb) I; DD(x) = (x, -hb; -hb, x); DD(y) = (y, -i hb; i hb, y);
    // DD(z) = diag(z - hb, z + hb)  [fixed here, independent of HattEngine]
    gen_images_.push_back(DerivMatrix::scalar(p, 2, t + sc(p, i * hb)));
    DerivMatrix dx(p, 2);
    dx.at(0, 0) = x;
    dx.at(1, 1) = x;
    dx.at(0, 1) = sc(p, -hb);
    dx.at(1, 0) = sc(p, -hb);
    gen_images_.push_back(dx);
    DerivMatrix dy(p, 2);
    dy.at(0, 0) = y;
    dy.at(1, 1) = y;
    dy.at(0, 1) = sc(p, -i * hb);
    dy.at(1, 0) = sc(p, i * hb);
    gen_images_.push_back(dy);
    DerivMatrix dz(p, 2);
    dz.at(0, 0) = z - sc(p, hb);
    dz.at(1, 1) = z + sc(p, hb);
    gen_images_.push_back(dz);
}

DerivMatrix Dmat2Engine::m_matrix() const {
    const Preset& p = *preset_;
    QuaternionUnits q = QuaternionUnits::units2(p);
    return q.A.scale_left(NCPoly::generator(p, kX)) + q.B.scale_left(NCPoly::generator(p, kY)) +
           q.C.scale_left(NCPoly::generator(p, kZ));
}

const DerivMatrix& Dmat2Engine::monomial_image(const Monomial& m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    if (m.is_one()) return cache_.emplace(m, identity_).first->second;
    Monomial head = m;
    int g = -1;
    for (int q = preset_->num_gens() - 1; q >= 0; --q)
        if (head.exps[static_cast<std::size_t>(q)] > 0) {
            g = q;
            break;
        }
    head.exps[static_cast<std::size_t>(g)]--;
    DerivMatrix img = monomial_image(head) * gen_images_[static_cast<std::size_t>(g)];
    return cache_.emplace(m, std::move(img)).first->second;
}

DerivMatrix Dmat2Engine::of(const NCPoly& a) {
    DerivMatrix r(*preset_, 2);
    for (const auto& [m, c] : a.terms()) {
        if (m.rho != 0) throw std::invalid_argument("dmat2 takes rho-free arguments; see the central extension");
        r = r + monomial_image(m).scaled(c);
    }
    return r;
}

NCPoly extract_from_hatt4(DerivName d, const DerivMatrix& m) {
    const HbarScalar inv = kIHb.inverse();
    switch (d) {
        case DerivName::DtHat: return m.at(0, 0).scaled(inv);
        case DerivName::Dx: return m.at(0, 1).scaled(inv);
        case DerivName::Dy: return m.at(0, 2).scaled(inv);
        case DerivName::Dz: return m.at(0, 3).scaled(inv);
    }
    throw std::logic_error("unreachable");
}

NCPoly extract_from_dmat2(DerivName d, const DerivMatrix& m) {
    const HbarScalar hb = HbarScalar::hbar();
    const HbarScalar two(2);
    switch (d) {
        case DerivName::DtHat: // (DD_11 + DD_22) / (2 i hb)
            return (m.at(0, 0) + m.at(1, 1)).scaled((two * kIHb).inverse());
        case DerivName::Dx: // -(DD_12 + DD_21) / (2 hb)
            return (m.at(0, 1) + m.at(1, 0)).scaled(-(two * hb).inverse());
        case DerivName::Dy: // (DD_21 - DD_12) / (2 i hb)
            return (m.at(1, 0) - m.at(0, 1)).scaled((two * kIHb).inverse());
        case DerivName::Dz: // (DD_22 - DD_11) / (2 hb)
            return (m.at(1, 1) - m.at(0, 0)).scaled((two * hb).inverse());
    }
    throw std::logic_error("unreachable");
}

NCPoly qpd_derive(DerivName d, const NCPoly& a, HattEngine& engine) {
    return extract_from_hatt4(d, engine.of(a));
}

NCPoly unshift_t(const NCPoly& dt_hat_value, const NCPoly& argument) {
    // dt = dt^ - (2/h) id and 2/h = -i/hb
    return dt_hat_value + argument.scaled(HbarScalar::i() * HbarScalar::hbar().inverse());
}

namespace {

/// All monomials of total degree <= deg in t, x, y, z.
std::vector<NCPoly> basis_up_to(const Preset& p, int deg) {
    std::vector<NCPoly> out;
    for (int a = 0; a <= deg; ++a)
        for (int b = 0; a + b <= deg; ++b)
            for (int c = 0; a + b + c <= deg; ++c)
                for (int d = 0; a + b + c + d <= deg; ++d) {
                    Monomial m{std::vector<int>{a, b, c, d}, 0};
                    out.push_back(NCPoly::monomial(p, std::move(m), HbarScalar::one()));
                }
    return out;
}

} // namespace

CheckList verify_leib_table() {
    // The Leibniz table: [d_u, v] = (h/2) d_w as operator identities on the
    // degree <= 3 monomial basis; h/2 = i hb.
    struct Row {
        DerivName du;
        int v;
        HbarScalar coef;
        DerivName dw;
    };
    const HbarScalar c = kIHb;
    const std::vector<Row> rows = {
        {DerivName::DtHat, kT, c, DerivName::DtHat},  {DerivName::DtHat, kX, -c, DerivName::Dx},
        {DerivName::DtHat, kY, -c, DerivName::Dy},    {DerivName::DtHat, kZ, -c, DerivName::Dz},
        {DerivName::Dx, kT, c, DerivName::Dx},        {DerivName::Dx, kX, c, DerivName::DtHat},
        {DerivName::Dx, kY, c, DerivName::Dz},        {DerivName::Dx, kZ, -c, DerivName::Dy},
        {DerivName::Dy, kT, c, DerivName::Dy},        {DerivName::Dy, kX, -c, DerivName::Dz},
        {DerivName::Dy, kY, c, DerivName::DtHat},     {DerivName::Dy, kZ, c, DerivName::Dx},
        {DerivName::Dz, kT, c, DerivName::Dz},        {DerivName::Dz, kX, c, DerivName::Dy},
        {DerivName::Dz, kY, -c, DerivName::Dx},       {DerivName::Dz, kZ, c, DerivName::DtHat},
    };
    const Preset& p = Preset::u2ext();
    HattEngine engine(p);
    std::vector<NCPoly> basis = basis_up_to(p, 3);
    CheckList out;
    for (const auto& row : rows) {
        CheckResult res;
        res.identity = std::string("leib-") + deriv_name_str(row.du) + "-" + p.gen_name(row.v);
        res.pass = true;
        NCPoly v = NCPoly::generator(p, row.v);
        for (const auto& w : basis) {
            NCPoly lhs = qpd_derive(row.du, v * w, engine) - v * qpd_derive(row.du, w, engine);
            NCPoly rhs = qpd_derive(row.dw, w, engine).scaled(row.coef);
            if (lhs != rhs) {
                res.pass = false;
                res.residual = "fails on basis monomial of degree " + std::to_string(w.total_degree());
                break;
            }
        }
        out.push_back(std::move(res));
    }
    return out;
}

CheckList quaternion_table_check() {
    const Preset& p = Preset::u2ext();
    QuaternionUnits q = QuaternionUnits::units4(p);
    DerivMatrix I = DerivMatrix::identity(p, 4);
    struct Case {
        const char* name;
        DerivMatrix lhs, rhs;
    };
    std::vector<Case> cases = {
        {"A*A=-I", q.A * q.A, -I},          {"B*B=-I", q.B * q.B, -I},
        {"C*C=-I", q.C * q.C, -I},          {"A*B=C", q.A * q.B, q.C},
        {"B*A=-C", q.B * q.A, -q.C},        {"B*C=A", q.B * q.C, q.A},
        {"C*B=-A", q.C * q.B, -q.A},        {"C*A=B", q.C * q.A, q.B},
        {"A*C=-B", q.A * q.C, -q.B},
    };
    CheckList out;
    for (auto& c : cases)
        out.push_back({std::string("quaternion-") + c.name, c.lhs == c.rhs,
                       c.lhs == c.rhs ? "" : (c.lhs - c.rhs).first_nonzero(), "", 0});
    return out;
}

CheckList hatt_representation_check() {
    const Preset& p = Preset::u2ext();
    HattEngine h4(p);
    Dmat2Engine d2(p);
    const HbarScalar h = HbarScalar::h();
    NCPoly t = NCPoly::generator(p, kT), x = NCPoly::generator(p, kX);
    NCPoly y = NCPoly::generator(p, kY), z = NCPoly::generator(p, kZ);
    struct Rel {
        const char* name;
        NCPoly a, b, target; // a b - b a - target = 0
    };
    std::vector<Rel> rels = {{"[x,y]=hz", x, y, z.scaled(h)}, {"[y,z]=hx", y, z, x.scaled(h)},
                             {"[z,x]=hy", z, x, y.scaled(h)}, {"[t,x]=0", t, x, NCPoly::zero(p)},
                             {"[t,y]=0", t, y, NCPoly::zero(p)}, {"[t,z]=0", t, z, NCPoly::zero(p)}};
    CheckList out;
    for (const auto& r : rels) {
        DerivMatrix r4 = h4.of(r.a) * h4.of(r.b) - h4.of(r.b) * h4.of(r.a) - h4.of(r.target);
        DerivMatrix r2 = d2.of(r.a) * d2.of(r.b) - d2.of(r.b) * d2.of(r.a) - d2.of(r.target);
        out.push_back({std::string("hatt4-kills-") + r.name, r4.is_zero(), r4.first_nonzero(), "", 0});
        out.push_back({std::string("dmat2-kills-") + r.name, r2.is_zero(), r2.first_nonzero(), "", 0});
    }
    return out;
}

CheckList hatt_homomorphism_check(int samples, std::uint64_t seed) {
    const Preset& p = Preset::u2ext();
    HattEngine h4(p);
    Dmat2Engine d2(p);
    RandomSource rnd(seed);
    CheckResult r4{"hatt4-homomorphism", true, "", "", 0};
    CheckResult r2{"dmat2-homomorphism", true, "", "", 0};
    for (int c = 0; c < samples; ++c) {
        NCPoly a = rnd.poly(p, 3, 3);
        NCPoly b = rnd.poly(p, 3, 3);
        NCPoly ab = a * b;
        if (r4.pass && h4.of(ab) != h4.of(a) * h4.of(b)) {
            r4.pass = false;
            r4.residual = "sample " + std::to_string(c);
        }
        if (r2.pass && d2.of(ab) != d2.of(a) * d2.of(b)) {
            r2.pass = false;
            r2.residual = "sample " + std::to_string(c);
        }
    }
    return {r4, r2};
}

CheckList cross_validate_with_double(int samples, std::uint64_t seed) {
    // sigma-route oracle: push the compact element through the gl(2) double,
    // compute all four derivatives from the counit action, assemble the 4x4
    // layout of the hatt matrix, and compare with the multiplicative hatt4.
    const Preset& ext = Preset::u2ext();
    HattEngine engine(ext);
    QuantumDouble qd(2);
    RandomSource rnd(seed);
    CheckResult res{"hatt4-vs-sigma-route", true, "", "", 0};

    std::vector<NCPoly> cases;
    cases.push_back(NCPoly::generator(ext, kX));
    cases.push_back(NCPoly::generator(ext, kX) * NCPoly::generator(ext, kY));
    cases.push_back(NCPoly::generator(ext, kT) * NCPoly::generator(ext, kZ).pow(2));
    for (int c = 0; c < samples; ++c) cases.push_back(rnd.poly(ext, 3, 3));

    auto to_ext = [&](const NCPoly& glpoly) { return u2_to_u2ext(gl2_to_u2(glpoly)); };
    for (const auto& a : cases) {
        if (!res.pass) break;
        NCPoly a_gl = u2_to_gl2([&] {
            // strip to the plain compact preset for the basis change
            NCPoly plain(Preset::u2());
            for (const auto& [m, c] : a.terms())
                plain = plain + NCPoly::monomial(Preset::u2(), Monomial{m.exps, 0}, c);
            return plain;
        }());
        // compact derivatives through the double: dt^ = (d_a + d_d) |> . + 2/h,
        // dx = -i(d_b + d_c), dy = d_c - d_b, dz = -i(d_a - d_d)
        const HbarScalar i = HbarScalar::i();
        NCPoly da = qd.act({{1, 1}}, a_gl), dd = qd.act({{2, 2}}, a_gl);
        NCPoly db = qd.act({{2, 1}}, a_gl), dc = qd.act({{1, 2}}, a_gl);
        NCPoly dt_hat = to_ext(da + dd) + a.scaled(HbarScalar(2) * HbarScalar::h().inverse());
        NCPoly dx = to_ext((db + dc).scaled(-i));
        NCPoly dy = to_ext(dc - db);
        NCPoly dz = to_ext((da - dd).scaled(-i));

        DerivMatrix expected(ext, 4);
        auto fill = [&](int r, int c, const NCPoly& v, int sign) {
            expected.at(r, c) = v.scaled(sign > 0 ? kIHb : -kIHb);
        };
        // the hatt layout, row by row
        fill(0, 0, dt_hat, 1); fill(0, 1, dx, 1);     fill(0, 2, dy, 1);     fill(0, 3, dz, 1);
        fill(1, 0, dx, -1);    fill(1, 1, dt_hat, 1); fill(1, 2, dz, -1);    fill(1, 3, dy, 1);
        fill(2, 0, dy, -1);    fill(2, 1, dz, 1);     fill(2, 2, dt_hat, 1); fill(2, 3, dx, -1);
        fill(3, 0, dz, -1);    fill(3, 1, dy, -1);    fill(3, 2, dx, 1);     fill(3, 3, dt_hat, 1);

        if (engine.of(a) != expected) {
            res.pass = false;
            res.residual = (engine.of(a) - expected).first_nonzero();
        }
    }
    return {res};
}

CheckList two_sizes_consistency_check(int samples, std::uint64_t seed) {
    const Preset& p = Preset::u2ext();
    HattEngine h4(p);
    Dmat2Engine d2(p);
    RandomSource rnd(seed);
    CheckResult res{"hatt4-dmat2-extraction-agree", true, "", "", 0};
    for (int c = 0; c < samples && res.pass; ++c) {
        NCPoly a = rnd.poly(p, 3, 3);
        DerivMatrix m4 = h4.of(a), m2 = d2.of(a);
        for (DerivName d : {DerivName::DtHat, DerivName::Dx, DerivName::Dy, DerivName::Dz})
            if (extract_from_hatt4(d, m4) != extract_from_dmat2(d, m2)) {
                res.pass = false;
                res.residual = std::string("sample ") + std::to_string(c) + " " + deriv_name_str(d);
            }
    }
    return {res};
}

CheckList m_matrix_ch_check() {
    const Preset& p = Preset::u2ext();
    HattEngine h4(p);
    Dmat2Engine d2(p);
    const HbarScalar two_i_hb = HbarScalar(2) * kIHb;
    NCPoly cas = NCPoly::generator(p, kX).pow(2) + NCPoly::generator(p, kY).pow(2) +
                 NCPoly::generator(p, kZ).pow(2);
    CheckList out;
    {
        DerivMatrix m = h4.m_matrix();
        DerivMatrix r = m * m - m.scaled(two_i_hb) + DerivMatrix::scalar(p, 4, cas);
        out.push_back({"M-CH-4x4", r.is_zero(), r.first_nonzero(), "", 0});
    }
    {
        DerivMatrix m = d2.m_matrix();
        DerivMatrix r = m * m - m.scaled(two_i_hb) + DerivMatrix::scalar(p, 2, cas);
        out.push_back({"M-CH-2x2", r.is_zero(), r.first_nonzero(), "", 0});
    }
    return out;
}

} // namespace qpd
