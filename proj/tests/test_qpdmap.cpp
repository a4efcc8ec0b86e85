#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpd/qdouble.hpp"
#include "qpd/qpdmap.hpp"
#include "qpd/random.hpp"

using namespace qpd;

namespace {

const Preset& ext = Preset::u2ext();
const HbarScalar kIHb = HbarScalar::i() * HbarScalar::hbar();

NCPoly gen(int g) { return NCPoly::generator(ext, g); }

} // namespace

TEST_CASE("generator images, frozen explicit values") {
    HattEngine h4(ext);
    QuaternionUnits q = QuaternionUnits::units4(ext);
    CHECK(h4.of(gen(0)) == DerivMatrix::scalar(ext, 4, gen(0) + NCPoly::scalar(ext, kIHb)));
    CHECK(h4.of(gen(1)) == DerivMatrix::scalar(ext, 4, gen(1)) + q.A.scaled(kIHb));
    CHECK(h4.of(gen(2)) == DerivMatrix::scalar(ext, 4, gen(2)) + q.B.scaled(kIHb));
    CHECK(h4.of(gen(3)) == DerivMatrix::scalar(ext, 4, gen(3)) + q.C.scaled(kIHb));
    CHECK(h4.of(NCPoly::one(ext)) == DerivMatrix::identity(ext, 4));

    Dmat2Engine d2(ext);
    const HbarScalar hb = HbarScalar::hbar();
    DerivMatrix dx(ext, 2);
    dx.at(0, 0) = gen(1);
    dx.at(1, 1) = gen(1);
    dx.at(0, 1) = NCPoly::scalar(ext, -hb);
    dx.at(1, 0) = NCPoly::scalar(ext, -hb);
    CHECK(d2.of(gen(1)) == dx);
    DerivMatrix dz(ext, 2);
    dz.at(0, 0) = gen(3) - NCPoly::scalar(ext, hb);
    dz.at(1, 1) = gen(3) + NCPoly::scalar(ext, hb);
    CHECK(d2.of(gen(3)) == dz);
    CHECK(d2.of(NCPoly::one(ext)) == DerivMatrix::identity(ext, 2));
}

TEST_CASE("hatt(x)hatt(y) - hatt(y)hatt(x) = 2 i hb hatt(z)") {
    HattEngine h4(ext);
    DerivMatrix lhs = h4.of(gen(1)) * h4.of(gen(2)) - h4.of(gen(2)) * h4.of(gen(1));
    CHECK(lhs == h4.of(gen(3)).scaled(HbarScalar(2) * kIHb));
    CHECK(h4.of(commutator(gen(1), gen(2)) - gen(3).scaled(HbarScalar::h())).is_zero());
}

TEST_CASE("first-order extraction values") {
    HattEngine h4(ext);
    CHECK(qpd_derive(DerivName::Dx, gen(1), h4) == NCPoly::one(ext));
    CHECK(qpd_derive(DerivName::Dx, gen(2), h4).is_zero());
    // dt^ of t = (t + i hb)/(i hb)
    NCPoly want = (gen(0) + NCPoly::scalar(ext, kIHb)).scaled(kIHb.inverse());
    CHECK(qpd_derive(DerivName::DtHat, gen(0), h4) == want);
}

TEST_CASE("dx of x^2 equals 2x and matches the sigma-route oracle") {
    HattEngine h4(ext);
    NCPoly x2 = gen(1).pow(2);
    CHECK(qpd_derive(DerivName::Dx, x2, h4) == gen(1).scaled(HbarScalar(2)));
    // independent oracle: dx = -i (d_b + d_c) through the gl(2) double
    QuantumDouble qd(2);
    NCPoly x2_gl = u2_to_gl2([&] {
        NCPoly plain(Preset::u2());
        for (const auto& [m, c] : x2.terms())
            plain = plain + NCPoly::monomial(Preset::u2(), Monomial{m.exps, 0}, c);
        return plain;
    }());
    NCPoly db = qd.act({{2, 1}}, x2_gl), dc = qd.act({{1, 2}}, x2_gl);
    NCPoly oracle = u2_to_u2ext(gl2_to_u2((db + dc).scaled(-HbarScalar::i())));
    CHECK(oracle == qpd_derive(DerivName::Dx, x2, h4));
}

TEST_CASE("operation check lists") {
    CHECK(all_pass(verify_leib_table()));
    CHECK(all_pass(quaternion_table_check()));
    CHECK(all_pass(hatt_representation_check()));
    CHECK(all_pass(hatt_homomorphism_check(25, 21)));
    CHECK(all_pass(cross_validate_with_double(20, 22)));
    CHECK(all_pass(two_sizes_consistency_check(100, 23)));
    CHECK(all_pass(m_matrix_ch_check()));
}

TEST_CASE("matrix helpers") {
    HattEngine h4(ext);
    DerivMatrix m = h4.of(gen(1));
    CHECK((m - m).is_zero());
    CHECK((m - m).first_nonzero().empty());
    CHECK_FALSE(m.is_zero());
    CHECK(m.trace() == gen(1).scaled(HbarScalar(4)));
    CHECK_THROWS(h4.of(NCPoly::rho_power(ext, 1)));
}
