#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpd/errors.hpp"
#include "qpd/inversion.hpp"
#include "qpd/random.hpp"

using namespace qpd;

namespace {

const Preset& ext = Preset::u2ext();
const HbarScalar kI = HbarScalar::i();
const HbarScalar kHb = HbarScalar::hbar();

NCPoly gen(int g) { return NCPoly::generator(ext, g); }

} // namespace

TEST_CASE("comm poly embedding is a ring homomorphism") {
    RandomSource rnd(RandomSource::seed_from_env());
    AlphaVector a = AlphaVector::three_four();
    auto random_comm = [&rnd] {
        CommPoly p;
        for (int k = 0; k < 3; ++k) {
            CommPoly term(rnd.coefficient());
            for (int e = rnd.uniform(0, 2); e > 0; --e) term = term * CommPoly::rho_hat();
            for (int e = rnd.uniform(0, 2); e > 0; --e) term = term * CommPoly::b_hat();
            p = p + term;
        }
        return p;
    };
    for (int k = 0; k < 20; ++k) {
        CommPoly p = random_comm(), q = random_comm();
        CHECK((p * q).embed(a, ext) == p.embed(a, ext) * q.embed(a, ext));
        CHECK((p + q).embed(a, ext) == p.embed(a, ext) + q.embed(a, ext));
    }
    CHECK(CommPoly::rho_hat().embed(a, ext) == NCPoly::rho_power(ext, 1));
    // rho^ and b^ commute by construction
    CHECK(CommPoly::rho_hat() * CommPoly::b_hat() == CommPoly::b_hat() * CommPoly::rho_hat());
}

TEST_CASE("b^2 expansion for alpha = (0,1,1,0): cross terms reduce") {
    AlphaVector a{GaussRational(0), GaussRational(1), GaussRational(1), GaussRational(0)};
    NCPoly got = (CommPoly::b_hat() * CommPoly::b_hat()).embed(a, ext);
    // (x+y)^2 = x^2 + 2xy - 2 i hb z + y^2
    NCPoly want = gen(1).pow(2) + (gen(1) * gen(2)).scaled(HbarScalar(2)) -
                  gen(3).scaled(HbarScalar(2) * kI * kHb) + gen(2).pow(2);
    CHECK(got == want);
}

TEST_CASE("DD(b) for the axis cases, and N^2") {
    SkewFieldExtension sf;
    AlphaVector ax = AlphaVector::axis_x();
    DerivMatrix want(ext, 2);
    want.at(0, 0) = gen(1);
    want.at(1, 1) = gen(1);
    want.at(0, 1) = NCPoly::scalar(ext, -kHb);
    want.at(1, 0) = NCPoly::scalar(ext, -kHb);
    CHECK(sf.dmat_b(ax) == want);
    CHECK(all_pass(sf.dmat_b_check(ax)));
    CHECK(all_pass(sf.dmat_b_check(AlphaVector::three_four())));
    // alpha with a0 != 0: (1,0,0,1) -> (t + z + i hb) I - hb N by linearity
    AlphaVector mixed{GaussRational(1), GaussRational(0), GaussRational(0), GaussRational(1)};
    DerivMatrix got = sf.dmat_b(mixed);
    DerivMatrix lin(ext, 2);
    lin.at(0, 0) = gen(0) + gen(3) + NCPoly::scalar(ext, kI * kHb - kHb);
    lin.at(1, 1) = gen(0) + gen(3) + NCPoly::scalar(ext, kI * kHb + kHb);
    CHECK(got == lin);
    CHECK(all_pass(sf.dmat_b_check(mixed)));
}

TEST_CASE("DD(x) (x I + hb N) = (x^2 - hb^2) I, and the general cleared inverse") {
    SkewFieldExtension sf;
    AlphaVector ax = AlphaVector::axis_x();
    RightFraction inv = sf.invert_dmat_b(ax);
    DerivMatrix lhs = sf.dmat_b(ax) * inv.num;
    NCPoly x2_hb2 = gen(1).pow(2) - NCPoly::scalar(ext, kHb * kHb);
    CHECK(lhs == DerivMatrix::scalar(ext, 2, x2_hb2));
    CHECK(all_pass(sf.invert_dmat_b_check(ax)));
    AlphaVector general{GaussRational::rational(1, 2), GaussRational(2), GaussRational(-1),
                        GaussRational::rational(3, 7)};
    CHECK(all_pass(sf.invert_dmat_b_check(general)));
    // degenerate alpha: a1^2 + a2^2 + a3^2 = 0 with Gaussian entries
    AlphaVector degenerate{GaussRational(0), GaussRational::i(), GaussRational(1), GaussRational(0)};
    CHECK(degenerate.norm3_sq().is_zero());
    CHECK_THROWS_AS(sf.invert_dmat_b(degenerate), degenerate_alpha);
}

TEST_CASE("CH identities and commutation") {
    SkewFieldExtension sf;
    CHECK(all_pass(sf.ch_check_rho()));
    for (const AlphaVector& a :
         {AlphaVector::axis_x(), AlphaVector::axis_z(), AlphaVector::three_four()}) {
        CHECK(all_pass(sf.ch_check_b(a)));
        CHECK(all_pass(sf.commute_check_rho_b(a)));
        CHECK(all_pass(sf.scalar_commutation_check(a)));
    }
    // non-unit alpha: (DD(b) - b I)^2 = 2 hb^2 I
    AlphaVector two{GaussRational(0), GaussRational(1), GaussRational(1), GaussRational(0)};
    DerivMatrix dif = sf.dmat_b(two) - DerivMatrix::scalar(
        ext, 2, gen(1) + gen(2));
    CHECK(dif * dif ==
          DerivMatrix::identity(ext, 2).scaled(HbarScalar(2) * kHb * kHb));
}

TEST_CASE("linear system and Cramer solution match their closed forms") {
    SkewFieldExtension sf;
    CHECK(all_pass(sf.linear_system_check()));
    CHECK(all_pass(sf.cramer_check()));
    auto sys = sf.build_linear_system();
    // spot checks: coefficient of a1 in equation 1, coefficient of a3 in equation 4
    CommPoly hb2(kHb * kHb);
    CHECK(sys.m[0][1] == -(CommPoly::rho_hat() * CommPoly::rho_hat() - hb2));
    CHECK(sys.m[3][3] == (CommPoly::rho_hat() - CommPoly::b_hat()).scaled(HbarScalar(-2)));
    CHECK(sys.rhs[0] == CommPoly(HbarScalar::one()));
    CHECK(sys.rhs[1].is_zero());
    // direct Cramer spot check: a3 = -2 / d'
    auto sol = sf.cramer_solve(sys);
    CHECK(sol.num[3] * sf.ansatz_denominator() ==
          CommPoly(HbarScalar(-2)) * sol.den);
}

TEST_CASE("cramer rejects a singular system") {
    SkewFieldExtension sf;
    SkewFieldExtension::LinearSystem singular;
    for (int r = 0; r < 4; ++r) singular.m[0][r] = CommPoly(HbarScalar::one());
    for (int r = 0; r < 4; ++r) singular.m[1][r] = CommPoly(HbarScalar::one());
    singular.rhs[0] = CommPoly(HbarScalar::one());
    CHECK_THROWS_AS(sf.cramer_solve(singular), std::domain_error);
}

TEST_CASE("two-sided cleared inverse and the negative control") {
    SkewFieldExtension sf;
    for (const AlphaVector& a :
         {AlphaVector::axis_z(), AlphaVector::axis_x(), AlphaVector::three_four()}) {
        CHECK(all_pass(sf.two_sided_inverse_check(a)));
    }
    CHECK(all_pass(sf.negative_control_check(AlphaVector::axis_z())));
    CHECK_THROWS_AS(sf.c_inverse_numerator(AlphaVector{GaussRational(0), GaussRational(1),
                                                       GaussRational(1), GaussRational(0)}),
                    degenerate_alpha);
}

TEST_CASE("final derivative formulas and their classical limits") {
    SkewFieldExtension sf;
    for (const AlphaVector& a :
         {AlphaVector::axis_z(), AlphaVector::axis_x(), AlphaVector::three_four()}) {
        CHECK(all_pass(sf.gradient_check(a)));
        CHECK(all_pass(sf.classical_limit_check(a)));
    }
    // hand-derived internal value: the unshifted t-derivative numerator over d'
    // is -i hb (rho - b) rho^{-1}
    AlphaVector az = AlphaVector::axis_z();
    auto grad = sf.qpd_of_c_inverse(az);
    NCPoly want = ((NCPoly::rho_power(ext, 1) - gen(3)) * NCPoly::rho_power(ext, -1))
                      .scaled(-(kI * kHb));
    CHECK(grad.dt.num == want);
}

TEST_CASE("cross product") {
    SkewFieldExtension sf;
    CHECK(all_pass(sf.cross_product_check()));
    AlgebraVector3 rv{gen(1), gen(2), gen(3)};
    AlgebraVector3 self = cross_product(rv, rv);
    CHECK(self[0] == gen(1).scaled(HbarScalar(2) * kI * kHb));
}

TEST_CASE("fraction equality criterion is symmetric and transitive") {
    SkewFieldExtension sf;
    AlphaVector az = AlphaVector::axis_z();
    CommPoly rb = CommPoly::rho_hat() - CommPoly::b_hat();
    // x (rho - b) / (rho^ - b^) == x / 1 == x (rho - b)^2 / (rho^ - b^)^2
    ScalarFraction f1{gen(1) * (NCPoly::rho_power(ext, 1) - gen(3)), rb};
    ScalarFraction f2{gen(1), CommPoly(HbarScalar::one())};
    ScalarFraction f3{gen(1) * (NCPoly::rho_power(ext, 1) - gen(3)) *
                          (NCPoly::rho_power(ext, 1) - gen(3)),
                      rb * rb};
    CHECK(fractions_equal(f1, f2, az, ext));
    CHECK(fractions_equal(f2, f1, az, ext));
    CHECK(fractions_equal(f2, f3, az, ext));
    CHECK(fractions_equal(f1, f3, az, ext));
    ScalarFraction bad{gen(2), CommPoly(HbarScalar::one())};
    CHECK_FALSE(fractions_equal(f1, bad, az, ext));
}
