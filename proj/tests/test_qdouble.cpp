#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpd/qdouble.hpp"
#include "qpd/random.hpp"

using namespace qpd;

namespace {

const HbarScalar kH = HbarScalar::h();

} // namespace

TEST_CASE("sigma on a single generator pair, frozen values") {
    QuantumDouble qd(2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int s = 1; s <= 2; ++s) {
                    MixedPoly e{{{MixedLetter{true, i, j}, MixedLetter{false, k, s}}, HbarScalar::one()}};
                    DoubleElement got = qd.sigma(e);
                    DoubleElement want;
                    want[{{{k, s}}, {{i, j}}}] = HbarScalar::one();
                    if (i == s && k == j) want[{{}, {}}] = HbarScalar::one();
                    if (k == j) {
                        auto& slot = want[{{}, {{i, s}}}];
                        slot = slot + kH;
                    }
                    for (auto it = want.begin(); it != want.end();)
                        it = it->second.is_zero() ? want.erase(it) : std::next(it);
                    CHECK(got == want);
                }
}

TEST_CASE("sigma fixes pure one-sided elements") {
    QuantumDouble qd(2);
    MixedPoly b_only{{{MixedLetter{false, 1, 2}}, HbarScalar::one()}};
    DoubleElement sb = qd.sigma(b_only);
    REQUIRE(sb.size() == 1);
    CHECK(sb.begin()->first.bword == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(sb.begin()->first.amono.empty());
    MixedPoly a_only{{{MixedLetter{true, 1, 2}}, HbarScalar::one()}};
    DoubleElement sa = qd.sigma(a_only);
    REQUIRE(sa.size() == 1);
    CHECK(sa.begin()->first.bword.empty());
}

TEST_CASE("counit action on generators and the unit") {
    for (int n : {2, 3}) {
        QuantumDouble qd(n);
        const Preset& gl = qd.gl();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(qd.act({{i, j}}, NCPoly::one(gl)).is_zero());
                for (int k = 1; k <= n; ++k)
                    for (int s = 1; s <= n; ++s) {
                        NCPoly got = qd.act({{i, j}}, NCPoly::generator(gl, gl.gl_index(k, s)));
                        NCPoly want = (i == s && k == j) ? NCPoly::one(gl) : NCPoly::zero(gl);
                        CHECK(got == want);
                    }
            }
    }
}

TEST_CASE("coproduct counit axiom: second argument 1") {
    QuantumDouble qd(2);
    RandomSource rnd(RandomSource::seed_from_env());
    const Preset& gl = qd.gl();
    for (int k = 0; k < 10; ++k) {
        NCPoly b = rnd.poly(gl, 3, 3);
        AMono w{{rnd.uniform(1, 2), rnd.uniform(1, 2)}};
        CHECK(qd.coproduct_act(w, b, NCPoly::one(gl)) == qd.act(w, b));
        CHECK(qd.coproduct_act(w, NCPoly::one(gl), b) == qd.act(w, b));
    }
}

TEST_CASE("leibniz agreement: coproduct route equals sigma route on products") {
    QuantumDouble qd(2);
    RandomSource rnd(RandomSource::seed_from_env() + 3);
    const Preset& gl = qd.gl();
    for (int k = 0; k < 100; ++k) {
        NCPoly a = rnd.poly(gl, 3, 2);
        NCPoly b = rnd.poly(gl, 3, 2);
        AMono w{{rnd.uniform(1, 2), rnd.uniform(1, 2)}};
        CHECK(qd.coproduct_act(w, a, b) == qd.act(w, a * b));
    }
}

TEST_CASE("quantum double verification suites pass for N = 2 and 3") {
    for (int n : {2, 3}) {
        QuantumDouble qd(n);
        CHECK(all_pass(qd.check_compatibility()));
        CHECK(all_pass(qd.check_coassociativity()));
        CHECK(all_pass(qd.elements_ideal_check()));
        CHECK(all_pass(qd.second_order_action_check()));
        CHECK(all_pass(qd.transpose_variant_check()));
        CHECK(all_pass(qd.shifted_permute_check(30, 11)));
        CHECK(all_pass(qd.grouplike_check(2, 12)));
        CHECK(all_pass(qd.act_well_defined_check(2, 13)));
        CHECK(all_pass(qd.sigma_confluence_check(30, 14)));
        CHECK(all_pass(qd.a_commutativity_check()));
    }
}

TEST_CASE("shifted diagonal action table entries") {
    // dhat_a a = a dhat_a + h dhat_a and dhat_a c = c dhat_a for the diagonal
    QuantumDouble qd(2);
    MixedPoly e{{{MixedLetter{true, 1, 1}, MixedLetter{false, 1, 1}}, HbarScalar::one()}};
    DoubleElement got = qd.sigma(e, /*shifted=*/true);
    DoubleElement want;
    want[{{{1, 1}}, {{1, 1}}}] = HbarScalar::one();
    want[{{}, {{1, 1}}}] = kH;
    CHECK(got == want);
    MixedPoly e2{{{MixedLetter{true, 1, 1}, MixedLetter{false, 2, 2}}, HbarScalar::one()}};
    DoubleElement got2 = qd.sigma(e2, /*shifted=*/true);
    DoubleElement want2;
    want2[{{{2, 2}}, {{1, 1}}}] = HbarScalar::one();
    CHECK(got2 == want2);
}

TEST_CASE("shifted unit image: Dhat(1) = I/h") {
    QuantumDouble qd(2);
    const Preset& gl = qd.gl();
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            NCPoly got = qd.act_shifted(i, j, NCPoly::one(gl));
            NCPoly want = (i == j) ? NCPoly::scalar(gl, kH.inverse()) : NCPoly::zero(gl);
            CHECK(got == want);
        }
}
