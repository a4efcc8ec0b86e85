#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpd/errors.hpp"
#include "qpd/ncalgebra.hpp"
#include "qpd/random.hpp"

using namespace qpd;

namespace {

const Preset& ext = Preset::u2ext();
const HbarScalar kIHb = HbarScalar::i() * HbarScalar::hbar();

NCPoly gen(int g) { return NCPoly::generator(ext, g); }

} // namespace

TEST_CASE("compact brackets") {
    NCPoly t = gen(0), x = gen(1), y = gen(2), z = gen(3);
    HbarScalar h = HbarScalar::h();
    CHECK(commutator(x, y) == z.scaled(h));
    CHECK(commutator(y, z) == x.scaled(h));
    CHECK(commutator(z, x) == y.scaled(h));
    CHECK(commutator(t, x).is_zero());
    CHECK(commutator(t, y).is_zero());
    CHECK(commutator(t, z).is_zero());
    // y x = x y - 2 i hb z, forced by the bracket and the order
    CHECK(y * x == x * y - z.scaled(HbarScalar(2) * kIHb));
    CHECK(x * x == x.pow(2));
}

TEST_CASE("gl(N) defining relations for N = 2, 3") {
    for (int n : {2, 3}) {
        const Preset& gl = Preset::gl(n);
        HbarScalar h = HbarScalar::h();
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int s = 1; s <= n; ++s) {
                        NCPoly lij = NCPoly::generator(gl, gl.gl_index(i, j));
                        NCPoly lks = NCPoly::generator(gl, gl.gl_index(k, s));
                        NCPoly want(gl);
                        if (k == j) want = want + NCPoly::generator(gl, gl.gl_index(i, s)).scaled(h);
                        if (i == s) want = want - NCPoly::generator(gl, gl.gl_index(k, j)).scaled(h);
                        CHECK(commutator(lij, lks) == want);
                    }
    }
}

TEST_CASE("confluence: reduction order does not matter") {
    RandomSource rnd(RandomSource::seed_from_env());
    int count = 0;
    while (count < 200) {
        const Preset* presets[3] = {&ext, &Preset::gl(2), &Preset::gl(3)};
        const Preset& p = *presets[count % 3];
        Word w = rnd.word(p, rnd.uniform(0, 4), p.has_rho());
        NCPoly left = NCPoly::from_words(p, {{HbarScalar::one(), w}}, RewriteOrder::Leftmost);
        NCPoly right = NCPoly::from_words(p, {{HbarScalar::one(), w}}, RewriteOrder::Rightmost);
        CHECK(left == right);
        ++count;
    }
}

TEST_CASE("product route agrees with word route") {
    RandomSource rnd(RandomSource::seed_from_env() + 7);
    for (int k = 0; k < 60; ++k) {
        NCPoly a = rnd.poly(ext, 3, 2, true);
        NCPoly b = rnd.poly(ext, 3, 2, true);
        // independent evaluation: concatenate words for each term pair
        std::vector<std::pair<HbarScalar, Word>> words;
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                Word w;
                for (std::size_t g = 0; g < ma.exps.size(); ++g)
                    for (int e = 0; e < ma.exps[g]; ++e) w.letters.push_back((int)g);
                for (std::size_t g = 0; g < mb.exps.size(); ++g)
                    for (int e = 0; e < mb.exps[g]; ++e) w.letters.push_back((int)g);
                w.rho = ma.rho + mb.rho;
                words.emplace_back(ca * cb, std::move(w));
            }
        CHECK(a * b == NCPoly::from_words(ext, words));
    }
}

TEST_CASE("nc_mul associativity") {
    RandomSource rnd(RandomSource::seed_from_env() + 13);
    for (int k = 0; k < 200; ++k) {
        const Preset& p = (k % 2 == 0) ? ext : Preset::gl(2);
        NCPoly a = rnd.poly(p, 2, 2, true);
        NCPoly b = rnd.poly(p, 2, 2, true);
        NCPoly c = rnd.poly(p, 2, 2, true);
        CHECK((a * b) * c == a * (b * c));
        CHECK(NCPoly::one(p) * a == a);
    }
}

TEST_CASE("jacobi identity for all generator triples") {
    auto jacobi = [](const Preset& p) {
        for (int a = 0; a < p.num_gens(); ++a)
            for (int b = 0; b < p.num_gens(); ++b)
                for (int c = 0; c < p.num_gens(); ++c) {
                    NCPoly ga = NCPoly::generator(p, a), gb = NCPoly::generator(p, b),
                           gc = NCPoly::generator(p, c);
                    NCPoly sum = commutator(commutator(ga, gb), gc) +
                                 commutator(commutator(gb, gc), ga) +
                                 commutator(commutator(gc, ga), gb);
                    CHECK(sum.is_zero());
                }
    };
    jacobi(Preset::u2());
    jacobi(Preset::gl(2));
    jacobi(Preset::gl(3));
}

TEST_CASE("rho reduction and centrality") {
    NCPoly cas = NCPoly::casimir(ext);
    CHECK(NCPoly::rho_power(ext, 2) == cas);
    CHECK(NCPoly::rho_power(ext, 1) * NCPoly::rho_power(ext, -1) == NCPoly::one(ext));
    CHECK(NCPoly::rho_power(ext, 3) == cas * NCPoly::rho_power(ext, 1));
    for (int g = 0; g < 4; ++g)
        CHECK(commutator(NCPoly::rho_power(ext, 1), gen(g)).is_zero());
    // the ideal generator is identically zero in the quotient
    NCPoly hb2 = NCPoly::scalar(ext, HbarScalar::hbar() * HbarScalar::hbar());
    CHECK((gen(1).pow(2) + gen(2).pow(2) + gen(3).pow(2) + hb2 - NCPoly::rho_power(ext, 2)).is_zero());
}

TEST_CASE("negative rho levels have unique representatives") {
    NCPoly cas = NCPoly::casimir(ext);
    // casimir * rho^-2 = 1
    CHECK(cas * NCPoly::rho_power(ext, -2) == NCPoly::one(ext));
    // rho + hb^2 rho^-1 = (Cas + 2 hb^2) rho^-1 (the canonical merge)
    NCPoly hb2 = NCPoly::scalar(ext, HbarScalar::hbar() * HbarScalar::hbar());
    NCPoly lhs = NCPoly::rho_power(ext, 1) + hb2 * NCPoly::rho_power(ext, -1);
    NCPoly rhs = (cas + hb2) * NCPoly::rho_power(ext, -1);
    CHECK(lhs == rhs);
    // mixed parity stays separate: x*y + rho^-1 keeps both parts
    NCPoly mixed = gen(1) * gen(2) + NCPoly::rho_power(ext, -1);
    CHECK(mixed.terms().size() == 2);
    // two arithmetic routes to rho^-3 + rho^-1
    NCPoly r1 = NCPoly::rho_power(ext, -3) + NCPoly::rho_power(ext, -1);
    NCPoly r2 = (NCPoly::one(ext) + cas) * NCPoly::rho_power(ext, -3);
    CHECK(r1 == r2);
}

TEST_CASE("exact division by the casimir element") {
    RandomSource rnd(RandomSource::seed_from_env() + 99);
    NCPoly cas = NCPoly::casimir(ext);
    for (int k = 0; k < 20; ++k) {
        NCPoly v = rnd.poly(ext, 3, 3, false);
        auto q = NCPoly::divide_by_casimir(v * cas);
        REQUIRE(q.has_value());
        CHECK(*q == v);
    }
    CHECK_FALSE(NCPoly::divide_by_casimir(gen(1)).has_value());
    CHECK_FALSE(NCPoly::divide_by_casimir(NCPoly::one(ext)).has_value());
}

TEST_CASE("gl(2) <-> u(2) basis change") {
    const Preset& gl = Preset::gl(2);
    const Preset& u2 = Preset::u2();
    const HbarScalar i = HbarScalar::i();
    NCPoly a = NCPoly::generator(gl, gl.gl_index(1, 1));
    NCPoly b = NCPoly::generator(gl, gl.gl_index(1, 2));
    NCPoly t = NCPoly::generator(u2, 0), x = NCPoly::generator(u2, 1);
    NCPoly y = NCPoly::generator(u2, 2), z = NCPoly::generator(u2, 3);
    CHECK(gl2_to_u2(a) == t - z.scaled(i));
    CHECK(gl2_to_u2(b) == x.scaled(-i) - y);
    RandomSource rnd(RandomSource::seed_from_env() + 5);
    for (int k = 0; k < 20; ++k) {
        NCPoly g = rnd.poly(gl, 3, 3);
        CHECK(u2_to_gl2(gl2_to_u2(g)) == g);
        NCPoly u = rnd.poly(u2, 3, 3);
        CHECK(gl2_to_u2(u2_to_gl2(u)) == u);
    }
}

TEST_CASE("classical limit") {
    const Preset& cl = Preset::u2ext_classical();
    NCPoly v = gen(3).scaled(HbarScalar(2) * kIHb) + gen(1); // 2 i hb z + x
    CHECK(v.classical_limit() == NCPoly::generator(cl, 1));
    NCPoly pole = gen(1).scaled(HbarScalar::hbar().inverse());
    CHECK_THROWS_AS(pole.classical_limit(), pole_error);
    // the classical rewrite uses r^2 = x^2 + y^2 + z^2
    CHECK(NCPoly::rho_power(cl, 2) ==
          NCPoly::generator(cl, 1).pow(2) + NCPoly::generator(cl, 2).pow(2) +
              NCPoly::generator(cl, 3).pow(2));
    // commutativity downstairs
    CHECK(commutator(NCPoly::generator(cl, 1), NCPoly::generator(cl, 2)).is_zero());
}
