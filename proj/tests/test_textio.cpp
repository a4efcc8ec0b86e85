#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qpd/errors.hpp"
#include "qpd/random.hpp"
#include "qpd/textio.hpp"

using namespace qpd;

namespace {

const Preset& ext = Preset::u2ext();

NCPoly gen(int g) { return NCPoly::generator(ext, g); }

} // namespace

TEST_CASE("parse and normalize basic identities") {
    CHECK(to_string(parse_expression("x*y - y*x")) == "2*i*hb*z");
    CHECK(to_string(parse_expression("rho^-1 * rho")) == "1");
    CHECK(to_string(parse_expression("rho^3")) ==
          to_string(NCPoly::casimir(ext) * NCPoly::rho_power(ext, 1)));
    CHECK(parse_expression("0").is_zero());
    CHECK(parse_expression("x - x").is_zero());
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_expression("x + * y"), parse_error);
    try {
        parse_expression("x + * y");
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse_expression("w + 1"), parse_error);
    CHECK_THROWS_AS(parse_expression("x + l[1,2]"), parse_error);
    CHECK_THROWS_AS(parse_expression("(x"), parse_error);
    CHECK_THROWS_AS(parse_expression("x^-1"), parse_error);
    CHECK_THROWS_AS(parse_expression("x / y"), parse_error);
    CHECK_THROWS_AS(parse_expression("1/0"), division_by_zero);
}

TEST_CASE("gl expressions") {
    NCPoly v = parse_expression("l[1,2]*l[2,1] - l[2,1]*l[1,2]");
    CHECK(v.preset().kind() == PresetKind::GlN);
    CHECK(to_string(v) == to_string(parse_expression("2*i*hb*l[1,1] - 2*i*hb*l[2,2]")));
    NCPoly w = parse_expression("l[3,3]");
    CHECK(w.preset().n() == 3);
}

TEST_CASE("derivative applications") {
    CHECK(to_string(parse_expression("dx(x^2)")) == "2*x");
    CHECK(parse_expression("dx(y)").is_zero());
    // shifted t-derivative of 1 is 2/h = -i/hb
    NCPoly dt1 = parse_expression("dt(1)");
    CHECK(dt1 == NCPoly::scalar(ext, HbarScalar(2) * HbarScalar::h().inverse()));
    // unshifted variant used by `limit`
    EvalOptions opts;
    opts.unshifted_dt = true;
    CHECK(parse_expression("dt(1)", opts).is_zero());
    CHECK(parse_expression("dt(rho)", opts).classical_limit().is_zero());
    CHECK_THROWS_AS(parse_expression("dx(rho^-1)"), degenerate_alpha);
}

TEST_CASE("round trip: print then parse is the identity") {
    // a canonical-form corpus of shapes
    const char* corpus[] = {
        "x*y + 2*i*hb*z + rho^-1",
        "t^2*x - 3/2*y + (1+hb^2)*z",
        "-x + i*y - 2*i*hb*z",
        "rho - hb^2*rho^-1",
        "1/4*i*t + 3/2",
        "l[1,1]^2*l[1,2] - 2*l[2,2]",
        "-i*hb^-1*x^2*rho^-1 - 2*i*hb*rho^-1",
    };
    for (const char* s : corpus) {
        NCPoly v = parse_expression(s);
        NCPoly again = parse_expression(to_string(v));
        CHECK(v == again);
        CHECK(to_string(again) == to_string(v));
    }
    RandomSource rnd(RandomSource::seed_from_env() + 41);
    for (int k = 0; k < 60; ++k) {
        NCPoly v = rnd.poly(ext, 3, 4, true);
        CHECK(parse_expression(to_string(v)) == v);
    }
    for (int k = 0; k < 20; ++k) {
        NCPoly v = rnd.poly(Preset::gl(2), 3, 3);
        CHECK(parse_expression(to_string(v)) == v);
    }
}

TEST_CASE("scalar rendering round trips through the value") {
    HbarScalar mixed(GaussRational(mpq_class(3, 2), mpq_class(1, 4)));
    NCPoly v = NCPoly::scalar(ext, mixed);
    CHECK(parse_expression(to_string(v)) == v);
    HbarScalar laurent = HbarScalar::hbar().inverse() * HbarScalar::i();
    CHECK(parse_expression(to_string(NCPoly::scalar(ext, laurent))) == NCPoly::scalar(ext, laurent));
    HbarScalar fraction = (HbarScalar::hbar() * HbarScalar::hbar() + HbarScalar::one()).inverse();
    CHECK(parse_expression(to_string(NCPoly::scalar(ext, fraction))) == NCPoly::scalar(ext, fraction));
}

TEST_CASE("matrix grid shape") {
    Dmat2Engine d2(ext);
    std::string grid = matrix_grid(d2.of(gen(1)));
    CHECK(grid.find("x") != std::string::npos);
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 2);
}
