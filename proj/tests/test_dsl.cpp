#include "doctest.h"

#include "generators.hpp"
#include "tmotive/dsl.hpp"

using namespace tmotive;
using testgen::Rng;

TEST_CASE("minimal forms") {
    VfSet s = dsl::parse_vfset("(point 0)");
    REQUIRE(s.terms.size() == 1);
    REQUIRE(s.terms[0].factors.size() == 1);
    CHECK(std::get<PointPiece>(s.terms[0].factors[0]).value.is_zero());

    VfSet d = dsl::parse_vfset("(odisc (series (term 1 2)) 3/2)");
    const Disc& disc = std::get<Disc>(d.terms[0].factors[0]);
    CHECK(disc.center == HahnSeries::monomial(Rational(2), Rational(1)));
    CHECK(disc.radius == Rational(3, 2));
    CHECK_FALSE(disc.closed);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(dsl::parse_vfset("(odisc"), ParseError);
    try {
        dsl::parse_vfset("(odisc");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("1:7") != std::string::npos);
    }
    CHECK_THROWS_AS(dsl::parse_sexpr("(a) b"), ParseError);
    CHECK_THROWS_AS(dsl::parse_sexpr(")"), ParseError);
    CHECK_THROWS_AS(dsl::parse_vfset("(point 1/0)"), ParseError);
    CHECK_THROWS_AS(dsl::parse_vfset("(frob 1)"), ParseError);
    CHECK_THROWS_AS(dsl::parse_rational("7/"), ParseError);
}

TEST_CASE("vint and union forms") {
    VfSet s = dsl::parse_vfset(
        "(union (vint (lo (point 0) incl) (hi (cdisc 1 2) excl)) (halfthin 5 1 -))");
    REQUIRE(s.terms.size() == 2);
    const auto& iv = std::get<VInterval>(s.terms[0].factors[0]);
    CHECK(iv.lo.inclusive);
    CHECK_FALSE(iv.hi.inclusive);
    CHECK(iv.hi.disc.closed);
    CHECK(std::get<HalfThin>(s.terms[1].factors[0]).side == -1);

    VfSet inf = dsl::parse_vfset("(vint (lo -inf) (hi (point 0)))");
    CHECK(std::get<VInterval>(inf.terms[0].factors[0]).lo.kind ==
          Endpoint::Kind::NegInfinity);
}

TEST_CASE("rv object forms") {
    RvObject o = dsl::parse_rvobject(
        "(rvobj (box (res 0 (cells 0)) (gset (gcell)) 1 (units 1)) "
        "(box (resclass 2 1 -3) (gset (gcell ray pt)) 2))");
    REQUIRE(o.boxes().size() == 2);
    CHECK(o.boxes()[0].unit_coords() == std::vector<std::size_t>{1});
    // the resclass literal realizes (2, 1, -3) by cells
    CHECK(res_class_of_cells(o.boxes()[1].res()) == ResGradedClass(2, 1, -3));
    CHECK(o.boxes()[1].gamma().grade() == 2);

    CHECK_THROWS_AS(dsl::parse_rvobject("(rvobj (box (res 0 (cells 0)) (gset (gcell)) 1 (units 3)))"),
                    ParseError);
    CHECK_THROWS_AS(dsl::parse_rvobject("(rvobj (box (resclass 1 0 -2) (gset (gcell)) 1))"),
                    ParseError);
}

TEST_CASE("sexpr round trip") {
    const char* texts[] = {
        "(union (prod (point 0) (odisc (series (term 1 2) (term 3/2 -1)) 2)) (halfthin 1 2 +))",
        "(rvobj (box (res 1 (cells 0 1)) (gset (gcell ray) (gcell pt)) 3 (units 2)))",
        "(vint (lo (odisc 0 1) incl) (hi +inf))",
    };
    for (const char* t : texts) {
        dsl::Ast a = dsl::parse_sexpr(t);
        std::string rendered = dsl::render_sexpr(a);
        CHECK(dsl::ast_equal(dsl::parse_sexpr(rendered), a));
        CHECK(dsl::render_sexpr(dsl::parse_sexpr(rendered)) == rendered);
    }
}

TEST_CASE("series text round trip") {
    CHECK(render_series(HahnSeries()) == "0");
    CHECK(dsl::parse_series_text("0").is_zero());
    CHECK(render_series(dsl::parse_series_text("3*t^(1/2) + -1*t^2")) ==
          "3*t^(1/2) + -1*t^2");

    Rng rng(505);
    for (int i = 0; i < 300; ++i) {
        HahnSeries x = testgen::random_series(rng);
        CHECK(dsl::parse_series_text(render_series(x)) == x);
    }
}

TEST_CASE("graded and quotient text round trips") {
    CHECK(render_graded(GradedYX::zero()) == "0");
    CHECK(render_graded(generator()) == "1 + (1 + 2*Y)*X");
    CHECK(render_wform(WForm(1, 0)) == "1 + 0*w");
    CHECK(render_wform(WForm(-1, -2)) == "-1 + -2*w");

    Rng rng(19937);
    for (int i = 0; i < 300; ++i) {
        GradedYX x = testgen::random_graded(rng);
        CHECK(dsl::parse_graded_text(render_graded(x)) == x);
        WForm w = testgen::random_wform(rng);
        CHECK(dsl::parse_wform_text(render_wform(w)) == w);
    }
}

TEST_CASE("blowup forms in object files") {
    const char* base = "(rvobj (box (res 0 (cells 0)) (gset (gcell)) 1 (units 1)))";
    RvObject blown = dsl::parse_rvobject("(blowup " + std::string(base) + " 1 1)");
    CHECK(blown == blowup(dsl::parse_rvobject(base), 0, 1));
    // nested forms compose
    RvObject twice =
        dsl::parse_rvobject("(blowup (blowup (rvobj (box (res 0 (cells 0)) (gset (gcell)) 2 "
                            "(units 1 2))) 1 1) 2 2)");
    CHECK(isp_equiv(twice, dsl::parse_rvobject(
                               "(rvobj (box (res 0 (cells 0)) (gset (gcell)) 2 (units 1 2)))")));
    // a blowup at an unmarked coordinate is a domain error, not a parse error
    CHECK_THROWS_AS(dsl::parse_rvobject("(blowup (rvobj (box (res 0 (cells 0)) (gset (gcell)) 1)) 1 1)"),
                    DomainError);
}

TEST_CASE("object rendering round trips") {
    Rng rng(160);
    for (int i = 0; i < 200; ++i) {
        RvObject o = testgen::random_object(rng);
        RvObject back = dsl::parse_rvobject(dsl::render_rvobject(o));
        CHECK(back == o);
    }
}

TEST_CASE("gamma value renderings") {
    GammaElem v = GammaElem::of(-1, Rational(3));
    CHECK(render_gamma_additive(v) == "(-, 3)");
    CHECK(render_gamma_multiplicative(v) == "-e^(-3)");
    CHECK(render_gamma_additive(GammaElem::zero_point()) == "0");
    CHECK(render_gamma_multiplicative(GammaElem::of(1, Rational(-1, 2))) == "e^(1/2)");
    CHECK(render_rv(RvElem::of(Rational(1, 2), Rational(3))) == "(1/2, 3)");
    CHECK(render_rv(RvElem::zero()) == "0");
}
