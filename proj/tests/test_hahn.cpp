#include "doctest.h"

#include "generators.hpp"
#include "tmotive/hahn.hpp"

using namespace tmotive;
using testgen::Rng;

namespace {

HahnSeries mono(long c, long num, long den = 1) {
    return HahnSeries::monomial(Rational(c), Rational(num, den));
}

}  // namespace

TEST_CASE("series addition") {
    CHECK((mono(1, 0) + mono(-1, 0)).is_zero());
    CHECK(mono(3, 1, 2) + mono(1, 2) ==
          HahnSeries::from_terms({{Rational(1, 2), Rational(3)}, {Rational(2), Rational(1)}}));
    CHECK((mono(1, 1, 2) + mono(1, 1)) + mono(-1, 1, 2) == mono(1, 1));
}

TEST_CASE("series multiplication") {
    CHECK(mono(1, 1, 2) * mono(1, 1, 2) == mono(1, 1));
    HahnSeries one_plus_t = HahnSeries::constant(1) + mono(1, 1);
    HahnSeries one_minus_t = HahnSeries::constant(1) - mono(1, 1);
    CHECK(one_plus_t * one_minus_t == HahnSeries::constant(1) - mono(1, 2));
    CHECK((mono(2, 3) * HahnSeries()).is_zero());
}

TEST_CASE("truncated inverse") {
    CHECK(truncated_inverse(mono(1, 1), Rational(5)) == mono(1, -1));
    CHECK(truncated_inverse(HahnSeries::constant(2), Rational(1)) ==
          HahnSeries::constant(Rational(1, 2)));

    // oracle for inv(1 - t, 3): (1 - t)(1 + t + t^2) = 1 - t^3, so the
    // truncation at order 3 is exactly 1 + t + t^2
    HahnSeries one_minus_t = HahnSeries::constant(1) - mono(1, 1);
    HahnSeries expected = HahnSeries::constant(1) + mono(1, 1) + mono(1, 2);
    CHECK(one_minus_t * expected == HahnSeries::constant(1) - mono(1, 3));
    CHECK(truncated_inverse(one_minus_t, Rational(3)) == expected);

    CHECK_THROWS_AS(truncated_inverse(HahnSeries(), Rational(3)), DomainError);
    CHECK_THROWS_AS(truncated_inverse(mono(1, 1), Rational(0)), DomainError);
}

TEST_CASE("comparison") {
    // leading coefficient of t^1 - t^(1/2) is -1
    auto d = leading_difference(mono(1, 1), mono(1, 1, 2));
    REQUIRE(d.has_value());
    CHECK(d->exponent == Rational(1, 2));
    CHECK(d->coeff == Rational(-1));
    CHECK(mono(1, 1) < mono(1, 1, 2));
    CHECK((mono(1, 1) <=> mono(1, 1)) == std::strong_ordering::equal);
    CHECK(mono(-1, -1) < HahnSeries::constant(5));
}

TEST_CASE("signed valuation") {
    HahnSeries x = mono(-2, 3) + mono(1, 4);
    CHECK(x.valuation() == GammaElem::of(-1, Rational(3)));
    CHECK(HahnSeries().valuation() == GammaElem::zero_point());
    CHECK(mono(1, -1, 2).valuation() == GammaElem::of(1, Rational(-1, 2)));
}

TEST_CASE("rv map") {
    CHECK((mono(3, 1, 2) + mono(1, 2)).leading_rv() == RvElem::of(Rational(1, 2), Rational(3)));
    CHECK(HahnSeries().leading_rv().is_zero());
    CHECK((mono(2, 1) * mono(3, 2)).leading_rv() ==
          rv_mul(mono(2, 1).leading_rv(), mono(3, 2).leading_rv()));
}

TEST_CASE("rv multiplication") {
    CHECK(rv_mul(RvElem::of(Rational(1, 2), Rational(3)),
                 RvElem::of(Rational(3, 2), Rational(2))) ==
          RvElem::of(Rational(2), Rational(6)));
    CHECK(rv_mul(RvElem::of(Rational(1), Rational(1)), RvElem::zero()).is_zero());
    CHECK(rv_mul(RvElem::of(Rational(0), Rational(-1)), RvElem::of(Rational(0), Rational(-1))) ==
          RvElem::of(Rational(0), Rational(1)));
}

TEST_CASE("residue") {
    CHECK((HahnSeries::constant(5) + mono(1, 1)).residue() == Rational(5));
    CHECK(mono(1, 1, 2).residue() == Rational(0));
    CHECK(mono(1, -1).residue() == Rational(0));
    CHECK((mono(1, -1) + HahnSeries::constant(3)).residue() == Rational(0));
}

TEST_CASE("valuation laws on random series") {
    Rng rng(12021);
    for (int i = 0; i < 300; ++i) {
        HahnSeries x = testgen::random_nonzero_series(rng);
        HahnSeries y = testgen::random_nonzero_series(rng);

        HahnSeries xy = x * y;
        REQUIRE(!xy.is_zero());
        CHECK(xy.min_exponent() == x.min_exponent() + y.min_exponent());

        HahnSeries sum = x + y;
        if (!sum.is_zero())
            CHECK(sum.min_exponent() >= std::min(x.min_exponent(), y.min_exponent()));

        CHECK(xy.leading_rv() == rv_mul(x.leading_rv(), y.leading_rv()));
    }
}

TEST_CASE("equal rv forces deeper cancellation") {
    Rng rng(5150);
    for (int i = 0; i < 300; ++i) {
        HahnSeries x = testgen::random_nonzero_series(rng);
        // same leading term, different tail
        HahnSeries y = x + HahnSeries::monomial(testgen::random_nonzero_rational(rng),
                                                x.min_exponent() + Rational(1) +
                                                    tmotive::abs(testgen::random_exponent(rng)));
        REQUIRE(x.leading_rv() == y.leading_rv());
        HahnSeries d = x - y;
        REQUIRE(!d.is_zero());
        CHECK(d.min_exponent() > x.min_exponent());
    }
}

TEST_CASE("order compatibility") {
    Rng rng(977);
    for (int i = 0; i < 300; ++i) {
        HahnSeries x = testgen::random_series(rng);
        HahnSeries y = testgen::random_series(rng);
        HahnSeries z = testgen::random_series(rng);
        if (x < y) {
            CHECK(x + z < y + z);
            HahnSeries c = testgen::random_nonzero_series(rng);
            if (c.sign() > 0) CHECK(c * x < c * y);
        }
        const bool lt = x < y, gt = y < x, eq = x == y;
        CHECK((lt ? 1 : 0) + (gt ? 1 : 0) + (eq ? 1 : 0) == 1);
    }
}

TEST_CASE("truncated inverse is exact below the order") {
    Rng rng(40962);
    for (int i = 0; i < 200; ++i) {
        HahnSeries x = testgen::random_nonzero_series(rng);
        Rational order = Rational(testgen::pick(rng, 1, 8));
        HahnSeries y = truncated_inverse(x, order);
        HahnSeries err = x * y - HahnSeries::constant(1);
        CHECK(err.truncated_below(order).is_zero());
        REQUIRE(!y.is_zero());
        CHECK(y.min_exponent() == -x.min_exponent());
        CHECK(y.terms().back().exponent < -x.min_exponent() + order);
    }
}
