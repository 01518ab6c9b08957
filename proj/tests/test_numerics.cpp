#include <doctest.h>

#include <type_traits>

#include "qident/rational.hpp"
#include "qident/real.hpp"
#include "qident/sampler.hpp"

using namespace qident;

static_assert(std::is_same_v<qident::ExactRational, qident::Rational>);
static_assert(std::is_same_v<qident::BigReal, qident::Real>);

TEST_CASE("rat canonical form") {
    CHECK(rat(6, 4) == Rational(3, 2));
    CHECK(rat(0, 5) == Rational(0));
    CHECK(rat(0, 5).den() == 1);
    CHECK(rat(-3, -6) == Rational(1, 2));
    CHECK(rat(-3, -6).den() == 2);
    CHECK(rat(3, -6) == Rational(-1, 2));
    CHECK_THROWS_WITH_AS(rat(1, 0), "zero denominator", std::domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-12") == Rational(-12));
    CHECK(Rational::parse("0.35") == Rational(7, 20));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK_THROWS(Rational::parse("1/"));
    CHECK_THROWS(Rational::parse(""));
}

TEST_CASE("rational arithmetic and pow") {
    const Rational a(3, 7), b(-5, 4);
    CHECK(a + b == Rational(-23, 28));
    CHECK(a * b == Rational(-15, 28));
    CHECK((a / b) * b == a);
    CHECK(a.pow(3) == Rational(27, 343));
    CHECK(b.pow(-2) == Rational(16, 25));
    CHECK(Rational(0).pow(0) == 1);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("field axioms on sampled triples") {
    RationalSampler s(2024, 12, 8);
    const auto v = s.sample(30);
    for (std::size_t i = 0; i + 2 < v.size(); i += 3) {
        const Rational &a = v[i], &b = v[i + 1], &c = v[i + 2];
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
    }
}

TEST_CASE("to_real rounding contracts") {
    PrecisionContext ctx;
    CHECK(to_real(Rational(1, 2), ctx).str(2) == Real(Rational(1, 2), 256).str(2));
    CHECK(to_real(Rational(0), ctx).is_zero());
    // dyadic rationals are exact
    CHECK(to_real(Rational(5, 8), ctx) == Real(5, 256) / Real(8, 256));

    // |to_real(r,p1) - to_real(r,p2)| <= 2^(2-p1) |r| for p1 < p2
    RationalSampler s(7, 12, 8);
    for (const auto& r : s.sample(20)) {
        for (long p1 : {64L, 96L}) {
            const long p2 = 256;
            const Real diff = (Real(r, p1) - Real(r, p2)).abs();
            const Real bound = Real::pow2(2 - p1, p2) * Real(r, p2).abs();
            CHECK(diff <= bound);
        }
    }
}

TEST_CASE("precision context invariants") {
    CHECK_THROWS_AS(PrecisionContext(32, -80, 200, 400), std::invalid_argument);
    CHECK_THROWS_AS(PrecisionContext(256, -80, 4, 400), std::invalid_argument);
    const PrecisionContext ctx;
    CHECK(ctx.tolerance().sign() > 0);
    CHECK(ctx.tolerance() == Real::pow2(-80, 256));
}

TEST_CASE("real arithmetic basics") {
    const Real two(2, 128);
    CHECK((two * two).str(2) == Real(4, 128).str(2));
    CHECK(two.precision() == 128);
    CHECK((Real(1, 128) + Real(1, 256)).precision() == 256);
    CHECK(Real::pi(256) > Real(3, 256));
    CHECK(Real(4, 128).sqrt() == Real(2, 128));
    CHECK_THROWS_AS(Real(-1, 128).sqrt(), std::domain_error);
    CHECK_THROWS_AS(Real(1, 128) / Real(0, 128), std::domain_error);
    CHECK(Real::pow2(-3, 64) * Real(8, 64) == Real(1, 64));
}

TEST_CASE("sampler determinism and golden triple") {
    RationalSampler s(42, 12, 8);
    const auto v = s.sample(3);
    // pinned from the first run; the draw algorithm is fully specified, so this
    // sequence is stable across platforms
    CHECK(v[0].str() == "-1/2");
    CHECK(v[1].str() == "7/6");
    CHECK(v[2].str() == "-5/3");

    RationalSampler s2(42, 12, 8);
    CHECK(s2.sample(3) == v);
    RationalSampler s3(43, 12, 8);
    CHECK(s3.sample(3) != v);
}

TEST_CASE("sampler exclusions and exhaustion") {
    RationalSampler nz(5, 12, 8, {[](const Rational& r) { return r.is_zero(); }});
    for (const auto& r : nz.sample(25)) CHECK(!r.is_zero());

    RationalSampler tiny(9, 1, 1);  // pool: {-1, 0, 1}
    CHECK(tiny.pool_size() == 3);
    CHECK_THROWS_WITH_AS(tiny.sample(4), "sample space exhausted", std::runtime_error);
    const auto all = tiny.sample(3);
    CHECK(all.size() == 3);
}

TEST_CASE("sampled values are pairwise distinct") {
    RationalSampler s(11, 12, 8);
    const auto v = s.sample(60);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) CHECK(v[i] != v[j]);
}
