#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genera/cyclotomic.hpp>
#include <genera/laurent.hpp>
#include <genera/nilpoly.hpp>
#include <genera/qseries.hpp>
#include <genera/ratfun.hpp>

using namespace genera;
using RFq = RationalFunction<Rational>;

TEST_CASE("rational arithmetic is exact at any size") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational::from_string("-3/4") * Rational::from_string("8") == Rational(-6));
    CHECK(Rational(7).is_divisible_by(7));
    CHECK(!Rational(7).is_divisible_by(2));

    // binomial(60, 30) overflows 64-bit arithmetic; the value is frozen.
    CHECK(binomial(60, 30) == Rational::from_string("118264581564861424"));
    CHECK(factorial(12) == Rational(479001600));
}

TEST_CASE("generalized binomial handles negative upper index") {
    // k(k-1)...(k-n+1)/n! — the form Riemann-Roch needs for negative twists.
    CHECK(binomial(-1, 3) == Rational(-1));
    CHECK(binomial(-2, 2) == Rational(3));
    CHECK(binomial(-5, 0) == Rational(1));
    CHECK(binomial(3, 5) == Rational(0));
    CHECK(binomial(4, 2) == Rational(6));
}

TEST_CASE("cyclotomic numbers reduce against the cyclotomic polynomial") {
    const CycNumber z3 = CycNumber::zeta(3, 1);
    CHECK((CycNumber(1) + z3 + z3 * z3).is_zero());
    // zeta_3^2 = -1 - zeta_3 after reduction mod Phi_3.
    CHECK(z3 * z3 == CycNumber(-1) - z3);

    const CycNumber z4 = CycNumber::zeta(4, 1);
    CHECK(z4 * z4 == CycNumber(-1));

    // Inverses by the extended reduction: zeta * zeta^-1 = 1.
    CHECK((z3 * z3.inverse()).as_rational() == Rational(1));

    // Mixed moduli embed into the compositum.
    const CycNumber mixed = z3 + CycNumber::zeta(2, 1);
    CHECK(mixed.modulus() == 6);
    CHECK(mixed + CycNumber(1) == z3);  // zeta_2 = -1

    // -zeta_N as used for level-N evaluation points.
    CHECK(CycNumber::minus_zeta_pow(2, 1).as_rational() == Rational(1));
    const CycNumber mz3 = CycNumber::minus_zeta_pow(3, 1);
    CHECK((mz3 * mz3 * mz3).as_rational() == Rational(-1));  // (-z)^3 = -z^3 = -1
}

TEST_CASE("laurent polynomials with negative exponents") {
    using LP = LaurentPoly<Rational>;
    const LP u = LP::monomial('u', 1, Rational(1));
    const LP uinv = LP::monomial('u', -1, Rational(1));
    const LP p = u + uinv + LP::constant('u', Rational(2));
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 1);
    // (u + 2 + u^-1) * u = u^2 + 2u + 1
    const LP q = p * u;
    CHECK(q == LP::monomial('u', 2, Rational(1)) + LP::monomial('u', 1, Rational(2)) +
                   LP::constant('u', Rational(1)));
}

TEST_CASE("q-series windows: truncation, extension rules, equality") {
    using QS = QSeries<Rational>;
    const QS one = QS::constant('q', Rational(1));
    CHECK(one.exact());
    const QS q = QS::monomial('q', 1, Rational(1));

    // Truncated windows are contagious and cannot regrow.
    const QS t = (one + q).as_truncated(3);
    CHECK(!t.exact());
    CHECK(t.order() == 3);
    CHECK_THROWS_AS(t.as_truncated(5), std::domain_error);

    // Exact against truncated compares on the overlap with zero-fill.
    CHECK(one + q == (one + q).as_truncated(4));
    // A longer exact value differs from a shorter window.
    const QS cubic = q * q * q;
    CHECK(!((one + cubic) == (one + cubic).as_truncated(2)));

    // Multiplication respects the shorter window.
    const QS prod = t * (one + q).as_truncated(3);
    CHECK(prod.order() == 3);
    CHECK(prod.coeff(0) == Rational(1));
    CHECK(prod.coeff(1) == Rational(2));
    CHECK(prod.coeff(2) == Rational(1));
    CHECK(prod.coeff(3) == Rational(0));
}

TEST_CASE("rational functions cancel common factors on comparison") {
    const RFq u = RFq::monomial('u', 1, Rational(1));
    const RFq one = RFq::constant('u', Rational(1));
    // (u^2 - 1)/(u - 1) == u + 1
    const RFq lhs = (u * u - one) * scalar_inverse(u - one);
    CHECK(lhs == u + one);
    CHECK(rf_is_constant(lhs) == std::nullopt);
    CHECK(rf_is_constant(one + one) == Rational(2));

    // Monomial-times-constant detection, the rigidity normalizer.
    const RFq m = RFq::monomial('u', -3, Rational(5));
    const auto mc = rf_is_monomial_times_constant(m);
    REQUIRE(mc.has_value());
    CHECK(mc->first == -3);
    CHECK(mc->second == Rational(5));

    // Limit at u = infinity: deg(num) < deg(den) -> 0; equal degrees -> ratio.
    CHECK(rf_limit_at_infinity(scalar_inverse(u + one)) == Rational(0));
    CHECK(rf_limit_at_infinity((u + u) * scalar_inverse(u - one)) == Rational(2));
    CHECK(rf_limit_at_infinity(u) == std::nullopt);
}

TEST_CASE("partial-fraction fixture: (L+y)/(L-1) + (1+yL)/(1-L) = 1 - y") {
    // Formal version: y is the outer series variable, L = u lives inside the
    // rational-function coefficients — exactly the engine's chi_y layout.
    const RFq L = RFq::monomial('u', 1, Rational(1));
    const RFq one = RFq::constant('u', Rational(1));
    const RFq dinv = scalar_inverse(L - one);  // 1/(L-1)

    using YS = QSeries<RFq>;
    const int W = 4;
    // (L+y)/(L-1) and (1+yL)/(1-L) as polynomials in y over the u-line.
    const YS first = (YS::constant('y', L * dinv) + YS::monomial('y', 1, dinv))
                         .as_truncated(W);
    const YS second =
        (YS::constant('y', -dinv) + YS::monomial('y', 1, -(L * dinv)))
            .as_truncated(W);
    const YS sum = first + second;
    CHECK(sum.coeff(0) == one);
    CHECK(sum.coeff(1) == RFq::constant('u', Rational(-1)));
    for (int k = 2; k <= W; ++k) CHECK(sum.coeff(k).is_zero());

    // Numeric spot checks of the same identity at y = 7 and y = -2.
    for (const long y : {7L, -2L}) {
        const RFq yc = RFq::constant('u', Rational(y));
        const RFq val = (L + yc) * dinv + (one + yc * L) * (-dinv);
        CHECK(rf_is_constant(val) == Rational(1 - y));
    }
}

TEST_CASE("nilpotent polynomial algebra terminates by nilpotency") {
    // Two degree-2 generators, each squaring to zero (a cp(1) x cp(1) shape).
    const NilRingPtr R = make_nil_ring({NilGen{"x", 2, 2}, NilGen{"u", 2, 2}}, 4);
    using NP = NilPoly<Rational>;
    const NP x = NP::generator(R, 0);
    const NP u = NP::generator(R, 1);

    // exp(x + u) = 1 + x + u + xu.
    const NP e = nil_exp(x + u);
    CHECK(e.coeff({0, 0}) == Rational(1));
    CHECK(e.coeff({1, 0}) == Rational(1));
    CHECK(e.coeff({0, 1}) == Rational(1));
    CHECK(e.coeff({1, 1}) == Rational(1));

    CHECK_THROWS_AS(nil_exp(NP::one(R)), std::domain_error);
}

TEST_CASE("nilpotent inversion: 1/(2+x) = 1/2 - x/4 + x^2/8") {
    const NilRingPtr R = make_nil_ring({NilGen{"x", 2, 3}}, 6);
    using NP = NilPoly<Rational>;
    const NP x = NP::generator(R, 0);
    const NP inv = nil_invert(NP::constant(R, Rational(2)) + x);
    CHECK(inv.coeff({0}) == Rational(1, 2));
    CHECK(inv.coeff({1}) == Rational(-1, 4));
    CHECK(inv.coeff({2}) == Rational(1, 8));
    // (2+x) * inv == 1.
    const NP prod = (NP::constant(R, Rational(2)) + x) * inv;
    CHECK(prod.coeff({0}) == Rational(1));
    CHECK(prod.coeff({1}) == Rational(0));
    CHECK(prod.coeff({2}) == Rational(0));

    CHECK_THROWS_AS(nil_invert(x), std::domain_error);
}
