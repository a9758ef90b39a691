#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genera/genus.hpp>

using namespace genera;

namespace {

Rational rat(const IndexValue& v) { return std::get<Rational>(v); }

QSeries<Rational> qs(std::vector<Rational> coeffs) {
    return QSeries<Rational>::truncated('q', std::move(coeffs));
}

YPoly ypoly(const std::vector<long>& coeffs) {
    YPoly p('y');
    for (size_t i = 0; i < coeffs.size(); ++i)
        p = p + YPoly::monomial('y', static_cast<int>(i), Rational(coeffs[i]));
    return p;
}

}  // namespace

TEST_CASE("classical genus table on projective spaces") {
    CHECK(rat(index(point(), GenusKind::signature())) == Rational(1));
    CHECK(rat(index(cp(2), GenusKind::signature())) == Rational(1));
    CHECK(rat(index(cp(4), GenusKind::signature())) == Rational(1));
    CHECK(rat(index(cp(3), GenusKind::signature())) == Rational(0));
    for (int n = 1; n <= 6; ++n)
        CHECK(rat(index(cp(n), GenusKind::todd())) == Rational(1));
    // A-hat(CP^{2k}) = (-1)^k C(2k,k)/16^k.
    CHECK(rat(index(cp(2), GenusKind::ahat())) == Rational(-1, 8));
    CHECK(rat(index(cp(4), GenusKind::ahat())) == Rational(3, 128));
    CHECK(rat(index(cp(6), GenusKind::ahat())) == Rational(-5, 1024));
    CHECK(std::get<YPoly>(index(cp(2), GenusKind::chi_y())) == ypoly({1, -1, 1}));
    CHECK(std::get<YPoly>(index(cp(5), GenusKind::chi_y())) ==
          ypoly({1, -1, 1, -1, 1, -1}));
    CHECK(rat(index(cp(3), GenusKind::euler())) == Rational(4));
}

TEST_CASE("K3 invariants from the quartic model") {
    const SpaceModel K3 = hypersurface(2, 4);
    CHECK(rat(index(K3, GenusKind::euler())) == Rational(24));
    CHECK(rat(index(K3, GenusKind::signature())) == Rational(-16));
    CHECK(rat(index(K3, GenusKind::ahat())) == Rational(2));
    CHECK(rat(index(K3, GenusKind::todd())) == Rational(2));
    // Hodge structure: chi_y = 2 - 20y + 2y^2.
    CHECK(std::get<YPoly>(index(K3, GenusKind::chi_y())) == ypoly({2, -20, 2}));
}

TEST_CASE("quintic threefold: Calabi-Yau sanity") {
    const SpaceModel Q = hypersurface(3, 5);
    CHECK(rat(index(Q, GenusKind::euler())) == Rational(-200));
    CHECK(rat(index(Q, GenusKind::todd())) == Rational(0));  // chi(O) of a CY3
    CHECK(rat(index(Q, GenusKind::signature())) == Rational(0));  // dim 6
}

TEST_CASE("multiplicativity on products") {
    const SpaceModel P = product(cp(1), cp(2));
    CHECK(rat(index(P, GenusKind::signature())) == Rational(0));
    CHECK(std::get<YPoly>(index(P, GenusKind::chi_y())) == ypoly({1, -2, 2, -1}));
    CHECK(rat(index(P, GenusKind::todd())) == Rational(1));
    const SpaceModel PP = product(cp(2), cp(2));
    CHECK(rat(index(PP, GenusKind::signature())) == Rational(1));
    CHECK(rat(index(PP, GenusKind::ahat())) == Rational(1, 64));  // (-1/8)^2
}

TEST_CASE("chi_y specializations tie the table together") {
    // chi_{-1} = euler, chi_0 = todd, chi_1 = signature (complex models).
    for (const SpaceModel& M : {cp(2), cp(3), hypersurface(2, 4)}) {
        const YPoly p = std::get<YPoly>(index(M, GenusKind::chi_y()));
        Rational at1(0), atm1(0), at0(0);
        for (const auto& [e, c] : p.terms()) {
            at1 += c;
            atm1 += (e % 2 ? -c : c);
            if (e == 0) at0 += c;
        }
        CHECK(atm1 == rat(index(M, GenusKind::euler())));
        CHECK(at0 == rat(index(M, GenusKind::todd())));
        CHECK(at1 == rat(index(M, GenusKind::signature())));
    }
    // Bound evaluation agrees with the formal polynomial at y = 1.
    CHECK(std::get<CycNumber>(index(cp(2), GenusKind::chi_y_at(CycNumber(1))))
              .as_rational() == Rational(1));
}

TEST_CASE("Riemann-Roch spot checks with negative twists") {
    CHECK(rat(twisted_index(cp(2), GenusKind::todd(), bundle_line({Rational(5)}))) ==
          binomial(7, 2));
    CHECK(rat(twisted_index(cp(3), GenusKind::todd(), bundle_line({Rational(-2)}))) ==
          Rational(0));  // C(1,3) = 0
    CHECK(rat(twisted_index(cp(3), GenusKind::todd(), bundle_line({Rational(-4)}))) ==
          binomial(-1, 3));  // = -1, Serre duality regime
    // On a product, the line bundle takes one coefficient per factor.
    CHECK(rat(twisted_index(product(cp(1), cp(1)), GenusKind::todd(),
                            bundle_line({Rational(2), Rational(3)}))) == Rational(12));
}

TEST_CASE("canonical-root twists vanish (Krichever)") {
    CHECK(rat(twisted_index(cp(5), GenusKind::todd(), bundle_kroot(3, 1))) ==
          Rational(0));
    CHECK(rat(twisted_index(cp(5), GenusKind::todd(), bundle_kroot(3, 2))) ==
          Rational(0));
    CHECK(rat(twisted_index(cp(3), GenusKind::todd(), bundle_kroot(4, 1))) ==
          Rational(0));
    // Level condition violations are rejected with the failing class named.
    CHECK_THROWS_WITH_AS(
        twisted_index(cp(2), GenusKind::todd(), bundle_kroot(2, 1)),
        "level condition failed: c1 = 3x is not divisible by 2", std::domain_error);
}

TEST_CASE("Chern characters of structured bundles") {
    // ch(T cp(2)) = 2 + 3x + 3/2 x^2;  ch(T_C) = ch(T) + ch(T*) = 4 + 3x^2.
    const auto chT = chern_character(cp(2), bundle_tangent(), 0);
    CHECK(chT.coeff({0}) == QSeries<Rational>::constant('q', Rational(2)));
    CHECK(chT.coeff({1}) == QSeries<Rational>::constant('q', Rational(3)));
    CHECK(chT.coeff({2}) == QSeries<Rational>::constant('q', Rational(3, 2)));
    const auto chTC = chern_character(cp(2), bundle_tangent_c(), 0);
    CHECK(chTC.coeff({0}) == QSeries<Rational>::constant('q', Rational(4)));
    CHECK(chTC.coeff({1}).is_zero());
    CHECK(chTC.coeff({2}) == QSeries<Rational>::constant('q', Rational(3)));

    // Exterior/symmetric powers: Lambda^2(T cp(2)) = K^* = O(3).
    const auto che = chern_character(cp(2), bundle_ext_power(2, bundle_tangent()), 0);
    const auto cho3 = chern_character(cp(2), bundle_line({Rational(3)}), 0);
    CHECK(che.coeff({0}) == cho3.coeff({0}));
    CHECK(che.coeff({1}) == cho3.coeff({1}));
    CHECK(che.coeff({2}) == cho3.coeff({2}));
}

TEST_CASE("loop-space signature towers (level 2)") {
    // [DERIVED] frozen expansions.
    CHECK(loop_signature(cp(2), 3) == qs({Rational(1), Rational(32), Rational(256),
                                          Rational(1408)}));
    CHECK(loop_signature(hypersurface(2, 4), 3) ==
          qs({Rational(-16), Rational(-512), Rational(-4096), Rational(-22528)}));
    // The q^1 coefficient is 2 sign(M, T_C) by the R_1 bundle identity.
    for (const SpaceModel& M : {cp(2), hypersurface(2, 4)}) {
        const Rational tw =
            rat(twisted_index(M, GenusKind::signature(), bundle_tangent_c()));
        CHECK(loop_signature(M, 1).coeff(1) == Rational(2) * tw);
    }
    // Odd complex dimension: identically zero tower.
    CHECK(loop_signature(cp(3), 3) ==
          qs({Rational(0), Rational(0), Rational(0), Rational(0)}));
    // Oriented-only model with trivial Pontrjagin classes.
    CHECK(loop_signature(even_sphere(2), 3) ==
          qs({Rational(0), Rational(0), Rational(0), Rational(0)}));
}

TEST_CASE("Dirac-cusp expansion requires spin and freezes on K3") {
    CHECK(dirac_cusp_series(hypersurface(2, 4), 3) ==
          qs({Rational(2), Rational(40), Rational(-124), Rational(432)}));
    // Coefficient 1 is -A-hat(M, T_C).
    CHECK(dirac_cusp_series(hypersurface(2, 4), 1).coeff(1) ==
          -rat(twisted_index(hypersurface(2, 4), GenusKind::ahat(),
                             bundle_tangent_c())));
    CHECK(dirac_cusp_series(cp(3), 1) == qs({Rational(0), Rational(0)}));
    CHECK_THROWS_WITH_AS(dirac_cusp_series(cp(2), 1),
                         "spin condition failed: c1 = 3x", std::domain_error);
}

TEST_CASE("level-N towers and cusp data") {
    // N=2 equals the signature tower coefficientwise.
    const auto l2 = levelN_loop(hypersurface(2, 4), 2, 3);
    const auto ls = loop_signature(hypersurface(2, 4), 3);
    for (int k = 0; k <= 3; ++k) CHECK(l2.coeff(k) == CycNumber(ls.coeff(k)));

    // cp(5) at N=3: the tower vanishes identically (Krichever regime).
    const auto l3 = levelN_loop(cp(5), 3, 2);
    for (int k = 0; k <= 2; ++k) CHECK(l3.coeff(k).is_zero());
    CHECK(std::get<CycNumber>(
              index(cp(5), GenusKind::chi_y_at(CycNumber::minus_zeta_pow(3, 1))))
              .is_zero());

    // Level condition is enforced.
    CHECK_THROWS_AS(levelN_loop(cp(3), 3, 1), std::domain_error);

    // Finite cusp values: trivial canonical bundle on K3 makes both columns
    // classical numbers.
    const CuspValues cvK3 = cusp_values(hypersurface(2, 4), 2);
    REQUIRE(cvK3.kroot_values.size() == 1);
    CHECK(cvK3.kroot_values[0] == CycNumber(2));    // Td(K3, O) = 2
    CHECK(cvK3.chi_y_values[0] == CycNumber(-16));  // chi_1 = sign
    const CuspValues cv1 = cusp_values(cp(1), 2);
    CHECK(cv1.kroot_values[0].is_zero());
    CHECK(cv1.chi_y_values[0].is_zero());
}

TEST_CASE("alpha-cusp expansions on cp(5) at level 3") {
    // alpha = 0 reproduces the i-infinity tower on exponents divisible by N.
    const auto a0 = alpha_cusp_series(cp(5), 3, 0, 1, 6);
    const auto l3 = levelN_loop(cp(5), 3, 2);
    for (int m = 0; m <= 2; ++m) CHECK(a0.coeff(3 * m) == l3.coeff(m));
    for (int t = 0; t <= 6; ++t)
        if (t % 3 != 0) CHECK(a0.coeff(t).is_zero());
    // Other cusps also vanish here (both columns of cusp_values are zero).
    const auto a1 = alpha_cusp_series(cp(5), 3, 1, 0, 3);
    for (int t = 0; t <= 3; ++t) CHECK(a1.coeff(t).is_zero());
    // Range checks on (alpha, beta).
    CHECK_THROWS_AS(alpha_cusp_series(cp(5), 3, 3, 1, 2), std::domain_error);
    CHECK_THROWS_AS(alpha_cusp_series(cp(5), 3, 0, 0, 2), std::domain_error);
}

TEST_CASE("twist validation names the offending request") {
    // Euler genus does not twist.
    CHECK_THROWS_AS(twisted_index(cp(2), GenusKind::euler(), bundle_tangent()),
                    std::domain_error);
    // A-hat with an odd-weight line needs a finer cover, rejected plainly.
    CHECK_THROWS_AS(
        twisted_index(even_sphere(2), GenusKind::todd(), bundle_tangent()),
        std::domain_error);  // complex-genus on an oriented-only model
}
