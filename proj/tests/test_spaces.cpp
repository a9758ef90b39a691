#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genera/spaces.hpp>

using namespace genera;

namespace {

/// Integrates a single monomial x_0^{e_0}...x_{r-1}^{e_{r-1}} over M.
Rational integrate_monomial(const SpaceModel& M, const std::vector<int>& expo) {
    auto p = NilPoly<Rational>::monomial(M.ring, expo, Rational(1));
    return M.integrate(p);
}

}  // namespace

TEST_CASE("point: dimension zero, integration is evaluation") {
    const SpaceModel P = point();
    CHECK(P.real_dim == 0);
    CHECK(euler_characteristic(P) == Rational(1));
    CHECK(P.integrate(NilPoly<Rational>(Rational(5))) == Rational(5));
}

TEST_CASE("projective space: normalization and characteristic data") {
    const SpaceModel M = cp(3);
    CHECK(M.real_dim == 6);
    CHECK(euler_characteristic(M) == Rational(4));
    CHECK(integrate_monomial(M, {3}) == Rational(1));
    CHECK(integrate_monomial(M, {2}) == Rational(0));
    CHECK(integrate_monomial(M, {0}) == Rational(0));
    // c1(CP^3) = 4x: divisible by 2 and 4, not by 3.
    CHECK(is_c1_divisible(M, 2));
    CHECK(is_c1_divisible(M, 4));
    CHECK(!is_c1_divisible(M, 3));

    CHECK_THROWS_AS(cp(0), std::domain_error);  // the point is point()
}

TEST_CASE("products: ring with one generator per factor, Fubini integration") {
    const SpaceModel P = product(cp(1), cp(2));
    CHECK(P.real_dim == 6);
    CHECK(euler_characteristic(P) == Rational(6));
    CHECK(integrate_monomial(P, {1, 2}) == Rational(1));
    CHECK(integrate_monomial(P, {0, 2}) == Rational(0));
    CHECK(integrate_monomial(P, {1, 1}) == Rational(0));
    // c1 = 2 x_0 + 3 x_1; total degree-2 part integrates against the rest.
    const auto c = c1(P);
    CHECK(c.coeff({1, 0}) == Rational(2));
    CHECK(c.coeff({0, 1}) == Rational(3));
}

TEST_CASE("hypersurfaces: K3 and the quintic threefold") {
    const SpaceModel K3 = hypersurface(2, 4);
    CHECK(K3.real_dim == 4);
    CHECK(euler_characteristic(K3) == Rational(24));
    CHECK(c1(K3).is_zero());  // degree = m + 2 makes the model Calabi-Yau
    CHECK(is_c1_divisible(K3, 2));
    CHECK(is_c1_divisible(K3, 5));  // c1 = 0 is divisible by everything

    const SpaceModel Q = hypersurface(3, 5);
    CHECK(Q.real_dim == 6);
    CHECK(euler_characteristic(Q) == Rational(-200));
    CHECK(c1(Q).is_zero());

    // Degree-1 hypersurface in CP^{m+1} is CP^m: matching Euler counts.
    CHECK(euler_characteristic(hypersurface(2, 1)) == Rational(3));

    CHECK_THROWS_AS(hypersurface(0, 3), std::domain_error);
    CHECK_THROWS_AS(hypersurface(2, 0), std::domain_error);
}

TEST_CASE("even spheres: oriented models with trivial Pontrjagin classes") {
    const SpaceModel S4 = even_sphere(2);
    CHECK(S4.real_dim == 4);
    CHECK(euler_characteristic(S4) == Rational(2));
    // The volume generator integrates to 1 and squares to zero.
    CHECK(integrate_monomial(S4, {1}) == Rational(1));
    CHECK(S4.ring->gens.size() == 1);
    CHECK(S4.ring->gens[0].nilpotency == 2);

    CHECK_THROWS_AS(even_sphere(0), std::domain_error);
}

TEST_CASE("degree-2 class rendering used by diagnostics") {
    CHECK(degree2_class_str(cp(2), c1(cp(2))) == "3x");
    CHECK(degree2_class_str(hypersurface(2, 4), c1(hypersurface(2, 4))) == "0");
}
