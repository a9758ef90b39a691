#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <genera/equivariant.hpp>

using namespace genera;

namespace {

RFq rfq_const(long v) { return RFq::constant('u', Rational(v)); }

bool all_coeffs_constant(const QSeries<RFq>& s) {
    for (int k = 0; k <= s.order(); ++k)
        if (!rf_is_constant(s.coeff(k))) return false;
    return true;
}

}  // namespace

TEST_CASE("fixed-point data of linear actions") {
    // Distinct weights give isolated fixed points; repeats give cp factors.
    const CircleAction A = linear_cp_action({0, 1, 2});
    REQUIRE(A.components.size() == 3);
    for (const auto& F : A.components) CHECK(F.Y.real_dim == 0);

    const CircleAction B = linear_cp_action({0, 2, 2, 5});
    REQUIRE(B.components.size() == 3);
    CHECK(B.components[0].Y.real_dim == 0);
    CHECK(B.components[1].Y.real_dim == 2);  // weight 2 repeated -> cp(1)
    CHECK(B.components[2].Y.real_dim == 0);
    // Normal weights at the middle component: 2-0 = 2 and 2-5 = -3... as
    // w_group - w_other with orientation w_other - w_group: both present.
    CHECK(B.components[1].normal.size() == 2);

    // Euler characteristics of components sum to chi(M).
    Rational chi(0);
    for (const auto& F : B.components) chi += euler_characteristic(F.Y);
    CHECK(chi == Rational(4));

    CHECK_THROWS_AS(linear_cp_action({}), std::domain_error);
}

TEST_CASE("signature point datum on cp(1): (1 + u^-1)/(1 - u^-1)") {
    const CircleAction A = linear_cp_action({0, 1});
    const EquivValue d0 = local_datum(A, 0, EquivSpec::plain(GenusKind::signature()));
    const RFq u1 = RFq::monomial('u', -1, Rational(1));
    const RFq want = (rfq_const(1) + u1) * scalar_inverse(rfq_const(1) - u1);
    CHECK(std::get<RFq>(d0) == want);

    // The two point data cancel: the equivariant signature is 0 = sign(cp1).
    const EquivValue s = equiv_index(A, EquivSpec::plain(GenusKind::signature()));
    CHECK(std::get<RFq>(s) == rfq_const(0));
    const EquivValue t = equiv_index(A, EquivSpec::plain(GenusKind::todd()));
    CHECK(std::get<RFq>(t) == rfq_const(1));
}

TEST_CASE("A-hat point datum with cover index 2: 1/(u - u^-1)") {
    const CircleAction A = linear_cp_action({0, 1}, 2);
    const EquivValue d0 = local_datum(A, 0, EquivSpec::plain(GenusKind::ahat()));
    const RFq u1 = RFq::monomial('u', 1, Rational(1));
    const RFq um1 = RFq::monomial('u', -1, Rational(1));
    CHECK(std::get<RFq>(d0) == scalar_inverse(u1 - um1));
    CHECK(std::get<RFq>(equiv_index(A, EquivSpec::plain(GenusKind::ahat()))).is_zero());

    // Odd weights at cover index 1 are rejected: the character would live on
    // a square root of u.
    const CircleAction A1 = linear_cp_action({0, 1}, 1);
    CHECK_THROWS_AS(equiv_index(A1, EquivSpec::plain(GenusKind::ahat())),
                    std::domain_error);
}

TEST_CASE("equivariant chi_y on cp(1) is the formal polynomial 1 - y") {
    const CircleAction A = linear_cp_action({0, 1});
    const EquivValue cy = equiv_index(A, EquivSpec::plain(GenusKind::chi_y()));
    const auto& s = std::get<QSeries<RFq>>(cy);
    CHECK(s.coeff(0) == rfq_const(1));
    CHECK(s.coeff(1) == rfq_const(-1));
    for (int k = 2; k <= s.order(); ++k) CHECK(s.coeff(k).is_zero());
}

TEST_CASE("chi_y bound at a cyclotomic point stays rigid") {
    const CircleAction A = linear_cp_action({0, 2, 5});
    const CycNumber yb = CycNumber::minus_zeta_pow(3, 1);
    const EquivValue v = equiv_index(A, EquivSpec::plain(GenusKind::chi_y_at(yb)));
    const auto cc = rf_is_constant(std::get<RFc>(v));
    REQUIRE(cc.has_value());
    CHECK(*cc == std::get<CycNumber>(index(cp(2), GenusKind::chi_y_at(yb))));

    // y = -1 degenerates (it is the Euler specialization); rejected plainly.
    CHECK_THROWS_AS(
        equiv_index(A, EquivSpec::plain(GenusKind::chi_y_at(CycNumber(-1)))),
        std::domain_error);
}

TEST_CASE("classical rigidity reports on cp(2), weights (0,1,2)") {
    const CircleAction A = linear_cp_action({0, 1, 2});
    for (const GenusKind& g : {GenusKind::signature(), GenusKind::todd()}) {
        const RigidityReport R = rigidity_report(A, EquivSpec::plain(g));
        CHECK(R.constant);
        CHECK(R.agrees);
    }
    const RigidityReport Ry = rigidity_report(A, EquivSpec::plain(GenusKind::chi_y()));
    CHECK(Ry.constant);
    CHECK(Ry.agrees);
    CHECK(std::get<YPoly>(Ry.value) == std::get<YPoly>(Ry.nonequivariant));
}

TEST_CASE("non-rigidity witness: twisted signature by T_C on cp(2)") {
    const CircleAction A = linear_cp_action({0, 1, 2});
    const RigidityReport R = rigidity_report(
        A, EquivSpec::twisted(GenusKind::signature(), bundle_tangent_c()));
    CHECK(!R.constant);
    CHECK(!R.normalized);
    CHECK(R.detail.find("character not constant") != std::string::npos);

    // The character specializes correctly: at u = 1 it must give the
    // non-equivariant twisted signature 16 (the sum over fixed points).
    const EquivValue v = equiv_index(
        A, EquivSpec::twisted(GenusKind::signature(), bundle_tangent_c()));
    const RFq& chr = std::get<RFq>(v);
    CHECK(chr.evaluate(Rational(1)) ==
          std::get<Rational>(twisted_index(cp(2), GenusKind::signature(),
                                           bundle_tangent_c())));
}

TEST_CASE("level-2 tower rigidity on the spin model cp(3)") {
    const CircleAction A = linear_cp_action({0, 1, 2, 3});
    const RigidityReport R = rigidity_report(A, EquivSpec::level2_loop(3));
    CHECK(R.constant);
    CHECK(R.agrees);
    // The rigidity is a genuine cancellation: the individual local datum is
    // u-dependent even though the sum is constant in every q-degree.
    const EquivValue d0 = local_datum(A, 0, EquivSpec::level2_loop(3));
    CHECK(!all_coeffs_constant(std::get<QSeries<RFq>>(d0)));
}

TEST_CASE("level-2 tower is NOT rigid on the non-spin model cp(2)") {
    const CircleAction A = linear_cp_action({0, 1, 5});
    const RigidityReport R = rigidity_report(A, EquivSpec::level2_loop(3));
    CHECK(!R.constant);  // q^1 is twice the non-rigid T_C-twisted signature
    const EquivValue v = equiv_index(A, EquivSpec::level2_loop(3));
    const auto c0 = rf_is_constant(std::get<QSeries<RFq>>(v).coeff(0));
    REQUIRE(c0.has_value());
    CHECK(*c0 == Rational(1));  // the classical q^0 layer stays rigid
}

TEST_CASE("equivariant A-hat character vanishes identically on spin cp(3)") {
    for (const std::vector<long>& w :
         {std::vector<long>{0, 1, 2, 3}, {0, 1, 3, 7}, {1, 2, 2, 4}}) {
        const CircleAction A = linear_cp_action(w, 2);
        CHECK(std::get<RFq>(equiv_index(A, EquivSpec::plain(GenusKind::ahat())))
                  .is_zero());
    }
}

TEST_CASE("character invariances: global shift and cover doubling") {
    const EquivSpec spec = EquivSpec::plain(GenusKind::signature());
    const EquivValue va = equiv_index(linear_cp_action({0, 1, 2}), spec);
    const EquivValue vb = equiv_index(linear_cp_action({5, 6, 7}), spec);
    CHECK(std::get<RFq>(va) == std::get<RFq>(vb));

    const EquivValue vc = equiv_index(linear_cp_action({0, 1, 2}, 2), spec);
    const auto c1v = rf_is_constant(std::get<RFq>(va));
    const auto c2v = rf_is_constant(std::get<RFq>(vc));
    REQUIRE(c1v.has_value());
    REQUIRE(c2v.has_value());
    CHECK(*c1v == *c2v);
}

TEST_CASE("limit at the character cusp recovers sign(M) = sum sign(Y)") {
    const EquivSpec s = EquivSpec::plain(GenusKind::signature());
    CHECK(limit_at_cusp(linear_cp_action({0, 0, 1}), s) == Rational(1));
    CHECK(limit_at_cusp(linear_cp_action({0, 1}), s) == Rational(0));
    CHECK(limit_at_cusp(linear_cp_action({0, 1, 2}), s) == Rational(1));
    // Only the signature selector has a finite limit contract.
    CHECK_THROWS_AS(limit_at_cusp(linear_cp_action({0, 1}),
                                  EquivSpec::plain(GenusKind::todd())),
                    std::domain_error);
}

TEST_CASE("localization integrals over cp(2)") {
    const CircleAction A = linear_cp_action({0, 1, 2});
    CHECK(equivariant_integral(A, EquivClassExpr::one()).is_zero());
    CHECK(equivariant_integral(A, EquivClassExpr::euler_tangent()) ==
          ZPoly::constant('z', Rational(3)));

    const CircleAction B = linear_cp_action({0, 0, 1});
    CHECK(equivariant_integral(
              B, EquivClassExpr::hyperplane_product({Rational(0), Rational(0)})) ==
          ZPoly::constant('z', Rational(1)));
}

TEST_CASE("sigma fixed sets and higher-order vanishing instances") {
    const CircleAction A = linear_cp_action({0, 0, 0, 1, 1, 1}, 2);
    const SigmaFixedData sd = sigma_fixed_set(A, 2);
    CHECK(sd.codim == 6);
    CHECK(sd.component_dims.size() == 2);

    const VanishingReport V = higher_vanishing_check(A, 2, 2);
    CHECK(V.applicable);
    CHECK(V.r == 1);
    CHECK(V.pass);

    const VanishingReport V3 = higher_vanishing_check(A, 2, 3);
    CHECK(V3.applicable);
    CHECK(V3.pass);

    const CircleAction B = linear_cp_action({0, 0, 1, 1, 2, 2}, 2);
    const SigmaFixedData sdB = sigma_fixed_set(B, 3);
    CHECK(sdB.codim == 8);
    CHECK(sdB.component_dims.size() == 3);
    CHECK(higher_vanishing_check(B, 3, 2).pass);

    // Too-small codimension is reported as not applicable, never as a pass.
    const CircleAction C = linear_cp_action({0, 1, 2}, 2);
    const VanishingReport VC = higher_vanishing_check(C, 2, 2);
    CHECK(!VC.applicable);
}

TEST_CASE("structure checks accept consistent lifted data") {
    const StructureReport S = structure_checks(linear_cp_action({0, 2, 2, 5}));
    CHECK(S.euler_ok);
    CHECK(S.dim_ok);
    CHECK(S.generators_ok);
    CHECK(S.pass);
}

TEST_CASE("level-N selectors on cp(5) at N = 3") {
    const CircleAction A = linear_cp_action({0, 1, 2, 3, 4, 5}, 6);
    const RigidityReport R =
        rigidity_report(A, EquivSpec::levelN_loop_at_cusp_infinity(3, 2));
    CHECK(R.normalized);
    CHECK(R.agrees);

    const RigidityReport Rc = rigidity_report(A, EquivSpec::levelN_cusp(3, 1, 0, 2));
    CHECK(Rc.normalized);
    CHECK(Rc.agrees);

    // The level condition is enforced equivariantly too: cp(2) has c1 = 3x.
    const CircleAction B = linear_cp_action({0, 1, 2}, 4);
    CHECK_THROWS_AS(
        equiv_index(B, EquivSpec::levelN_loop_at_cusp_infinity(2, 1)),
        std::domain_error);
}

TEST_CASE("custom fixed-point data pass the construction consistency checks") {
    // Rebuild the (0,1) rotation on cp(1) by hand: two isolated points.
    const SpaceModel pt = point();
    FixedComponent F0{pt, {WeightedLine{Cls(), 1}}, {LineRestriction{Cls(), Rational(0)}}};
    FixedComponent F1{pt, {WeightedLine{Cls(), -1}}, {LineRestriction{Cls(), Rational(-1)}}};
    const CircleAction A = make_circle_action(cp(1), {F0, F1}, 1);
    CHECK(std::get<RFq>(equiv_index(A, EquivSpec::plain(GenusKind::signature())))
              .is_zero());

    // A zero normal weight is rejected: the datum would not be isolated.
    FixedComponent bad{pt, {WeightedLine{Cls(), 0}}, {LineRestriction{Cls(), Rational(0)}}};
    CHECK_THROWS_AS(make_circle_action(cp(1), {bad, F1}, 1), std::domain_error);
}
