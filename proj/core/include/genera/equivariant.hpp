/// @file equivariant.hpp
/// @brief Circle-action fixed-point engine: localization integrals, local
/// data, equivariant characters as exact rational functions, and the
/// rigidity / vanishing / structure checkers.
///
/// An equivariant index is computed as a sum over fixed components Y of a
/// local datum: the genus integrand of Y itself, times one equivariant
/// normal-direction factor per weighted line (c, m) of the normal bundle
/// (the genus series at the equivariant root c + m z, with e^{-root}
/// realized as exp(-c) u^{-d m}), times the equivariant Chern character of
/// any twist, integrated over Y.  Scalars are exact rational functions in
/// the character variable u = lambda^{1/d}; rigidity means the reduced sum
/// is a constant.

#pragma once

#include <genera/genus.hpp>
#include <genera/ratfun.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace genera {

using RFq = RationalFunction<Rational>;
using RFc = RationalFunction<CycNumber>;
/// Polynomials in the localization variable z.
using ZPoly = LaurentPoly<Rational>;

/// One normal direction at a fixed component: equivariant root c + m z.
struct WeightedLine {
    Cls cls;    // degree-2 class in the component's ring
    int m = 1;  // nonzero rotation weight
};

/// Image of one ambient degree-2 generator under restriction to the
/// component: a class in the component's ring plus a lift weight.
struct LineRestriction {
    Cls cls;
    Rational weight = Rational(0);
};

struct FixedComponent {
    SpaceModel Y;
    std::vector<WeightedLine> normal;
    std::vector<LineRestriction> lines;  // one per ambient degree-2 generator
};

struct CircleAction {
    SpaceModel M;
    std::vector<FixedComponent> components;
    int d = 1;  // cover index: characters live in u with lambda = u^d
    bool linear = false;
    std::vector<long> weights;  // the defining weights when linear
};

/// Validates and assembles an action: nonzero normal weights, dimension
/// count, Euler-characteristic consistency, and the c1-restriction identity
/// (classes exactly, weights up to one global shift).
CircleAction make_circle_action(SpaceModel M, std::vector<FixedComponent> components,
                                int d);

/// The linear action on cp(n) with the given n+1 integer weights: one
/// component per distinct weight value w (a cp(k) for a group of size k+1),
/// normal lines (x_Y, w' - w), and O(1) restricting with lift weight -w.
CircleAction linear_cp_action(const std::vector<long>& weights, int d = 1);

/// What to compute equivariantly.
struct EquivSpec {
    enum class Sel { Genus, Twisted, Level2Loop, LevelNLoop, LevelNCusp };
    Sel sel = Sel::Genus;
    GenusKind genus = GenusKind::signature();  // Genus / Twisted
    BundlePtr twist;                           // Twisted
    int q_order = 4;   // loop selectors; for LevelNCusp the window in q^{1/N}
    int N = 2;         // level
    int alpha = 0;     // LevelNCusp
    int beta = 1;      // LevelNCusp

    static EquivSpec plain(GenusKind g) {
        EquivSpec s;
        s.sel = Sel::Genus;
        s.genus = std::move(g);
        return s;
    }
    static EquivSpec twisted(GenusKind g, BundlePtr E) {
        EquivSpec s;
        s.sel = Sel::Twisted;
        s.genus = std::move(g);
        s.twist = std::move(E);
        return s;
    }
    static EquivSpec level2_loop(int Q) {
        EquivSpec s;
        s.sel = Sel::Level2Loop;
        s.q_order = Q;
        return s;
    }
    static EquivSpec levelN_loop_at_cusp_infinity(int N, int Q) {
        EquivSpec s;
        s.sel = Sel::LevelNLoop;
        s.N = N;
        s.q_order = Q;
        return s;
    }
    static EquivSpec levelN_cusp(int N, int alpha, int beta, int Qt) {
        EquivSpec s;
        s.sel = Sel::LevelNCusp;
        s.N = N;
        s.alpha = alpha;
        s.beta = beta;
        s.q_order = Qt;
        return s;
    }
};

/// Equivariant values: characters, or q-series of characters for the loop
/// selectors (cyclotomic coefficients when y is bound).
using EquivValue = std::variant<RFq, RFc, QSeries<RFq>, QSeries<RFc>>;

std::string equiv_value_str(const EquivValue& v);

/// The contribution of component j to the equivariant index.
EquivValue local_datum(const CircleAction& A, size_t j, const EquivSpec& spec);

/// Lefschetz fixed point formula: the sum of all local data, fully reduced.
EquivValue equiv_index(const CircleAction& A, const EquivSpec& spec);

/// Rigidity verdict for an equivariant index.
struct RigidityReport {
    bool constant = false;    // every character (coefficient) is constant
    bool normalized = false;  // constant after removing one global u-monomial
    int monomial_exp = 0;     // the removed global exponent (0 when none)
    IndexValue value;         // the constant(s), when (normalized-)constant
    IndexValue nonequivariant;  // independent genera-module computation
    bool agrees = false;        // value == nonequivariant
    std::string detail;
};
RigidityReport rigidity_report(const CircleAction& A, const EquivSpec& spec);

/// Sum over components of lim_{u -> inf} of the local datum; for the
/// signature this is Sum_Y sign(Y) with the action-induced signs.
Rational limit_at_cusp(const CircleAction& A, const EquivSpec& spec);

/// Equivariant cohomology class expressions for localization integrals.
struct EquivClassExpr {
    enum class Kind { One, EulerTangent, HyperplaneProduct };
    Kind kind = Kind::One;
    std::vector<Rational> shifts;  // HyperplaneProduct: one lift shift per factor

    static EquivClassExpr one() { return {}; }
    static EquivClassExpr euler_tangent() {
        EquivClassExpr e;
        e.kind = Kind::EulerTangent;
        return e;
    }
    static EquivClassExpr hyperplane_product(std::vector<Rational> shifts) {
        EquivClassExpr e;
        e.kind = Kind::HyperplaneProduct;
        e.shifts = std::move(shifts);
        return e;
    }
};

/// Localization: Sum_Y integral over Y of restriction(v) / e_T(nu_Y).  The
/// result must clear all denominators to a polynomial in z; anything else
/// signals inconsistent fixed-point data.
ZPoly equivariant_integral(const CircleAction& A, const EquivClassExpr& v);

/// Fixed-set data of sigma in S^1 of order o (linear actions only).
struct SigmaFixedData {
    int order = 2;
    std::vector<int> component_dims;  // complex dimensions of the components
    int codim = 0;                    // minimum real codimension
};
SigmaFixedData sigma_fixed_set(const CircleAction& A, int o);

/// Higher-order vanishing: N = 2 checks the Dirac-cusp coefficients 0..r
/// (codim > 2 o r); N >= 3 (order-2 sigma, codim >= 6) checks
/// Td(M, T* (x) K^{alpha/N}) = 0 for 0 < alpha < N/2.
struct VanishingReport {
    bool applicable = false;
    int order = 2;
    int N = 2;
    int codim = 0;
    int r = -1;  // largest verified coefficient index (level 2)
    bool pass = false;
    std::string detail;
};
VanishingReport higher_vanishing_check(const CircleAction& A, int o, int N = 2);

/// Structure-theorem facts: Euler-count, dimension count
/// (Sum (m_i + 1) = m + 1 for linear actions), hyperplane restriction
/// generates each component's ring.
struct StructureReport {
    bool euler_ok = false;
    bool dim_ok = false;
    bool generators_ok = false;
    bool pass = false;
    std::string detail;
};
StructureReport structure_checks(const CircleAction& A);

}  // namespace genera
