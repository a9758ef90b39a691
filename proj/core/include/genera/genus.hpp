/// @file genus.hpp
/// @brief Multiplicative genera and (loop-space) indices of model manifolds.
///
/// Every genus here is driven by one characteristic power series written in
/// the factored form Q(x) = td(x) * extra(x), where td(x) = x/(1 - e^{-x}):
///
///   Todd       Q(x) = td(x)                      Q(0) = 1
///   Signature  Q(x) = td(x) (1 + e^{-x})         Q(0) = 2
///   A-hat      Q(x) = td(x) e^{-x/2}             Q(0) = 1
///   chi_y      Q(x) = td(x) (1 + y e^{-x})       Q(0) = 1 + y
///
/// On stable roots (TM (+) C^t = (+)pos (-) (+)neg) the genus integrand is
/// prod Q(pos) * prod Q(neg)^{-1} * Q(0)^{-t}; the trivial-count correction
/// makes this exactly equal to the classical normalized form, so twisting by
/// the trivial line reproduces the plain genus.  The same factors evaluated
/// at equivariant roots drive the fixed-point engine, which is why they are
/// templates over the scalar ring S.

#pragma once

#include <genera/bundles.hpp>
#include <genera/cyclotomic.hpp>
#include <genera/laurent.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace genera {

struct GenusKind {
    enum class Kind { Euler, Signature, AHat, Todd, ChiY };
    Kind kind = Kind::Todd;
    std::optional<CycNumber> y_bound;  // ChiY: bound value; absent = formal y

    static GenusKind euler() { return {Kind::Euler, std::nullopt}; }
    static GenusKind signature() { return {Kind::Signature, std::nullopt}; }
    static GenusKind ahat() { return {Kind::AHat, std::nullopt}; }
    static GenusKind todd() { return {Kind::Todd, std::nullopt}; }
    static GenusKind chi_y() { return {Kind::ChiY, std::nullopt}; }
    static GenusKind chi_y_at(CycNumber v) { return {Kind::ChiY, std::move(v)}; }

    std::string name() const;
};

/// Polynomial in the formal chi_y parameter.
using YPoly = LaurentPoly<Rational>;

/// Exact index values: plain rationals, cyclotomic numbers, y-polynomials,
/// and q-series of the first two.
using IndexValue =
    std::variant<Rational, CycNumber, YPoly, QSeries<Rational>, QSeries<CycNumber>>;

std::string index_value_str(const IndexValue& v);

/// Taylor coefficients of td(x) = x/(1 - e^{-x}) through x^order.
std::vector<Rational> td_series(int order);

/// td coefficients embedded into a scalar domain.
template <ring_scalar S>
std::vector<S> td_coeffs_as(int order) {
    std::vector<S> out;
    for (const auto& c : td_series(order)) out.push_back(from_rational_as<S>(c));
    return out;
}

/// Q(0) of the genus series: the value a trivial line contributes.
template <ring_scalar S>
S genus_unit(GenusKind::Kind k, const std::optional<S>& y) {
    switch (k) {
        case GenusKind::Kind::Signature:
            return from_rational_as<S>(Rational(2));
        case GenusKind::Kind::ChiY:
            if (!y) throw std::domain_error("genus: chi_y without a y parameter");
            return from_rational_as<S>(Rational(1)) + *y;
        default:
            return from_rational_as<S>(Rational(1));
    }
}

/// The factor Q(c) of the genus series at one root class c (coefficients in
/// S); td = precomputed td coefficients covering the ring cap.
template <ring_scalar S>
NilPoly<S> genus_root_factor(GenusKind::Kind k, const NilPoly<S>& c,
                             const std::optional<S>& y, const std::vector<S>& td) {
    const NilPoly<S> t = nil_series(td, c);
    switch (k) {
        case GenusKind::Kind::Todd:
            return t;
        case GenusKind::Kind::Signature: {
            const NilPoly<S> kone(from_rational_as<S>(Rational(1)));
            return t * (kone + nil_exp(-c));
        }
        case GenusKind::Kind::AHat:
            return t * nil_exp(c.scaled(from_rational_as<S>(Rational(-1, 2))));
        case GenusKind::Kind::ChiY: {
            if (!y) throw std::domain_error("genus: chi_y without a y parameter");
            const NilPoly<S> kone(from_rational_as<S>(Rational(1)));
            return t * (kone + nil_exp(-c).scaled(*y));
        }
        default:
            throw std::domain_error("genus: Euler has no root series");
    }
}

/// Equivariant normal-direction factor of the genus series for a weighted
/// line (c, m): the series at the equivariant root with e^{-root} realized
/// as E = exp(-c) u^{-d m}.  For A-hat the symmetric half-weight form
/// 1/(e^{c/2} u^{dm/2} - e^{-c/2} u^{-dm/2}) is used; d must be even.
template <ring_scalar S>
NilPoly<S> genus_normal_factor(GenusKind::Kind k, const NilPoly<S>& c, int m,
                               const std::optional<S>& y, const ChCtx<S>& ctx) {
    if (m == 0)
        throw std::domain_error("genus: zero weight leaked into normal data");
    if (!ctx.u_mono)
        throw std::domain_error("genus: normal factor outside an equivariant context");
    const NilPoly<S> kone(from_rational_as<S>(Rational(1)));
    if (k == GenusKind::Kind::AHat) {
        if ((ctx.d * m) % 2 != 0)
            throw std::domain_error("genus: A-hat needs an even cover index");
        const NilPoly<S> half = c.scaled(from_rational_as<S>(Rational(1, 2)));
        const NilPoly<S> a = nil_exp(half).scaled(ctx.u_mono(ctx.d * m / 2));
        const NilPoly<S> b = nil_exp(-half).scaled(ctx.u_mono(-ctx.d * m / 2));
        return nil_invert(a - b);
    }
    const NilPoly<S> E = nil_exp(-c).scaled(ctx.u_mono(-ctx.d * m));
    switch (k) {
        case GenusKind::Kind::Todd:
            return nil_invert(kone - E);
        case GenusKind::Kind::Signature:
            return (kone + E) * nil_invert(kone - E);
        case GenusKind::Kind::ChiY: {
            if (!y) throw std::domain_error("genus: chi_y without a y parameter");
            return (kone + E.scaled(*y)) * nil_invert(kone - E);
        }
        default:
            throw std::domain_error("genus: Euler has no normal factor");
    }
}

/// Stable tangent atoms of a model: complex models list their signed roots
/// and the trivial-count correction; oriented-only models contribute one
/// trivial atom of half the real rank, so TangentC has rank = real dimension
/// (the only tangent-derived bundle meaningful there).
std::vector<LineAtom> tangent_atoms(const SpaceModel& M);

/// The genus integrand on a model: product of the Q-series factors over the
/// stable roots, negatives inverted, with the trivial-count correction
/// Q(0)^{-t}.  Oriented-only models have trivial Pontrjagin data, so the
/// Signature/A-hat integrand is identically 1.  The same function drives the
/// fixed-component factors of the equivariant engine (applied to Y).
template <ring_scalar S>
NilPoly<S> genus_integrand(const SpaceModel& M, GenusKind::Kind k,
                           const std::optional<S>& y) {
    if (!M.is_complex()) return NilPoly<S>::one(M.ring);
    const RootData& rd = M.roots();
    const auto td = td_coeffs_as<S>(M.ring->cap / 2 + 1);
    NilPoly<S> acc = NilPoly<S>::one(M.ring);
    for (const auto& r : rd.pos) acc *= genus_root_factor<S>(k, lift_cls<S>(r), y, td);
    for (const auto& r : rd.neg)
        acc *= nil_invert(genus_root_factor<S>(k, lift_cls<S>(r), y, td));
    if (rd.trivial > 0) {
        const S u = scalar_inverse(genus_unit<S>(k, y));
        for (int i = 0; i < rd.trivial; ++i) acc = acc.scaled(u);
    }
    return acc;
}

/// Reads off a y-polynomial from a y-series window, insisting that nothing
/// survives beyond max_deg (for chi_y, polynomiality is a theorem).
YPoly y_polynomial(const QSeries<Rational>& s, int max_deg, int window);

/// Genus of a model manifold.
IndexValue index(const SpaceModel& M, const GenusKind& g);

/// Genus twisted by the Chern character of E (q-free bundle expressions;
/// loop-space q-products have their own operations below).
IndexValue twisted_index(const SpaceModel& M, const GenusKind& base, const BundlePtr& E);

/// Chern character of E over M with q-series scalars retained through q^Q.
NilPoly<QSeries<Rational>> chern_character(const SpaceModel& M, const BundlePtr& E,
                                           int Q);

/// Signature of the free loop space: coefficients sign(M, R_m) of the level-2
/// family prod S_{q^n}(TM_C) (x) Lambda_{q^n}(TM_C).
QSeries<Rational> loop_signature(const SpaceModel& M, int Q);

/// Dirac-cusp expansion of the level-2 genus (prefactor normalized to 1):
/// coefficients A-hat(M, .) of prod_{odd} Lambda_{-q^n}(TM_C) (x)
/// prod_{even} S_{q^n}(TM_C).  Requires the spin condition.
QSeries<Rational> dirac_cusp_series(const SpaceModel& M, int Q);

/// Level-N elliptic genus at the cusp i-infinity: coefficients
/// Td_y(M, R_n) at y = -zeta_N from the level-N family.
QSeries<CycNumber> levelN_loop(const SpaceModel& M, int N, int Q);

/// Level-N genus expanded at the cusp indexed by (alpha, beta): the series
/// Td(M, Lambda_y T* (x) K^{alpha/N} (x) level-N family) with
/// y = -zeta_N^beta q~^alpha, graded by q~ = q^{1/N} and retained through
/// q~^Qt.  alpha = 0 recovers the i-infinity expansion supported on
/// exponents divisible by N.
QSeries<CycNumber> alpha_cusp_series(const SpaceModel& M, int N, int alpha, int beta,
                                     int Qt);

/// The finite cusp values of the level-N genus.
struct CuspValues {
    int N = 2;
    std::vector<CycNumber> kroot_values;  // Td(M, K^{alpha/N}), alpha = 1..N-1
    std::vector<CycNumber> chi_y_values;  // Td_y(M), y = -zeta_N^beta, beta = 1..N-1
};
CuspValues cusp_values(const SpaceModel& M, int N);

}  // namespace genera
