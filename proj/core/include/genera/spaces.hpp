/// @file spaces.hpp
/// @brief Model manifolds: truncated cohomology ring, integration functional,
/// and tangent data (characteristic roots or oriented-only Euler data).

#pragma once

#include <genera/nilpoly.hpp>

#include <string>
#include <variant>
#include <vector>

namespace genera {

using Cls = NilPoly<Rational>;  // an ordinary (rational) cohomology class

/// Embeds a rational cohomology class into a richer scalar domain.
template <ring_scalar S>
NilPoly<S> lift_cls(const Cls& c) {
    return c.map_scalars([](const Rational& q) { return from_rational_as<S>(q); });
}

/// Stable characteristic roots of a complex model: the tangent bundle
/// satisfies TM (+) C^trivial = (+)positive (-) (+)negative as a virtual sum
/// of line bundles with the listed degree-2 first Chern classes.
struct RootData {
    std::vector<Cls> pos;
    std::vector<Cls> neg;  // virtual subtrahend (empty for honest models)
    int trivial = 0;       // trivial summand count
};

/// Oriented-only model: total Pontrjagin class restricted to 1; only the
/// euler class carries information.
struct OrientedData {
    Cls euler;
};

struct SpaceModel {
    std::string name;
    int real_dim = 0;
    NilRingPtr ring;
    std::vector<int> top_monomial;  // exponent vector of the distinguished top monomial
    Rational integrate_scale = Rational(1);
    std::variant<RootData, OrientedData> tangent;

    bool is_complex() const { return std::holds_alternative<RootData>(tangent); }
    const RootData& roots() const { return std::get<RootData>(tangent); }
    const OrientedData& oriented() const { return std::get<OrientedData>(tangent); }

    /// Linear functional: coefficient of the top monomial times the scale.
    /// Vanishes on all lower-degree monomials by gradedness.
    template <ring_scalar S>
    S integrate(const NilPoly<S>& phi) const {
        return phi.coeff(top_monomial) * from_rational_as<S>(integrate_scale);
    }
};

/// The point: ring with no generators, integrate = identity on constants.
SpaceModel point();

/// Complex projective space CP^n: ring Q[x]/(x^{n+1}), integrate(x^n) = 1,
/// stable roots (n+1) copies of x, one trivial summand.
SpaceModel cp(int n);

/// Kunneth product; both factors complex or both oriented-only.
SpaceModel product(const SpaceModel& A, const SpaceModel& B);

/// Virtual model of a degree-d hypersurface in CP^{m+1}: classes live in the
/// ambient ring Q[x]/(x^{m+1}); integrate(phi) = d * [x^m] phi.
SpaceModel hypersurface(int m, int d);

/// Even-dimensional sphere S^{2n}, oriented-only with trivial Pontrjagin
/// class and euler class 2u.
SpaceModel even_sphere(int n);

/// First Chern class of the (virtual) tangent bundle of a complex model.
Cls c1(const SpaceModel& M);

/// Top Chern class (= Euler class) of a complex model's tangent bundle.
Cls c_top(const SpaceModel& M);

/// Euler characteristic: integrate(c_top) for complex models, integrate of
/// the euler class for oriented-only models.
Rational euler_characteristic(const SpaceModel& M);

/// True iff every integer coordinate of c1 in the degree-2 generator basis is
/// divisible by N.  N = 2 doubles as the spin test for complex models.
/// Rejects oriented-only models.
bool is_c1_divisible(const SpaceModel& M, int N);

/// Pretty printer for degree-2 classes in diagnostics ("3x", "2x + 3y").
std::string degree2_class_str(const SpaceModel& M, const Cls& c);

}  // namespace genera
