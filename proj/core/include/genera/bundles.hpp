/// @file bundles.hpp
/// @brief Bundle expressions and their Chern characters.
///
/// A BundleExpr is an abstract syntax tree over tangent-derived bundles, line
/// bundles, canonical-bundle roots, lambda-ring operations, and the infinite
/// q-products of loop-space genera.  Evaluation is generic over a scalar ring
/// S and a ChCtx<S> that says where the computation happens: which NilRing,
/// which tangent atoms (stable roots of the model, or the restriction to one
/// fixed component with circle weights), how a circle weight becomes a power
/// of u, and how the formal monomials q, y embed into S.
///
/// The same evaluator therefore computes ordinary Chern characters (weights
/// all zero), equivariant characters (scalars rational functions in u), and
/// loop-space q-expansions (scalars truncated q-series), with no duplicated
/// bundle logic.

#pragma once

#include <genera/qseries.hpp>
#include <genera/spaces.hpp>

#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace genera {

/// Formal monomial parameter t = sign * q^{q_exp} * y^{y_exp}, with
/// sign in {+1, -1}.
struct TParam {
    int sign = 1;
    int q_exp = 0;
    int y_exp = 0;
};

/// One (virtual) line-bundle atom: multiplicity, first Chern class in the
/// evaluation ring, circle weight in lambda units (u-exponent = d * weight).
struct LineAtom {
    int mult = 1;
    Cls cls;
    Rational weight = Rational(0);
};

struct BundleExpr;
using BundlePtr = std::shared_ptr<const BundleExpr>;

/// The named infinite q-product families of the loop-space genera.
enum class QFamily {
    Level2,    // prod_n S_{q^n}(TM_C) (x) Lambda_{q^n}(TM_C)
    DiracCusp, // prod_{n odd} Lambda_{-q^n}(TM_C) (x) prod_{n even} S_{q^n}(TM_C)
    LevelN     // prod_n Lambda_{yq^n}(T*) (x) Lambda_{y^{-1}q^n}(T) (x) S_{q^n}(T+T*)
};

struct BundleExpr {
    enum class Kind {
        Tangent,       // TM as a complex bundle
        TangentDual,   // T*M
        TangentC,      // TM tensor C = TM + T*M
        Line,          // line bundle, class = line coefficients over deg-2 gens
        KRoot,         // K^{alpha/N}, K = det T*M
        Sum,           // n-ary direct sum
        Diff,          // virtual difference args[0] - args[1]
        Tensor,        // n-ary tensor product
        ExtPower,      // Lambda^power
        SymPower,      // S^power
        LambdaSeries,  // Lambda_t = sum_i Lambda^i t^i at the monomial t
        SymSeries,     // S_t = sum_i S^i t^i at the monomial t
        QProduct       // one of the QFamily products over n >= 1
    };

    Kind kind = Kind::Tangent;
    std::vector<BundlePtr> args;
    std::vector<Rational> line;  // Line: coefficients over degree-2 generators
    int N = 0;                   // KRoot and LevelN family
    int alpha = 0;               // KRoot
    int power = 0;               // ExtPower / SymPower
    TParam t;                    // LambdaSeries / SymSeries
    QFamily family = QFamily::Level2;
};

inline BundlePtr bundle_tangent() {
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::Tangent;
    return e;
}
inline BundlePtr bundle_tangent_dual() {
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::TangentDual;
    return e;
}
inline BundlePtr bundle_tangent_c() {
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::TangentC;
    return e;
}
inline BundlePtr bundle_line(std::vector<Rational> coeffs) {
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::Line;
    e->line = std::move(coeffs);
    return e;
}
inline BundlePtr bundle_kroot(int N, int alpha) {
    if (N < 2) throw std::domain_error("bundle: KRoot needs N >= 2");
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::KRoot;
    e->N = N;
    e->alpha = alpha;
    return e;
}
inline BundlePtr bundle_sum(std::vector<BundlePtr> args) {
    if (args.empty()) throw std::domain_error("bundle: empty sum");
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::Sum;
    e->args = std::move(args);
    return e;
}
inline BundlePtr bundle_diff(BundlePtr a, BundlePtr b) {
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::Diff;
    e->args = {std::move(a), std::move(b)};
    return e;
}
inline BundlePtr bundle_tensor(std::vector<BundlePtr> args) {
    if (args.empty()) throw std::domain_error("bundle: empty tensor");
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::Tensor;
    e->args = std::move(args);
    return e;
}
inline BundlePtr bundle_ext_power(int i, BundlePtr arg) {
    if (i < 0) throw std::domain_error("bundle: negative exterior power");
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::ExtPower;
    e->power = i;
    e->args = {std::move(arg)};
    return e;
}
inline BundlePtr bundle_sym_power(int i, BundlePtr arg) {
    if (i < 0) throw std::domain_error("bundle: negative symmetric power");
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::SymPower;
    e->power = i;
    e->args = {std::move(arg)};
    return e;
}
inline BundlePtr bundle_lambda_series(TParam t, BundlePtr arg) {
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::LambdaSeries;
    e->t = t;
    e->args = {std::move(arg)};
    return e;
}
inline BundlePtr bundle_sym_series(TParam t, BundlePtr arg) {
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::SymSeries;
    e->t = t;
    e->args = {std::move(arg)};
    return e;
}
inline BundlePtr bundle_qproduct(QFamily family, int N = 0) {
    if (family == QFamily::LevelN && N < 2)
        throw std::domain_error("bundle: level-N product needs N >= 2");
    auto e = std::make_shared<BundleExpr>();
    e->kind = BundleExpr::Kind::QProduct;
    e->family = family;
    e->N = N;
    return e;
}

/// True when the expression contains a q-parameter or q-product anywhere;
/// such bundles only make sense inside a q-series computation.
inline bool bundle_uses_q(const BundleExpr& e) {
    if (e.kind == BundleExpr::Kind::QProduct) return true;
    if ((e.kind == BundleExpr::Kind::LambdaSeries ||
         e.kind == BundleExpr::Kind::SymSeries) &&
        e.t.q_exp != 0)
        return true;
    for (const auto& a : e.args)
        if (bundle_uses_q(*a)) return true;
    return false;
}

/// True when the expression mentions the formal y parameter; such bundles
/// need a context that binds y to a value.
inline bool bundle_uses_y(const BundleExpr& e) {
    if (e.kind == BundleExpr::Kind::QProduct) return e.family == QFamily::LevelN;
    if ((e.kind == BundleExpr::Kind::LambdaSeries ||
         e.kind == BundleExpr::Kind::SymSeries) &&
        e.t.y_exp != 0)
        return true;
    for (const auto& a : e.args)
        if (bundle_uses_y(*a)) return true;
    return false;
}

/// Evaluation context: where and over which scalars a Chern character is
/// computed.  Optional hooks are null when the capability is absent; using
/// an absent capability is a precondition violation (domain_error).
template <ring_scalar S>
struct ChCtx {
    NilRingPtr ring;                // evaluation ring (model's or component's)
    std::vector<LineAtom> tangent;  // stable tangent atoms at this place
    int d = 1;                      // cover index: u-exponent = d * weight

    std::function<S(int)> u_mono;                // u^k as a scalar
    std::function<S(const TParam&)> t_val;       // monomial t as a scalar
    std::function<int(const TParam&)> t_degree;  // series grading degree of t
    int q_window = -1;                           // retained series order, -1 = no q

    std::function<LineAtom(int, int)> kroot;  // (N, alpha) -> atom
    std::function<LineAtom(const std::vector<Rational>&)> line_atom;
};

inline std::vector<LineAtom> atoms_dual(std::vector<LineAtom> v) {
    for (auto& a : v) {
        a.cls = -a.cls;
        a.weight = -a.weight;
    }
    return v;
}

/// The line-sum fragment: Tangent-derived bundles, Line, KRoot, and their
/// sums, differences, and tensor products reduce to a list of weighted line
/// atoms.  Lambda-ring nodes do not; they return nullopt here and are only
/// legal as outermost operations on a line-sum argument.
template <ring_scalar S>
std::optional<std::vector<LineAtom>> bundle_atoms(const BundleExpr& e,
                                                  const ChCtx<S>& ctx) {
    using K = BundleExpr::Kind;
    switch (e.kind) {
        case K::Tangent:
            return ctx.tangent;
        case K::TangentDual:
            return atoms_dual(ctx.tangent);
        case K::TangentC: {
            std::vector<LineAtom> v = ctx.tangent;
            std::vector<LineAtom> w = atoms_dual(ctx.tangent);
            v.insert(v.end(), w.begin(), w.end());
            return v;
        }
        case K::Line:
            if (!ctx.line_atom)
                throw std::domain_error("bundle: Line has no meaning in this context");
            return std::vector<LineAtom>{ctx.line_atom(e.line)};
        case K::KRoot:
            if (!ctx.kroot)
                throw std::domain_error("bundle: KRoot has no meaning in this context");
            return std::vector<LineAtom>{ctx.kroot(e.N, e.alpha)};
        case K::Sum: {
            std::vector<LineAtom> v;
            for (const auto& a : e.args) {
                auto w = bundle_atoms(*a, ctx);
                if (!w) return std::nullopt;
                v.insert(v.end(), w->begin(), w->end());
            }
            return v;
        }
        case K::Diff: {
            auto va = bundle_atoms(*e.args[0], ctx);
            auto vb = bundle_atoms(*e.args[1], ctx);
            if (!va || !vb) return std::nullopt;
            for (auto& a : *vb) {
                a.mult = -a.mult;
                va->push_back(a);
            }
            return va;
        }
        case K::Tensor: {
            auto acc = bundle_atoms(*e.args[0], ctx);
            if (!acc) return std::nullopt;
            for (size_t k = 1; k < e.args.size(); ++k) {
                auto w = bundle_atoms(*e.args[k], ctx);
                if (!w) return std::nullopt;
                std::vector<LineAtom> next;
                next.reserve(acc->size() * w->size());
                for (const auto& a : *acc)
                    for (const auto& b : *w)
                        next.push_back(LineAtom{a.mult * b.mult, a.cls + b.cls,
                                                a.weight + b.weight});
                acc = std::move(next);
            }
            return acc;
        }
        default:
            return std::nullopt;
    }
}

/// Chern character of one line atom (multiplicity NOT applied):
/// exp(class) * u^{d * weight}.
template <ring_scalar S>
NilPoly<S> atom_ch(const LineAtom& a, const ChCtx<S>& ctx) {
    NilPoly<S> e = nil_exp(
        a.cls.map_scalars([](const Rational& c) { return from_rational_as<S>(c); }));
    if (!a.weight.is_zero()) {
        if (!ctx.u_mono)
            throw std::domain_error("bundle: weighted line outside an equivariant context");
        const Rational ue = a.weight * Rational(ctx.d);
        if (!ue.is_integer())
            throw std::domain_error(
                "bundle: cover index does not clear a fractional weight");
        e = e.scaled(ctx.u_mono(static_cast<int>(ue.numerator().get_si())));
    }
    return e;
}

namespace detail {

template <ring_scalar S>
NilPoly<S> ch_of_atoms(const std::vector<LineAtom>& atoms, const ChCtx<S>& ctx) {
    NilPoly<S> acc;
    for (const auto& a : atoms)
        acc += atom_ch(a, ctx).scaled(from_rational_as<S>(Rational(a.mult)));
    return acc;
}

/// ch(Lambda_t E) = prod (1 + t u_j)^{m_j}, ch(S_t E) = prod (1 - t u_j)^{-m_j},
/// with t already a scalar (a q/y monomial value).
template <ring_scalar S>
NilPoly<S> lambda_sym_of_atoms(bool lambda, const S& tv,
                               const std::vector<LineAtom>& atoms,
                               const ChCtx<S>& ctx) {
    const NilPoly<S> kone(from_rational_as<S>(Rational(1)));
    NilPoly<S> acc = kone;
    for (const auto& a : atoms) {
        NilPoly<S> u = atom_ch(a, ctx).scaled(tv);
        NilPoly<S> f = lambda ? (kone + u) : (kone - u);
        const int m = lambda ? a.mult : -a.mult;
        NilPoly<S> g = (m > 0) ? f : nil_invert(f);
        for (int k = 0; k < std::abs(m); ++k) acc *= g;
    }
    return acc;
}

/// [t^i] prod (1 + t u_j)^{m_j} (lambda) or [t^i] prod (1 - t u_j)^{-m_j}
/// (sym), computed in a t-truncated auxiliary series with NilPoly
/// coefficients.  This is the lambda-ring extension of Ext/Sym powers to
/// virtual bundles.
template <ring_scalar S>
NilPoly<S> power_of_atoms(bool lambda, int i, const std::vector<LineAtom>& atoms,
                          const ChCtx<S>& ctx) {
    using NP = NilPoly<S>;
    using TS = QSeries<NP>;
    const NP kone(from_rational_as<S>(Rational(1)));
    TS acc = TS::constant('t', kone).as_truncated(i);
    for (const auto& a : atoms) {
        const NP u = atom_ch(a, ctx);
        const NP lin = lambda ? u : -u;
        TS factor = (TS::constant('t', kone) + TS::monomial('t', 1, lin)).as_truncated(i);
        const int m = lambda ? a.mult : -a.mult;
        const TS f = (m > 0) ? factor : factor.inverse();
        for (int k = 0; k < std::abs(m); ++k) acc *= f;
    }
    return acc.coeff(i);
}

struct QFactor {
    bool lambda;
    TParam t;
    int arg;  // 0 = Tangent, 1 = TangentDual, 2 = TangentC, 3 = T + T*
};

inline std::vector<QFactor> family_factors(QFamily f, int N, int n) {
    switch (f) {
        case QFamily::Level2:
            return {{false, TParam{1, n, 0}, 2}, {true, TParam{1, n, 0}, 2}};
        case QFamily::DiracCusp:
            if (n % 2 == 1) return {{true, TParam{-1, n, 0}, 2}};
            return {{false, TParam{1, n, 0}, 2}};
        case QFamily::LevelN:
            (void)N;
            return {{true, TParam{1, n, 1}, 1},
                    {true, TParam{1, n, -1}, 0},
                    {false, TParam{1, n, 0}, 3}};
    }
    throw std::logic_error("bundle: unknown q-product family");
}

}  // namespace detail

template <ring_scalar S>
NilPoly<S> ch_eval(const BundleExpr& e, const ChCtx<S>& ctx) {
    using K = BundleExpr::Kind;
    switch (e.kind) {
        case K::Tangent:
        case K::TangentDual:
        case K::TangentC:
        case K::Line:
        case K::KRoot:
            return detail::ch_of_atoms(*bundle_atoms(e, ctx), ctx);

        case K::Sum: {
            NilPoly<S> acc;
            for (const auto& a : e.args) acc += ch_eval(*a, ctx);
            return acc;
        }
        case K::Diff:
            return ch_eval(*e.args[0], ctx) - ch_eval(*e.args[1], ctx);
        case K::Tensor: {
            NilPoly<S> acc = ch_eval(*e.args[0], ctx);
            for (size_t k = 1; k < e.args.size(); ++k) acc *= ch_eval(*e.args[k], ctx);
            return acc;
        }

        case K::ExtPower:
        case K::SymPower: {
            auto atoms = bundle_atoms(*e.args[0], ctx);
            if (!atoms)
                throw std::domain_error(
                    "bundle: ext/sym power requires a line-sum argument");
            return detail::power_of_atoms(e.kind == K::ExtPower, e.power, *atoms, ctx);
        }

        case K::LambdaSeries:
        case K::SymSeries: {
            auto atoms = bundle_atoms(*e.args[0], ctx);
            if (!atoms)
                throw std::domain_error(
                    "bundle: lambda/sym series requires a line-sum argument");
            if (!ctx.t_val)
                throw std::domain_error(
                    "bundle: series parameter outside a q/y context");
            return detail::lambda_sym_of_atoms(e.kind == K::LambdaSeries,
                                               ctx.t_val(e.t), *atoms, ctx);
        }

        case K::QProduct: {
            if (!ctx.t_val || !ctx.t_degree || ctx.q_window < 0)
                throw std::domain_error("bundle: q-product outside a q-series context");
            const NilPoly<S> kone(from_rational_as<S>(Rational(1)));
            NilPoly<S> acc = kone;
            const std::vector<LineAtom> tan = ctx.tangent;
            const std::vector<LineAtom> dual = atoms_dual(tan);
            std::vector<LineAtom> both = tan;
            both.insert(both.end(), dual.begin(), dual.end());
            const std::vector<LineAtom> tc = both;  // T+T* = T_C atomwise
            for (int n = 1;; ++n) {
                const auto facs = detail::family_factors(e.family, e.N, n);
                int mindeg = ctx.t_degree(facs[0].t);
                for (const auto& f : facs) mindeg = std::min(mindeg, ctx.t_degree(f.t));
                if (mindeg > ctx.q_window) break;
                for (const auto& f : facs) {
                    if (ctx.t_degree(f.t) > ctx.q_window) continue;
                    const std::vector<LineAtom>& atoms =
                        f.arg == 0 ? tan : (f.arg == 1 ? dual : (f.arg == 2 ? tc : both));
                    acc *= detail::lambda_sym_of_atoms(f.lambda, ctx.t_val(f.t), atoms,
                                                       ctx);
                }
            }
            return acc;
        }
    }
    throw std::logic_error("bundle: unknown expression kind");
}

}  // namespace genera
