/// @file genus.cpp
/// @brief Genera, twisted indices, and loop-space q-expansions.

#include <genera/genus.hpp>

#include <cstdlib>
#include <string>
#include <utility>

namespace genera {

std::string GenusKind::name() const {
    switch (kind) {
        case Kind::Euler:
            return "euler";
        case Kind::Signature:
            return "signature";
        case Kind::AHat:
            return "ahat";
        case Kind::Todd:
            return "todd";
        case Kind::ChiY:
            return "chi_y";
    }
    throw std::logic_error("genus: unknown kind");
}

std::string index_value_str(const IndexValue& v) {
    return std::visit([](const auto& x) { return x.str(); }, v);
}

std::vector<Rational> td_series(int order) {
    if (order < 0) throw std::domain_error("td_series: negative order");
    // td(x) = x / (1 - e^{-x}); invert the entire series sum (-x)^k / (k+1)!.
    std::vector<Rational> g(order + 1);
    for (int k = 0; k <= order; ++k) {
        const Rational c = Rational(1) / factorial(k + 1);
        g[k] = (k % 2 == 0) ? c : -c;
    }
    const auto inv = QSeries<Rational>::truncated('x', std::move(g)).inverse();
    std::vector<Rational> out(order + 1);
    for (int k = 0; k <= order; ++k) out[k] = inv.coeff(k);
    return out;
}

std::vector<LineAtom> tangent_atoms(const SpaceModel& M) {
    std::vector<LineAtom> v;
    if (M.is_complex()) {
        const RootData& rd = M.roots();
        for (const auto& r : rd.pos) v.push_back(LineAtom{1, r, Rational(0)});
        for (const auto& r : rd.neg) v.push_back(LineAtom{-1, r, Rational(0)});
        if (rd.trivial > 0) v.push_back(LineAtom{-rd.trivial, Cls(), Rational(0)});
    } else if (M.real_dim > 0) {
        // Trivial Pontrjagin data: TM is stably trivial, realized as
        // real_dim/2 trivial complex lines so TangentC has rank = real_dim.
        v.push_back(LineAtom{M.real_dim / 2, Cls(), Rational(0)});
    }
    return v;
}

namespace {

std::vector<size_t> degree2_gens(const SpaceModel& M) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < M.ring->gens.size(); ++i)
        if (M.ring->gens[i].degree == 2) idx.push_back(i);
    return idx;
}

/// Context over the model itself: tangent atoms are the stable roots, all
/// circle weights zero, Line/KRoot resolve against the model's ring.
template <ring_scalar S>
ChCtx<S> base_ctx(const SpaceModel& M) {
    ChCtx<S> ctx;
    ctx.ring = M.ring;
    ctx.tangent = tangent_atoms(M);
    ctx.line_atom = [M](const std::vector<Rational>& coeffs) {
        const auto idx = degree2_gens(M);
        if (coeffs.size() != idx.size())
            throw std::domain_error("bundle: Line expects " + std::to_string(idx.size()) +
                                    " coefficient(s) over the degree-2 generators");
        Cls cls;
        for (size_t i = 0; i < idx.size(); ++i)
            cls += Cls::generator(M.ring, idx[i]).scaled(coeffs[i]);
        return LineAtom{1, cls, Rational(0)};
    };
    ctx.kroot = [M](int N, int alpha) {
        if (!M.is_complex())
            throw std::domain_error("bundle: canonical roots need a complex model");
        if (!is_c1_divisible(M, N))
            throw std::domain_error("level condition failed: c1 = " +
                                    degree2_class_str(M, c1(M)) +
                                    " is not divisible by " + std::to_string(N));
        return LineAtom{1, c1(M).scaled(Rational(-alpha, N)), Rational(0)};
    };
    return ctx;
}

/// Context for ordinary q-expansions: t-monomials carry q only, values are
/// rational q-series truncated at Q.
ChCtx<QSeries<Rational>> q_ctx(const SpaceModel& M, int Q) {
    auto ctx = base_ctx<QSeries<Rational>>(M);
    ctx.q_window = Q;
    ctx.t_val = [Q](const TParam& t) {
        if (t.y_exp != 0)
            throw std::domain_error("bundle: y-parameter requires a bound y");
        return QSeries<Rational>::monomial('q', t.q_exp, Rational(t.sign)).as_truncated(Q);
    };
    ctx.t_degree = [](const TParam& t) { return t.q_exp; };
    return ctx;
}

void require_levelN(const SpaceModel& M, int N) {
    if (!M.is_complex())
        throw std::domain_error("genus: level-N genera require a complex model");
    if (!is_c1_divisible(M, N))
        throw std::domain_error("level condition failed: c1 = " +
                                degree2_class_str(M, c1(M)) + " is not divisible by " +
                                std::to_string(N));
}

}  // namespace

YPoly y_polynomial(const QSeries<Rational>& s, int max_deg, int window) {
    YPoly out('y');
    const int top = s.exact() ? window : s.order();
    for (int k = 0; k <= top; ++k) {
        const Rational c = s.coeff(k);
        if (c.is_zero()) continue;
        if (k > max_deg)
            throw std::logic_error("genus: y-series tail beyond the expected degree");
        out = out + YPoly::monomial('y', k, c);
    }
    return out;
}

IndexValue index(const SpaceModel& M, const GenusKind& g) {
    if (g.kind == GenusKind::Kind::Euler) return euler_characteristic(M);
    return twisted_index(M, g, nullptr);
}

IndexValue twisted_index(const SpaceModel& M, const GenusKind& base,
                         const BundlePtr& E) {
    using K = GenusKind::Kind;
    if (base.kind == K::Euler)
        throw std::domain_error("genus: the Euler characteristic does not twist");
    if ((base.kind == K::Todd || base.kind == K::ChiY) && !M.is_complex())
        throw std::domain_error("genus: " + base.name() + " requires a complex model");
    if (E && bundle_uses_q(*E))
        throw std::domain_error("genus: q-products require a loop-space operation");

    if (base.kind == K::ChiY && base.y_bound) {
        const CycNumber yb = *base.y_bound;
        if ((CycNumber(1) + yb).is_zero())
            throw std::domain_error(
                "genus: chi_y at y = -1 degenerates; use the Euler genus");
        auto ctx = base_ctx<CycNumber>(M);
        ctx.t_val = [yb](const TParam& t) {
            if (t.q_exp != 0)
                throw std::domain_error("bundle: q-parameter outside a q-series context");
            return CycNumber(t.sign) * cyc_pow(yb, t.y_exp);
        };
        const std::optional<CycNumber> y = yb;
        NilPoly<CycNumber> v = genus_integrand<CycNumber>(M, base.kind, y);
        if (E) v *= ch_eval(*E, ctx);
        return M.integrate(v);
    }

    if (E && bundle_uses_y(*E))
        throw std::domain_error("bundle: y-parameter requires a bound y");

    if (base.kind == K::ChiY) {
        using QS = QSeries<Rational>;
        const int W = M.real_dim + 2;
        auto ctx = base_ctx<QS>(M);
        const std::optional<QS> y =
            QS::monomial('y', 1, Rational(1)).as_truncated(W);
        NilPoly<QS> v = genus_integrand<QS>(M, base.kind, y);
        if (E) v *= ch_eval(*E, ctx);
        return y_polynomial(M.integrate(v), M.real_dim / 2, W);
    }

    auto ctx = base_ctx<Rational>(M);
    NilPoly<Rational> v = genus_integrand<Rational>(M, base.kind, std::nullopt);
    if (E) v *= ch_eval(*E, ctx);
    return M.integrate(v);
}

NilPoly<QSeries<Rational>> chern_character(const SpaceModel& M, const BundlePtr& E,
                                           int Q) {
    if (!E) throw std::invalid_argument("chern_character: null bundle expression");
    if (Q < 0) throw std::domain_error("chern_character: negative q-order");
    const auto ctx = q_ctx(M, Q);
    return ch_eval(*E, ctx);
}

QSeries<Rational> loop_signature(const SpaceModel& M, int Q) {
    if (Q < 0) throw std::domain_error("loop_signature: negative q-order");
    const auto ctx = q_ctx(M, Q);
    NilPoly<QSeries<Rational>> v = genus_integrand<QSeries<Rational>>(
        M, GenusKind::Kind::Signature, std::nullopt);
    v *= ch_eval(*bundle_qproduct(QFamily::Level2), ctx);
    return M.integrate(v).as_truncated(Q);
}

QSeries<Rational> dirac_cusp_series(const SpaceModel& M, int Q) {
    if (Q < 0) throw std::domain_error("dirac_cusp_series: negative q-order");
    if (M.is_complex() && !is_c1_divisible(M, 2))
        throw std::domain_error("spin condition failed: c1 = " +
                                degree2_class_str(M, c1(M)));
    const auto ctx = q_ctx(M, Q);
    NilPoly<QSeries<Rational>> v =
        genus_integrand<QSeries<Rational>>(M, GenusKind::Kind::AHat, std::nullopt);
    v *= ch_eval(*bundle_qproduct(QFamily::DiracCusp), ctx);
    return M.integrate(v).as_truncated(Q);
}

QSeries<CycNumber> levelN_loop(const SpaceModel& M, int N, int Q) {
    if (N < 2) throw std::domain_error("levelN_loop: N must be >= 2");
    if (Q < 0) throw std::domain_error("levelN_loop: negative q-order");
    require_levelN(M, N);
    using QC = QSeries<CycNumber>;
    auto ctx = base_ctx<QC>(M);
    ctx.q_window = Q;
    const CycNumber yv = CycNumber::minus_zeta_pow(N, 1);
    ctx.t_val = [Q, yv](const TParam& t) {
        const CycNumber c = CycNumber(t.sign) * cyc_pow(yv, t.y_exp);
        return QC::monomial('q', t.q_exp, c).as_truncated(Q);
    };
    ctx.t_degree = [](const TParam& t) { return t.q_exp; };
    // Td_y with y bound to -zeta_N: the chi_y integrand at the constant y.
    const std::optional<QC> y = QC::constant('q', yv).as_truncated(Q);
    NilPoly<QC> v = genus_integrand<QC>(M, GenusKind::Kind::ChiY, y);
    v *= ch_eval(*bundle_qproduct(QFamily::LevelN, N), ctx);
    return M.integrate(v).as_truncated(Q);
}

QSeries<CycNumber> alpha_cusp_series(const SpaceModel& M, int N, int alpha, int beta,
                                     int Qt) {
    if (N < 2) throw std::domain_error("alpha_cusp_series: N must be >= 2");
    if (Qt < 0) throw std::domain_error("alpha_cusp_series: negative q-order");
    if (alpha < 0 || alpha >= N || beta < 0 || beta >= N)
        throw std::domain_error("alpha_cusp_series: cusp index out of range");
    if (alpha == 0 && beta == 0)
        throw std::domain_error("alpha_cusp_series: (0, 0) does not index a cusp");
    require_levelN(M, N);
    using QC = QSeries<CycNumber>;
    auto ctx = base_ctx<QC>(M);
    ctx.q_window = Qt;
    // y = -zeta_N^beta * qt^alpha with qt = q^{1/N}; a monomial q^a y^b
    // grades as qt^{N a + alpha b}.
    const CycNumber zc = CycNumber::minus_zeta_pow(N, beta);
    ctx.t_val = [Qt, N, alpha, zc](const TParam& t) {
        const int e = N * t.q_exp + alpha * t.y_exp;
        if (e < 0)
            throw std::domain_error(
                "alpha_cusp_series: negative q-power in the expansion");
        const CycNumber c = CycNumber(t.sign) * cyc_pow(zc, t.y_exp);
        return QC::monomial('q', e, c).as_truncated(Qt);
    };
    ctx.t_degree = [N, alpha](const TParam& t) { return N * t.q_exp + alpha * t.y_exp; };

    std::vector<BundlePtr> parts;
    parts.push_back(bundle_lambda_series(TParam{1, 0, 1}, bundle_tangent_dual()));
    if (alpha != 0) parts.push_back(bundle_kroot(N, alpha));
    parts.push_back(bundle_qproduct(QFamily::LevelN, N));
    NilPoly<QC> v =
        genus_integrand<QC>(M, GenusKind::Kind::Todd, std::nullopt);
    v *= ch_eval(*bundle_tensor(std::move(parts)), ctx);
    return M.integrate(v).as_truncated(Qt);
}

CuspValues cusp_values(const SpaceModel& M, int N) {
    if (N < 2) throw std::domain_error("cusp_values: N must be >= 2");
    require_levelN(M, N);
    CuspValues out;
    out.N = N;
    for (int a = 1; a < N; ++a) {
        const IndexValue v = twisted_index(M, GenusKind::todd(), bundle_kroot(N, a));
        out.kroot_values.push_back(CycNumber(std::get<Rational>(v)));
    }
    for (int b = 1; b < N; ++b) {
        const IndexValue v =
            index(M, GenusKind::chi_y_at(CycNumber::minus_zeta_pow(N, b)));
        out.chi_y_values.push_back(std::get<CycNumber>(v));
    }
    return out;
}

}  // namespace genera
