/// @file equivariant.cpp
/// @brief Fixed-point engine implementation.

#include <genera/equivariant.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace genera {

namespace {

Rational k_det_weight(const FixedComponent& F) {
    // Weight of K = det T* at Y: minus the sum of all tangent weights; the
    // component's own tangent directions carry weight 0 by definition.
    long s = 0;
    for (const auto& nl : F.normal) s += nl.m;
    return Rational(-s);
}

Cls normal_class_sum(const FixedComponent& F) {
    Cls c;
    for (const auto& nl : F.normal) c += nl.cls;
    return c;
}

/// Chern-character context at one fixed component: tangent atoms are the
/// component's stable roots plus the weighted normal lines; Line and KRoot
/// resolve through the restriction data (KRoot with the normalized lift).
template <ring_scalar S>
ChCtx<S> comp_ctx(const CircleAction& A, size_t j, std::function<S(int)> u_mono) {
    const FixedComponent& F = A.components[j];
    ChCtx<S> ctx;
    ctx.ring = F.Y.ring;
    ctx.tangent = tangent_atoms(F.Y);
    for (const auto& nl : F.normal)
        ctx.tangent.push_back(LineAtom{1, nl.cls, Rational(nl.m)});
    ctx.d = A.d;
    ctx.u_mono = std::move(u_mono);
    ctx.line_atom = [F](const std::vector<Rational>& coeffs) {
        if (coeffs.size() != F.lines.size())
            throw std::domain_error("bundle: Line expects " +
                                    std::to_string(F.lines.size()) +
                                    " coefficient(s) over the ambient generators");
        Cls cls;
        Rational w(0);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            cls += F.lines[i].cls.scaled(coeffs[i]);
            w += coeffs[i] * F.lines[i].weight;
        }
        return LineAtom{1, cls, w};
    };
    const SpaceModel M = A.M;
    const Rational kw0 = k_det_weight(A.components[0]);
    const Rational kwY = k_det_weight(F);
    ctx.kroot = [M, F, kw0, kwY](int N, int alpha) {
        if (!is_c1_divisible(M, N))
            throw std::domain_error("level condition failed: c1 = " +
                                    degree2_class_str(M, c1(M)) +
                                    " is not divisible by " + std::to_string(N));
        // K restricted to Y: class -(c1(Y) + sum of normal classes); weight
        // kwY, normalized by the global offset fixing component 0 at 0.
        const Cls cls = (c1(F.Y) + normal_class_sum(F)).scaled(Rational(-alpha, N));
        const Rational w = (kwY - kw0) * Rational(alpha, 1) / Rational(N);
        return LineAtom{1, cls, w};
    };
    return ctx;
}

/// One component's genus datum: Y's own integrand, one equivariant factor
/// per normal line, the twist's equivariant Chern character, integrated.
template <ring_scalar S>
S genus_datum(const FixedComponent& F, GenusKind::Kind k, const std::optional<S>& y,
              const ChCtx<S>& ctx, const BundlePtr& twist) {
    NilPoly<S> v = genus_integrand<S>(F.Y, k, y);
    for (const auto& nl : F.normal)
        v *= genus_normal_factor<S>(k, lift_cls<S>(nl.cls), nl.m, y, ctx);
    if (twist) v *= ch_eval(*twist, ctx);
    return F.Y.integrate(v);
}

RFq rfq_u(int k) { return RFq::monomial('u', k, Rational(1)); }
RFc rfc_u(int k) { return RFc::monomial('u', k, CycNumber(1)); }

void check_genus_spec(const CircleAction& A, const EquivSpec& spec) {
    using K = GenusKind::Kind;
    const GenusKind& g = spec.genus;
    if ((g.kind == K::Todd || g.kind == K::ChiY) && !A.M.is_complex())
        throw std::domain_error("genus: " + g.name() + " requires a complex model");
    if (spec.twist && g.kind == K::Euler)
        throw std::domain_error("genus: the Euler characteristic does not twist");
    if (spec.twist && bundle_uses_q(*spec.twist))
        throw std::domain_error("genus: q-products require a loop-space operation");
    if (spec.twist && bundle_uses_y(*spec.twist) &&
        !(g.kind == K::ChiY && g.y_bound))
        throw std::domain_error("bundle: y-parameter requires a bound y");
}

EquivValue plain_datum(const CircleAction& A, size_t j, const EquivSpec& spec) {
    using K = GenusKind::Kind;
    const GenusKind& g = spec.genus;
    const FixedComponent& F = A.components[j];
    check_genus_spec(A, spec);

    if (g.kind == K::Euler) {
        // Lefschetz number of the de Rham complex: chi(Y) per component.
        return RFq::constant('u', euler_characteristic(F.Y));
    }
    if (g.kind == K::ChiY && g.y_bound) {
        const CycNumber yb = *g.y_bound;
        if ((CycNumber(1) + yb).is_zero())
            throw std::domain_error(
                "genus: chi_y at y = -1 degenerates; use the Euler genus");
        auto ctx = comp_ctx<RFc>(A, j, rfc_u);
        ctx.t_val = [yb](const TParam& t) {
            if (t.q_exp != 0)
                throw std::domain_error("bundle: q-parameter outside a q-series context");
            return RFc::constant('u', CycNumber(t.sign) * cyc_pow(yb, t.y_exp));
        };
        const std::optional<RFc> y = RFc::constant('u', yb);
        return genus_datum<RFc>(F, g.kind, y, ctx, spec.twist);
    }
    if (g.kind == K::ChiY) {
        using QR = QSeries<RFq>;
        const int W = A.M.real_dim + 2;
        auto ctx = comp_ctx<QR>(A, j,
                                [](int k) { return QR::constant('y', rfq_u(k)); });
        const std::optional<QR> y =
            QR::monomial('y', 1, RFq::constant('u', Rational(1))).as_truncated(W);
        return genus_datum<QR>(F, g.kind, y, ctx, spec.twist).as_truncated(W);
    }
    auto ctx = comp_ctx<RFq>(A, j, rfq_u);
    return genus_datum<RFq>(F, g.kind, std::nullopt, ctx, spec.twist);
}

EquivValue loop_datum(const CircleAction& A, size_t j, const EquivSpec& spec) {
    const FixedComponent& F = A.components[j];
    const int Q = spec.q_order;
    if (Q < 0) throw std::domain_error("equivariant: negative q-order");

    if (spec.sel == EquivSpec::Sel::Level2Loop) {
        using QR = QSeries<RFq>;
        auto ctx = comp_ctx<QR>(A, j,
                                [](int k) { return QR::constant('q', rfq_u(k)); });
        ctx.q_window = Q;
        ctx.t_val = [Q](const TParam& t) {
            if (t.y_exp != 0)
                throw std::domain_error("bundle: y-parameter requires a bound y");
            return QR::monomial('q', t.q_exp, RFq::constant('u', Rational(t.sign)))
                .as_truncated(Q);
        };
        ctx.t_degree = [](const TParam& t) { return t.q_exp; };
        return genus_datum<QR>(F, GenusKind::Kind::Signature, std::nullopt, ctx,
                               bundle_qproduct(QFamily::Level2))
            .as_truncated(Q);
    }

    const int N = spec.N;
    if (N < 2) throw std::domain_error("equivariant: level N must be >= 2");
    if (!A.M.is_complex())
        throw std::domain_error("genus: level-N genera require a complex model");
    if (!is_c1_divisible(A.M, N))
        throw std::domain_error("level condition failed: c1 = " +
                                degree2_class_str(A.M, c1(A.M)) +
                                " is not divisible by " + std::to_string(N));
    using QC = QSeries<RFc>;

    if (spec.sel == EquivSpec::Sel::LevelNLoop) {
        auto ctx = comp_ctx<QC>(A, j,
                                [](int k) { return QC::constant('q', rfc_u(k)); });
        ctx.q_window = Q;
        const CycNumber yv = CycNumber::minus_zeta_pow(N, 1);
        ctx.t_val = [Q, yv](const TParam& t) {
            return QC::monomial('q', t.q_exp,
                                RFc::constant('u', CycNumber(t.sign) * cyc_pow(yv, t.y_exp)))
                .as_truncated(Q);
        };
        ctx.t_degree = [](const TParam& t) { return t.q_exp; };
        const std::optional<QC> y = QC::constant('q', RFc::constant('u', yv));
        return genus_datum<QC>(F, GenusKind::Kind::ChiY, y, ctx,
                               bundle_qproduct(QFamily::LevelN, N))
            .as_truncated(Q);
    }

    // LevelNCusp: expansion at the cusp (alpha, beta), graded by qt = q^{1/N}.
    const int alpha = spec.alpha, beta = spec.beta;
    if (alpha < 0 || alpha >= N || beta < 0 || beta >= N)
        throw std::domain_error("equivariant: cusp index out of range");
    if (alpha == 0 && beta == 0)
        throw std::domain_error("equivariant: (0, 0) does not index a cusp");
    auto ctx = comp_ctx<QC>(A, j, [](int k) { return QC::constant('q', rfc_u(k)); });
    ctx.q_window = Q;
    const CycNumber zc = CycNumber::minus_zeta_pow(N, beta);
    ctx.t_val = [Q, N, alpha, zc](const TParam& t) {
        const int e = N * t.q_exp + alpha * t.y_exp;
        if (e < 0)
            throw std::domain_error("equivariant: negative q-power in the expansion");
        return QC::monomial('q', e,
                            RFc::constant('u', CycNumber(t.sign) * cyc_pow(zc, t.y_exp)))
            .as_truncated(Q);
    };
    ctx.t_degree = [N, alpha](const TParam& t) { return N * t.q_exp + alpha * t.y_exp; };

    std::vector<BundlePtr> parts;
    parts.push_back(bundle_lambda_series(TParam{1, 0, 1}, bundle_tangent_dual()));
    if (alpha != 0) parts.push_back(bundle_kroot(N, alpha));
    parts.push_back(bundle_qproduct(QFamily::LevelN, N));
    return genus_datum<QC>(F, GenusKind::Kind::Todd, std::nullopt, ctx,
                           bundle_tensor(std::move(parts)))
        .as_truncated(Q);
}

EquivValue ev_add(EquivValue a, const EquivValue& b) {
    return std::visit(
        [&](auto& x) -> EquivValue {
            using T = std::decay_t<decltype(x)>;
            return x + std::get<T>(b);
        },
        a);
}

}  // namespace

std::string equiv_value_str(const EquivValue& v) {
    return std::visit([](const auto& x) { return x.str(); }, v);
}

EquivValue local_datum(const CircleAction& A, size_t j, const EquivSpec& spec) {
    if (j >= A.components.size())
        throw std::invalid_argument("local_datum: component index out of range");
    switch (spec.sel) {
        case EquivSpec::Sel::Genus:
        case EquivSpec::Sel::Twisted:
            return plain_datum(A, j, spec);
        default:
            return loop_datum(A, j, spec);
    }
}

EquivValue equiv_index(const CircleAction& A, const EquivSpec& spec) {
    EquivValue acc = local_datum(A, 0, spec);
    for (size_t j = 1; j < A.components.size(); ++j)
        acc = ev_add(std::move(acc), local_datum(A, j, spec));
    return acc;
}

namespace {

/// Collapses a series of characters to its constant coefficients; fails
/// (nullopt) when some coefficient is non-constant.  With allow_monomial,
/// one global u-monomial is tolerated and its exponent reported.
template <field_scalar S>
std::optional<std::pair<int, QSeries<S>>> constant_coefficients(
    const QSeries<RationalFunction<S>>& s, bool allow_monomial) {
    if (s.exact())
        throw std::logic_error("equivariant: loop data must carry a q-window");
    const int top = s.order();
    std::optional<int> expo;
    std::vector<S> out(top + 1);
    for (int k = 0; k <= top; ++k) {
        const RationalFunction<S>& c = s.coeff(k);
        if (c.is_zero()) {
            out[k] = S{};
            continue;
        }
        if (allow_monomial) {
            const auto mc = rf_is_monomial_times_constant(c);
            if (!mc) return std::nullopt;
            if (expo && *expo != mc->first) return std::nullopt;
            expo = mc->first;
            out[k] = mc->second;
        } else {
            const auto cc = rf_is_constant(c);
            if (!cc) return std::nullopt;
            out[k] = *cc;
        }
    }
    return std::make_pair(expo.value_or(0),
                          QSeries<S>::truncated(s.var(), std::move(out)));
}

}  // namespace

RigidityReport rigidity_report(const CircleAction& A, const EquivSpec& spec) {
    using Sel = EquivSpec::Sel;
    using K = GenusKind::Kind;
    RigidityReport R;
    const EquivValue ev = equiv_index(A, spec);

    // Uniformly: `constant` asks for plain constancy, `normalized` tolerates
    // one global u-monomial (one exponent shared by every nonzero
    // coefficient) and reports the constant part.
    switch (spec.sel) {
        case Sel::Genus:
        case Sel::Twisted: {
            const GenusKind& g = spec.genus;
            if (g.kind == K::ChiY && !g.y_bound) {
                const auto& s = std::get<QSeries<RFq>>(ev);
                R.constant = constant_coefficients<Rational>(s, false).has_value();
                const auto mono = constant_coefficients<Rational>(s, true);
                R.normalized = mono.has_value();
                if (mono) {
                    R.monomial_exp = mono->first;
                    const int W = A.M.real_dim + 2;
                    R.value = y_polynomial(mono->second, A.M.real_dim / 2, W);
                }
            } else if (g.kind == K::ChiY) {
                const RFc& c = std::get<RFc>(ev);
                R.constant = rf_is_constant(c).has_value();
                const auto mono = rf_is_monomial_times_constant(c);
                R.normalized = mono.has_value();
                if (mono) {
                    R.monomial_exp = mono->first;
                    R.value = mono->second;
                }
            } else {
                const RFq& c = std::get<RFq>(ev);
                R.constant = rf_is_constant(c).has_value();
                const auto mono = rf_is_monomial_times_constant(c);
                R.normalized = mono.has_value();
                if (mono) {
                    R.monomial_exp = mono->first;
                    R.value = mono->second;
                }
            }
            R.nonequivariant = spec.sel == Sel::Twisted
                                   ? twisted_index(A.M, g, spec.twist)
                                   : index(A.M, g);
            break;
        }
        case Sel::Level2Loop: {
            const auto& s = std::get<QSeries<RFq>>(ev);
            R.constant = constant_coefficients<Rational>(s, false).has_value();
            const auto mono = constant_coefficients<Rational>(s, true);
            R.normalized = mono.has_value();
            if (mono) {
                R.monomial_exp = mono->first;
                R.value = mono->second;
            }
            R.nonequivariant = loop_signature(A.M, spec.q_order);
            break;
        }
        case Sel::LevelNLoop:
        case Sel::LevelNCusp: {
            const auto& s = std::get<QSeries<RFc>>(ev);
            R.constant = constant_coefficients<CycNumber>(s, false).has_value();
            const auto mono = constant_coefficients<CycNumber>(s, true);
            R.normalized = mono.has_value();
            if (mono) {
                R.monomial_exp = mono->first;
                R.value = mono->second;
            }
            R.nonequivariant =
                spec.sel == Sel::LevelNLoop
                    ? levelN_loop(A.M, spec.N, spec.q_order)
                    : alpha_cusp_series(A.M, spec.N, spec.alpha, spec.beta,
                                        spec.q_order);
            break;
        }
    }

    if (R.normalized)
        R.agrees = std::visit(
            [&](const auto& want) {
                using T = std::decay_t<decltype(want)>;
                const T* got = std::get_if<T>(&R.value);
                return got != nullptr && *got == want;
            },
            R.nonequivariant);

    std::ostringstream os;
    if (!R.normalized)
        os << "character not constant: " << equiv_value_str(ev);
    else {
        os << "constant" << (R.monomial_exp != 0
                                 ? " after removing u^" + std::to_string(R.monomial_exp)
                                 : "")
           << "; value = " << index_value_str(R.value)
           << "; non-equivariant = " << index_value_str(R.nonequivariant)
           << (R.agrees ? " (agrees)" : " (MISMATCH)");
    }
    R.detail = os.str();
    return R;
}

Rational limit_at_cusp(const CircleAction& A, const EquivSpec& spec) {
    if (!((spec.sel == EquivSpec::Sel::Genus || spec.sel == EquivSpec::Sel::Twisted) &&
          spec.genus.kind == GenusKind::Kind::Signature))
        throw std::domain_error("limit_at_cusp: signature-type spec required");
    Rational s(0);
    for (size_t j = 0; j < A.components.size(); ++j) {
        const RFq datum = std::get<RFq>(local_datum(A, j, spec));
        const auto L = rf_limit_at_infinity(datum);
        if (!L)
            throw std::domain_error("limit_at_cusp: the limit at infinity does not exist");
        s += *L;
    }
    return s;
}

namespace {

NilPoly<RFq> restrict_expr(const EquivClassExpr& v, const FixedComponent& F) {
    using Kind = EquivClassExpr::Kind;
    switch (v.kind) {
        case Kind::One:
            return NilPoly<RFq>::one(F.Y.ring);
        case Kind::EulerTangent: {
            // e(TM)|_Y = e(TY) * prod (c + m z) over the normal lines.
            NilPoly<RFq> e = lift_cls<RFq>(c_top(F.Y));
            for (const auto& nl : F.normal)
                e *= lift_cls<RFq>(nl.cls) +
                     NilPoly<RFq>::constant(F.Y.ring,
                                            RFq::monomial('z', 1, Rational(nl.m)));
            return e;
        }
        case Kind::HyperplaneProduct: {
            if (F.lines.empty())
                throw std::domain_error(
                    "equivariant_integral: no line restriction data");
            NilPoly<RFq> acc = NilPoly<RFq>::one(F.Y.ring);
            for (const Rational& s : v.shifts)
                acc *= lift_cls<RFq>(F.lines[0].cls) +
                       NilPoly<RFq>::constant(
                           F.Y.ring,
                           RFq::monomial('z', 1, F.lines[0].weight + s));
            return acc;
        }
    }
    throw std::logic_error("equivariant_integral: unknown expression kind");
}

}  // namespace

ZPoly equivariant_integral(const CircleAction& A, const EquivClassExpr& v) {
    RFq total = RFq::constant('z', Rational(0));
    for (const auto& F : A.components) {
        NilPoly<RFq> e = NilPoly<RFq>::one(F.Y.ring);
        for (const auto& nl : F.normal)
            e *= lift_cls<RFq>(nl.cls) +
                 NilPoly<RFq>::constant(F.Y.ring,
                                        RFq::monomial('z', 1, Rational(nl.m)));
        total += F.Y.integrate(restrict_expr(v, F) * nil_invert(e));
    }
    if (!total.den().is_one() ||
        (!total.num().is_zero() && total.num().min_exp() < 0))
        throw std::domain_error(
            "equivariant_integral: non-polynomial result; inconsistent fixed-point "
            "data");
    ZPoly out('z');
    if (!total.num().is_zero())
        for (const auto& [exp, c] : total.num().terms())
            out = out + ZPoly::monomial('z', exp, c);
    return out;
}

SigmaFixedData sigma_fixed_set(const CircleAction& A, int o) {
    if (o < 2) throw std::domain_error("sigma_fixed_set: order must be >= 2");
    if (!A.linear)
        throw std::domain_error(
            "sigma_fixed_set: only linear projective actions are supported");
    std::map<long, int> groups;
    for (const long w : A.weights) ++groups[((w % o) + o) % o];
    SigmaFixedData out;
    out.order = o;
    const int n = static_cast<int>(A.weights.size()) - 1;
    int maxk = 0;
    for (const auto& [r, count] : groups) {
        out.component_dims.push_back(count - 1);
        maxk = std::max(maxk, count - 1);
    }
    out.codim = 2 * (n - maxk);
    return out;
}

VanishingReport higher_vanishing_check(const CircleAction& A, int o, int N) {
    VanishingReport R;
    R.order = o;
    R.N = N;
    const SigmaFixedData sf = sigma_fixed_set(A, o);
    R.codim = sf.codim;
    std::ostringstream os;

    if (N == 2) {
        if (!is_c1_divisible(A.M, 2)) {
            R.detail = "not applicable: spin condition fails";
            return R;
        }
        int r = -1;
        while (sf.codim > 2 * o * (r + 1)) ++r;
        R.r = r;
        if (r < 0) {
            R.detail = "not applicable: codim M^sigma too small";
            return R;
        }
        R.applicable = true;
        const QSeries<Rational> dc = dirac_cusp_series(A.M, r);
        R.pass = true;
        os << "codim " << sf.codim << " > " << 2 * o << "r with r = " << r
           << "; Dirac-cusp coefficients:";
        for (int k = 0; k <= r; ++k) {
            os << " " << dc.coeff(k).str();
            if (!dc.coeff(k).is_zero()) R.pass = false;
        }
        R.detail = os.str();
        return R;
    }

    if (N < 3) throw std::domain_error("higher_vanishing_check: level must be 2 or >= 3");
    if (o != 2) {
        R.detail = "not applicable: the level-N criterion needs sigma of order 2";
        return R;
    }
    if (!is_c1_divisible(A.M, N)) {
        R.detail = "not applicable: c1 not divisible by " + std::to_string(N);
        return R;
    }
    if (sf.codim < 6) {
        R.detail = "not applicable: codim M^sigma < 6";
        return R;
    }
    R.applicable = true;
    R.pass = true;
    os << "codim " << sf.codim << " >= 6; Td(M, T* (x) K^{alpha/" << N << "}):";
    for (int a = 1; 2 * a < N; ++a) {
        const IndexValue val =
            twisted_index(A.M, GenusKind::todd(),
                          bundle_tensor({bundle_tangent_dual(), bundle_kroot(N, a)}));
        const Rational r = std::get<Rational>(val);
        os << " alpha=" << a << ": " << r.str();
        if (!r.is_zero()) R.pass = false;
    }
    R.detail = os.str();
    return R;
}

StructureReport structure_checks(const CircleAction& A) {
    StructureReport R;
    Rational chi_sum(0);
    for (const auto& F : A.components) chi_sum += euler_characteristic(F.Y);
    R.euler_ok = chi_sum == euler_characteristic(A.M);

    long dim_sum = 0;
    for (const auto& F : A.components) dim_sum += F.Y.real_dim / 2 + 1;
    const long m1 = A.M.real_dim / 2 + 1;
    R.dim_ok = A.linear ? dim_sum == m1 : dim_sum >= m1;

    R.generators_ok = true;
    for (const auto& F : A.components) {
        if (F.Y.real_dim == 0) continue;
        if (F.lines.empty()) {
            R.generators_ok = false;
            continue;
        }
        // The restricted hyperplane class must generate: in the model, it is
        // literally a ring generator of Y.
        bool hits = false;
        for (size_t i = 0; i < F.Y.ring->gens.size(); ++i)
            if (F.Y.ring->gens[i].degree == 2 &&
                F.lines[0].cls == Cls::generator(F.Y.ring, i))
                hits = true;
        if (!hits) R.generators_ok = false;
    }

    R.pass = R.euler_ok && R.dim_ok && R.generators_ok;
    std::ostringstream os;
    os << "chi-count " << (R.euler_ok ? "ok" : "FAIL") << "; dim-count "
       << (R.dim_ok ? "ok" : "FAIL") << " (sum " << dim_sum << " vs " << m1
       << "); generators " << (R.generators_ok ? "ok" : "FAIL");
    R.detail = os.str();
    return R;
}

CircleAction make_circle_action(SpaceModel M, std::vector<FixedComponent> components,
                                int d) {
    if (components.empty())
        throw std::domain_error("circle action: at least one fixed component required");
    if (d < 1) throw std::domain_error("circle action: cover index must be positive");

    std::vector<size_t> ambient_deg2;
    for (size_t i = 0; i < M.ring->gens.size(); ++i)
        if (M.ring->gens[i].degree == 2) ambient_deg2.push_back(i);

    Rational chi_sum(0);
    std::optional<Rational> delta;  // global weight discrepancy of c1
    for (const auto& F : components) {
        for (const auto& nl : F.normal)
            if (nl.m == 0)
                throw std::domain_error("circle action: zero normal weight");
        if (F.Y.real_dim + 2 * static_cast<int>(F.normal.size()) != M.real_dim)
            throw std::domain_error(
                "circle action: component dimension + normal rank mismatch");
        if (F.lines.size() != ambient_deg2.size())
            throw std::domain_error(
                "circle action: one line restriction per ambient generator required");
        chi_sum += euler_characteristic(F.Y);

        if (M.is_complex() && F.Y.is_complex()) {
            // c1(M)|_Y = c1(Y) + sum normal classes (exactly), with the weight
            // discrepancy constant across components (a global lift shift).
            const Cls amb = c1(M);
            Cls restricted;
            Rational wrestricted(0);
            for (size_t i = 0; i < ambient_deg2.size(); ++i) {
                std::vector<int> expo(M.ring->gens.size(), 0);
                expo[ambient_deg2[i]] = 1;
                const Rational coeff = amb.coeff(expo);
                restricted += F.lines[i].cls.scaled(coeff);
                wrestricted += coeff * F.lines[i].weight;
            }
            long msum = 0;
            for (const auto& nl : F.normal) msum += nl.m;
            const Cls expect = c1(F.Y) + normal_class_sum(F);
            if (!(restricted == expect))
                throw std::domain_error(
                    "circle action: restricted c1 does not match component data");
            const Rational dF = wrestricted - Rational(msum);
            if (delta && !(*delta == dF))
                throw std::domain_error(
                    "circle action: c1 weight discrepancy is not a global constant");
            delta = dF;
        }
    }
    if (!(chi_sum == euler_characteristic(M)))
        throw std::domain_error(
            "circle action: Euler characteristics of the components do not sum to "
            "chi(M)");

    CircleAction A;
    A.M = std::move(M);
    A.components = std::move(components);
    A.d = d;
    return A;
}

CircleAction linear_cp_action(const std::vector<long>& weights, int d) {
    if (weights.size() < 2)
        throw std::domain_error("linear_cp_action: need at least two weights (n >= 1)");
    const int n = static_cast<int>(weights.size()) - 1;

    std::map<long, int> mult;
    for (const long w : weights) ++mult[w];

    std::vector<FixedComponent> comps;
    for (const auto& [w, count] : mult) {
        const int k = count - 1;
        FixedComponent F;
        F.Y = k == 0 ? point() : cp(k);
        const Cls xY = k == 0 ? Cls() : Cls::generator(F.Y.ring, 0);
        for (const auto& [w2, count2] : mult) {
            if (w2 == w) continue;
            for (int i = 0; i < count2; ++i)
                F.normal.push_back(WeightedLine{xY, static_cast<int>(w2 - w)});
        }
        F.lines = {LineRestriction{xY, Rational(-w)}};
        comps.push_back(std::move(F));
    }

    CircleAction A = make_circle_action(cp(n), std::move(comps), d);
    A.linear = true;
    A.weights = weights;
    return A;
}

}  // namespace genera
