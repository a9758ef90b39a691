#include <genera/spaces.hpp>

#include <sstream>
#include <stdexcept>

namespace genera {

SpaceModel point() {
    SpaceModel M;
    M.name = "pt";
    M.real_dim = 0;
    M.ring = make_nil_ring({}, 0);
    M.top_monomial = {};
    M.tangent = RootData{};
    return M;
}

SpaceModel cp(int n) {
    if (n < 1) throw std::domain_error("cp: n must be >= 1 (use point())");
    SpaceModel M;
    M.name = "cp(" + std::to_string(n) + ")";
    M.real_dim = 2 * n;
    M.ring = make_nil_ring({NilGen{"x", 2, n + 1}}, 2 * n);
    M.top_monomial = {n};
    RootData rd;
    const Cls x = Cls::generator(M.ring, 0);
    for (int i = 0; i <= n; ++i) rd.pos.push_back(x);  // T (+) C = (n+1) O(1)
    rd.trivial = 1;
    M.tangent = rd;
    return M;
}

SpaceModel hypersurface(int m, int d) {
    if (m < 1 || d < 1) throw std::domain_error("hypersurface: need m >= 1, d >= 1");
    SpaceModel M;
    M.name = "hypersurface(" + std::to_string(m) + "," + std::to_string(d) + ")";
    M.real_dim = 2 * m;
    M.ring = make_nil_ring({NilGen{"x", 2, m + 1}}, 2 * m);
    M.top_monomial = {m};
    M.integrate_scale = Rational(d);  // pushforward weight of the ambient integral
    RootData rd;
    const Cls x = Cls::generator(M.ring, 0);
    for (int i = 0; i <= m + 1; ++i) rd.pos.push_back(x);
    rd.neg.push_back(x.scaled(Rational(d)));
    rd.trivial = 1;
    M.tangent = rd;
    return M;
}

SpaceModel even_sphere(int n) {
    if (n < 1) throw std::domain_error("even_sphere: n must be >= 1");
    SpaceModel M;
    M.name = "sphere(" + std::to_string(2 * n) + ")";
    M.real_dim = 2 * n;
    M.ring = make_nil_ring({NilGen{"u", 2 * n, 2}}, 2 * n);
    M.top_monomial = {1};
    OrientedData od;
    od.euler = Cls::generator(M.ring, 0).scaled(Rational(2));
    M.tangent = od;
    return M;
}

SpaceModel product(const SpaceModel& A, const SpaceModel& B) {
    if (A.is_complex() != B.is_complex())
        throw std::domain_error(
            "product: cannot mix complex and oriented-only models");
    SpaceModel M;
    M.name = A.name + " x " + B.name;
    M.real_dim = A.real_dim + B.real_dim;
    std::vector<NilGen> gens;
    for (size_t i = 0; i < A.ring->gens.size(); ++i) {
        NilGen g = A.ring->gens[i];
        g.name += "_l";
        gens.push_back(g);
    }
    for (size_t i = 0; i < B.ring->gens.size(); ++i) {
        NilGen g = B.ring->gens[i];
        g.name += "_r";
        gens.push_back(g);
    }
    M.ring = make_nil_ring(std::move(gens), M.real_dim);
    M.top_monomial = A.top_monomial;
    M.top_monomial.insert(M.top_monomial.end(), B.top_monomial.begin(),
                          B.top_monomial.end());
    M.integrate_scale = A.integrate_scale * B.integrate_scale;

    const size_t na = A.ring->gens.size();
    const size_t nb = B.ring->gens.size();
    auto embed = [&](const Cls& c, bool left) {
        std::vector<Cls> images;
        const size_t n = left ? na : nb;
        for (size_t i = 0; i < n; ++i)
            images.push_back(Cls::generator(M.ring, left ? i : na + i));
        return c.morph<Rational>(M.ring, images, [](const Rational& q) { return q; });
    };

    if (A.is_complex()) {
        RootData rd;
        for (const auto& r : A.roots().pos) rd.pos.push_back(embed(r, true));
        for (const auto& r : B.roots().pos) rd.pos.push_back(embed(r, false));
        for (const auto& r : A.roots().neg) rd.neg.push_back(embed(r, true));
        for (const auto& r : B.roots().neg) rd.neg.push_back(embed(r, false));
        rd.trivial = A.roots().trivial + B.roots().trivial;
        M.tangent = rd;
    } else {
        OrientedData od;
        od.euler = embed(A.oriented().euler, true) * embed(B.oriented().euler, false);
        M.tangent = od;
    }
    return M;
}

Cls c1(const SpaceModel& M) {
    if (!M.is_complex())
        throw std::domain_error("c1: oriented-only model has no Chern classes");
    Cls c;
    for (const auto& r : M.roots().pos) c += r;
    for (const auto& r : M.roots().neg) c -= r;
    return c;
}

Cls c_top(const SpaceModel& M) {
    if (!M.is_complex())
        throw std::domain_error("c_top: oriented-only model has no Chern classes");
    Cls total = Cls::one(M.ring);
    for (const auto& r : M.roots().pos) total *= (Cls::one(M.ring) + r);
    for (const auto& r : M.roots().neg)
        total *= nil_invert(Cls::one(M.ring) + r);
    return total.component(M.real_dim);
}

Rational euler_characteristic(const SpaceModel& M) {
    if (M.is_complex()) return M.integrate(c_top(M));
    return M.integrate(M.oriented().euler);
}

bool is_c1_divisible(const SpaceModel& M, int N) {
    if (N < 2) throw std::domain_error("is_c1_divisible: N must be >= 2");
    if (!M.is_complex())
        throw std::domain_error("is_c1_divisible: oriented-only model rejected");
    const Cls c = c1(M);
    for (size_t i = 0; i < M.ring->gens.size(); ++i) {
        if (M.ring->gens[i].degree != 2) continue;
        std::vector<int> e(M.ring->gens.size(), 0);
        e[i] = 1;
        const Rational coef = c.coeff(e);
        if (!coef.is_integer())
            throw std::logic_error("is_c1_divisible: non-integral c1 coordinate");
        if (!coef.is_divisible_by(N)) return false;
    }
    return true;
}

std::string degree2_class_str(const SpaceModel& M, const Cls& c) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < M.ring->gens.size(); ++i) {
        if (M.ring->gens[i].degree != 2) continue;
        std::vector<int> e(M.ring->gens.size(), 0);
        e[i] = 1;
        const Rational coef = c.coeff(e);
        if (coef.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (!coef.is_one()) os << coef.str();
        os << M.ring->gens[i].name;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace genera
