/// @file nilpoly.hpp
/// @brief Truncated graded-commutative polynomial rings with nilpotent
/// generators — the cohomology rings of the model manifolds.
///
/// A NilRing fixes a generator table (name, even degree, nilpotency exponent)
/// and an even degree cap; multiplication discards any monomial that violates
/// a nilpotency bound or exceeds the cap.  A NilPoly is an element over a
/// pluggable scalar ring.  A ring-less NilPoly represents a bare constant
/// (notably the zero of generic code) and promotes on contact.
///
/// All generators here have even degree, so the ring is honestly commutative
/// and exponential/inverse expansions terminate by nilpotency.

#pragma once

#include <genera/scalar.hpp>

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace genera {

struct NilGen {
    std::string name;
    int degree = 2;      // even cohomological degree
    int nilpotency = 2;  // gen^nilpotency = 0
};

struct NilRing {
    std::vector<NilGen> gens;
    int cap = 0;  // monomials of total degree > cap vanish

    int degree_of(const std::vector<int>& expo) const {
        int d = 0;
        for (size_t i = 0; i < gens.size(); ++i) d += expo[i] * gens[i].degree;
        return d;
    }
    bool admissible(const std::vector<int>& expo) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (expo[i] >= gens[i].nilpotency) return false;
        return degree_of(expo) <= cap;
    }
};

using NilRingPtr = std::shared_ptr<const NilRing>;

inline NilRingPtr make_nil_ring(std::vector<NilGen> gens, int cap) {
    for (const auto& g : gens)
        if (g.degree <= 0 || g.degree % 2 != 0)
            throw std::domain_error("NilRing: generator degrees must be positive and even");
    auto r = std::make_shared<NilRing>();
    r->gens = std::move(gens);
    r->cap = cap;
    return r;
}

template <ring_scalar S>
class NilPoly {
  public:
    /// Ring-less zero.
    NilPoly() = default;
    /// Ring-less constant.
    explicit NilPoly(const S& c) {
        if (!c.is_zero()) t_[{}] = c;
    }

    static NilPoly zero() { return NilPoly(); }
    static NilPoly constant(const NilRingPtr& R, const S& c) {
        NilPoly p;
        p.R_ = R;
        if (!c.is_zero()) p.t_[std::vector<int>(R->gens.size(), 0)] = c;
        return p;
    }
    static NilPoly one(const NilRingPtr& R) {
        return constant(R, from_rational_as<S>(Rational(1)));
    }
    static NilPoly generator(const NilRingPtr& R, size_t i) {
        if (i >= R->gens.size())
            throw std::domain_error("NilPoly: generator index out of range");
        NilPoly p;
        p.R_ = R;
        std::vector<int> e(R->gens.size(), 0);
        e[i] = 1;
        if (R->admissible(e)) p.t_[e] = from_rational_as<S>(Rational(1));
        return p;
    }
    static NilPoly monomial(const NilRingPtr& R, std::vector<int> expo, const S& c) {
        NilPoly p;
        p.R_ = R;
        if (!c.is_zero() && R->admissible(expo)) p.t_[std::move(expo)] = c;
        return p;
    }

    const NilRingPtr& ring() const { return R_; }
    const std::map<std::vector<int>, S>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    /// Coefficient of the monomial with the given exponent vector.
    S coeff(const std::vector<int>& expo) const {
        auto it = t_.find(expo);
        return it == t_.end() ? S{} : it->second;
    }
    /// Degree-0 coefficient (the scalar part).
    S scalar_part() const {
        if (!R_) return t_.empty() ? S{} : t_.begin()->second;
        return coeff(std::vector<int>(R_->gens.size(), 0));
    }
    /// The homogeneous component of the given degree.
    NilPoly component(int degree) const {
        NilPoly r;
        r.R_ = R_;
        for (const auto& [e, c] : t_) {
            const int d = R_ ? R_->degree_of(e) : 0;
            if (d == degree) r.t_[e] = c;
        }
        return r;
    }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && degree_of_first() == 0);
    }

    NilPoly operator+(const NilPoly& o) const {
        NilPoly a = *this, b = o;
        promote(a, b);
        for (const auto& [e, c] : b.t_) a.add_term(e, c);
        return a;
    }
    NilPoly operator-(const NilPoly& o) const {
        NilPoly a = *this, b = o;
        promote(a, b);
        for (const auto& [e, c] : b.t_) a.add_term(e, -c);
        return a;
    }
    NilPoly operator-() const {
        NilPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    NilPoly operator*(const NilPoly& o) const {
        NilPoly a = *this, b = o;
        promote(a, b);
        NilPoly r;
        r.R_ = a.R_;
        for (const auto& [e1, c1] : a.t_) {
            for (const auto& [e2, c2] : b.t_) {
                std::vector<int> e = e1;
                for (size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
                if (r.R_ && !r.R_->admissible(e)) continue;
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }
    NilPoly& operator+=(const NilPoly& o) { return *this = *this + o; }
    NilPoly& operator-=(const NilPoly& o) { return *this = *this - o; }
    NilPoly& operator*=(const NilPoly& o) { return *this = *this * o; }

    NilPoly scaled(const S& c) const {
        NilPoly r;
        r.R_ = R_;
        if (c.is_zero()) return r;
        for (const auto& [e, coef] : t_) {
            S v = coef * c;
            if (!v.is_zero()) r.t_[e] = v;
        }
        return r;
    }

    NilPoly pow(int k) const {
        NilPoly r = R_ ? one(R_) : NilPoly(from_rational_as<S>(Rational(1)));
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    bool operator==(const NilPoly& o) const {
        NilPoly a = *this, b = o;
        promote(a, b);
        return a.t_ == b.t_;
    }
    bool operator!=(const NilPoly& o) const { return !(*this == o); }

    /// Applies f to every coefficient (same ring, new scalar domain).
    template <typename F>
    auto map_scalars(F f) const {
        using S2 = decltype(f(std::declval<S>()));
        NilPoly<S2> r = R_ ? NilPoly<S2>::constant(R_, S2{}) : NilPoly<S2>{};
        for (const auto& [e, c] : t_) {
            S2 v = f(c);
            if (!v.is_zero()) r.set_term(e, std::move(v));
        }
        return r;
    }

    /// Ring morphism: maps every generator to its image in the target ring
    /// and every coefficient through f.
    template <typename S2, typename F>
    NilPoly<S2> morph(const NilRingPtr& target,
                      const std::vector<NilPoly<S2>>& gen_images, F f) const {
        if (R_ && gen_images.size() != R_->gens.size())
            throw std::domain_error("NilPoly::morph: one image per generator required");
        NilPoly<S2> acc = NilPoly<S2>::constant(target, S2{});
        for (const auto& [e, c] : t_) {
            NilPoly<S2> term = NilPoly<S2>::constant(target, f(c));
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) term *= gen_images[i];
            acc += term;
        }
        return acc;
    }

    /// Internal helper for map_scalars (public for cross-instantiation).
    void set_term(const std::vector<int>& e, S v) { t_[e] = std::move(v); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(";
            if constexpr (requires(const S& x) { x.str(); })
                os << c.str();
            else
                os << c;
            os << ")";
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                os << "*" << (R_ ? R_->gens[i].name : "g" + std::to_string(i));
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

  private:
    int degree_of_first() const {
        if (t_.empty()) return 0;
        return R_ ? R_->degree_of(t_.begin()->first) : 0;
    }
    static void promote(NilPoly& a, NilPoly& b) {
        if (a.R_ == b.R_) return;
        if (!a.R_ && !b.R_) return;
        if (!a.R_) {
            a = lift_constant(a, b.R_);
        } else if (!b.R_) {
            b = lift_constant(b, a.R_);
        } else {
            throw std::domain_error("NilPoly: cannot mix distinct rings");
        }
    }
    static NilPoly lift_constant(const NilPoly& c, const NilRingPtr& R) {
        NilPoly r;
        r.R_ = R;
        if (!c.t_.empty())
            r.t_[std::vector<int>(R->gens.size(), 0)] = c.t_.begin()->second;
        return r;
    }
    void add_term(const std::vector<int>& e, const S& c) {
        if (c.is_zero()) return;
        auto it = t_.find(e);
        if (it == t_.end()) {
            t_[e] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    NilRingPtr R_;
    std::map<std::vector<int>, S> t_;
};

/// exp of a nilpotent class: sum c^k / k!, finite by nilpotency.
template <ring_scalar S>
NilPoly<S> nil_exp(const NilPoly<S>& c) {
    if (!c.scalar_part().is_zero())
        throw std::domain_error("nil_exp: nonzero degree-0 term");
    NilPoly<S> acc = c.ring() ? NilPoly<S>::one(c.ring())
                              : NilPoly<S>(from_rational_as<S>(Rational(1)));
    NilPoly<S> power = acc;
    const int kmax = c.ring() ? c.ring()->cap / 2 + 1 : 1;
    for (int k = 1; k <= kmax; ++k) {
        power *= c;
        if (power.is_zero()) break;
        acc += power.scaled(from_rational_as<S>(Rational(1) / factorial(k)));
    }
    return acc;
}

/// Multiplicative inverse of a NilPoly whose degree-0 term is a unit:
/// (c0 (1 + n))^{-1} = c0^{-1} sum (-n)^k, finite by nilpotency.
template <ring_scalar S>
NilPoly<S> nil_invert(const NilPoly<S>& c) {
    const S c0 = c.scalar_part();
    if (c0.is_zero())
        throw std::domain_error("nil_invert: degree-0 term is zero");
    const S c0_inv = scalar_inverse(c0);
    if (!c.ring()) return NilPoly<S>(c0_inv);
    NilPoly<S> n = c.scaled(c0_inv) - NilPoly<S>::one(c.ring());  // nilpotent part
    NilPoly<S> acc = NilPoly<S>::one(c.ring());
    NilPoly<S> power = acc;
    const int kmax = c.ring()->cap / 2 + 1;
    for (int k = 1; k <= kmax; ++k) {
        power *= n;
        if (power.is_zero()) break;
        acc += (k % 2 == 0) ? power : -power;
    }
    return acc.scaled(c0_inv);
}

/// Unit inversion under the generic scalar protocol (lets series code over
/// NilPoly coefficients invert elements with invertible degree-0 part).
template <ring_scalar S>
NilPoly<S> scalar_inverse(const NilPoly<S>& c) {
    return nil_invert(c);
}

/// Evaluates a one-variable power series (coefficient list) at a nilpotent
/// argument: sum coeffs[k] * c^k.
template <ring_scalar S>
NilPoly<S> nil_series(const std::vector<S>& coeffs, const NilPoly<S>& c) {
    if (!c.scalar_part().is_zero())
        throw std::domain_error("nil_series: argument must be nilpotent");
    NilPoly<S> acc;
    NilPoly<S> power = c.ring() ? NilPoly<S>::one(c.ring())
                                : NilPoly<S>(from_rational_as<S>(Rational(1)));
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) {
            power *= c;
            if (power.is_zero()) break;
        }
        acc += power.scaled(coeffs[k]);
    }
    return acc;
}

template <ring_scalar S>
NilPoly<S> from_rational(const Rational& q, const NilPoly<S>&) {
    return NilPoly<S>(from_rational_as<S>(q));
}

}  // namespace genera
