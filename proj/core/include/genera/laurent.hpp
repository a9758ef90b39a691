/// @file laurent.hpp
/// @brief Sparse Laurent polynomials in one variable over a pluggable scalar.
///
/// Exponents may be negative (characters live in Z[u, u^{-1}]).  The variable
/// tag is carried for diagnostics and serialization; binary operations demand
/// matching tags unless one side is a pure constant.  Polynomial division,
/// gcd, and evaluation require nonnegative exponents and a field scalar.

#pragma once

#include <genera/scalar.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace genera {

template <ring_scalar S>
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(char var) : var_(var) {}
    LaurentPoly(char var, const S& constant) : var_(var) {
        if (!constant.is_zero()) t_[0] = constant;
    }

    static LaurentPoly constant(char var, const S& c) { return LaurentPoly(var, c); }
    static LaurentPoly monomial(char var, int exp, const S& c) {
        LaurentPoly p(var);
        if (!c.is_zero()) p.t_[exp] = c;
        return p;
    }
    static LaurentPoly variable(char var) {
        return monomial(var, 1, from_rational_as<S>(Rational(1)));
    }

    char var() const { return var_; }
    const std::map<int, S>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0);
    }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second ==
            from_rational_as<S>(Rational(1));
    }

    S coeff(int exp) const {
        auto it = t_.find(exp);
        return it == t_.end() ? S{} : it->second;
    }
    int min_exp() const {
        if (t_.empty()) throw std::domain_error("LaurentPoly: min_exp of zero");
        return t_.begin()->first;
    }
    int max_exp() const {
        if (t_.empty()) throw std::domain_error("LaurentPoly: max_exp of zero");
        return t_.rbegin()->first;
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r.adopt_var(o);
        for (const auto& [e, c] : o.t_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r.adopt_var(o);
        for (const auto& [e, c] : o.t_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [e, c] : r.t_) c = -c;
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r(var_);
        r.adopt_var(o);
        for (const auto& [e1, c1] : t_)
            for (const auto& [e2, c2] : o.t_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const S& c) const {
        LaurentPoly r(var_);
        if (c.is_zero()) return r;
        for (const auto& [e, coef] : t_) {
            S v = coef * c;
            if (!v.is_zero()) r.t_[e] = v;
        }
        return r;
    }
    LaurentPoly shifted(int k) const {  // multiply by var^k
        LaurentPoly r(var_);
        for (const auto& [e, c] : t_) r.t_[e + k] = c;
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        return t_ == o.t_ && (is_constant() || o.is_constant() || var_ == o.var_);
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Evaluation at a scalar point (nonneg exponents, or invertible point).
    S evaluate(const S& x) const
        requires field_scalar<S>
    {
        S acc{};
        for (const auto& [e, c] : t_) {
            S p = from_rational_as<S>(Rational(1));
            const int n = e >= 0 ? e : -e;
            for (int i = 0; i < n; ++i) p = p * x;
            if (e < 0) p = scalar_inverse(p);
            acc = acc + c * p;
        }
        return acc;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : t_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << scalar_str(c) << ")";
            if (e != 0) os << "*" << var_ << "^" << e;
        }
        return os.str();
    }

  private:
    static std::string scalar_str(const S& c) {
        if constexpr (requires(const S& x) { x.str(); })
            return c.str();
        else {
            std::ostringstream os;
            os << c;
            return os.str();
        }
    }
    void adopt_var(const LaurentPoly& o) {
        // Constants (only exponent-0 terms) are variable-agnostic.
        if (is_constant()) {
            if (!o.is_constant()) var_ = o.var_;
        } else if (!o.is_constant() && var_ != o.var_) {
            throw std::domain_error(std::string("LaurentPoly: mixed variables '") +
                                    var_ + "' and '" + o.var_ + "'");
        }
    }
    void add_term(int e, const S& c) {
        auto it = t_.find(e);
        if (it == t_.end()) {
            if (!c.is_zero()) t_[e] = c;
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    char var_ = 'u';
    std::map<int, S> t_;
};

/// Quotient and remainder for ordinary polynomials (exponents >= 0) over a
/// field scalar.
template <field_scalar S>
std::pair<LaurentPoly<S>, LaurentPoly<S>> poly_divmod(LaurentPoly<S> a,
                                                      const LaurentPoly<S>& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: zero divisor");
    if ((!a.is_zero() && a.min_exp() < 0) || b.min_exp() < 0)
        throw std::domain_error("poly_divmod: negative exponents");
    LaurentPoly<S> q(a.var());
    const int db = b.max_exp();
    const S lead_inv = scalar_inverse(b.coeff(db));
    while (!a.is_zero() && a.max_exp() >= db) {
        const int shift = a.max_exp() - db;
        const S c = a.coeff(a.max_exp()) * lead_inv;
        const auto term = LaurentPoly<S>::monomial(a.var(), shift, c);
        q += term;
        a -= term * b;
    }
    return {q, a};
}

/// Monic gcd of two ordinary polynomials over a field scalar.
template <field_scalar S>
LaurentPoly<S> poly_gcd(LaurentPoly<S> a, LaurentPoly<S> b) {
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    return a.scaled(scalar_inverse(a.coeff(a.max_exp())));
}

template <ring_scalar S>
LaurentPoly<S> from_rational(const Rational& q, const LaurentPoly<S>&) {
    return LaurentPoly<S>('u', from_rational_as<S>(q));
}

}  // namespace genera
