/// @file ratfun.hpp
/// @brief Rational functions in one circle variable, kept in canonical form.
///
/// Canonical form: the denominator is an ordinary polynomial (no negative
/// exponents) with nonzero constant term whose lowest-exponent coefficient is
/// 1; numerator and denominator share no polynomial factor (monic gcd = 1).
/// Any overall power of the variable is carried by the (Laurent) numerator.
/// Equality is then plain structural comparison.

#pragma once

#include <genera/laurent.hpp>

#include <optional>
#include <utility>

namespace genera {

template <field_scalar S>
class RationalFunction {
  public:
    using Poly = LaurentPoly<S>;

    RationalFunction() : RationalFunction('u') {}
    explicit RationalFunction(char var)
        : num_(var), den_(Poly::constant(var, one())) {}
    explicit RationalFunction(const Poly& p)
        : num_(p), den_(Poly::constant(p.var(), one())) {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        canonicalize();
    }

    static RationalFunction constant(char var, const S& c) {
        return RationalFunction(Poly::constant(var, c));
    }
    static RationalFunction monomial(char var, int exp, const S& c) {
        return RationalFunction(Poly::monomial(var, exp, c));
    }
    static RationalFunction variable(char var) {
        return RationalFunction(Poly::variable(var));
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    char var() const { return num_.is_constant() ? den_.var() : num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// Evaluation at an invertible sample point (denominator must not vanish).
    S evaluate(const S& x) const {
        const S d = den_.evaluate(x);
        if (d.is_zero())
            throw std::domain_error("RationalFunction: pole at sample point");
        return num_.evaluate(x) * scalar_inverse(d);
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

  private:
    static S one() { return from_rational_as<S>(Rational(1)); }

    void canonicalize() {
        if (den_.is_zero())
            throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            num_ = Poly(den_.var());
            den_ = Poly::constant(den_.var(), one());
            return;
        }
        // Pull the u-shift out of both parts; the denominator becomes an
        // ordinary polynomial with nonzero constant term.
        const int a = num_.min_exp();
        const int b = den_.min_exp();
        Poly n0 = num_.shifted(-a);
        Poly d0 = den_.shifted(-b);
        const Poly g = poly_gcd(n0, d0);
        if (!g.is_constant()) {
            n0 = poly_divmod(n0, g).first;
            d0 = poly_divmod(d0, g).first;
        }
        const S scale = scalar_inverse(d0.coeff(0));
        num_ = n0.scaled(scale).shifted(a - b);
        den_ = d0.scaled(scale);
    }

    Poly num_;
    Poly den_;
};

template <field_scalar S>
RationalFunction<S> scalar_inverse(const RationalFunction<S>& f) {
    if (f.is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction<S>(f.den(), f.num());
}

template <field_scalar S>
RationalFunction<S> from_rational(const Rational& q, const RationalFunction<S>&) {
    return RationalFunction<S>::constant('u', from_rational_as<S>(q));
}

/// The constant value of f when f is a constant rational function, else empty.
/// In canonical form constancy is exactly "denominator 1, numerator a single
/// exponent-0 term (or zero)".
template <field_scalar S>
std::optional<S> rf_is_constant(const RationalFunction<S>& f) {
    if (!f.den().is_one()) return std::nullopt;
    if (f.num().is_zero()) return S{};
    if (f.num().is_constant()) return f.num().coeff(0);
    return std::nullopt;
}

/// (exponent, constant) when f = c * u^exponent; tolerates the global
/// u-monomial ambiguity of normalized equivariant line-bundle lifts.
template <field_scalar S>
std::optional<std::pair<int, S>> rf_is_monomial_times_constant(
    const RationalFunction<S>& f) {
    if (!f.den().is_one()) return std::nullopt;
    if (f.num().is_zero()) return std::make_pair(0, S{});
    if (f.num().terms().size() == 1) {
        const auto& [e, c] = *f.num().terms().begin();
        return std::make_pair(e, c);
    }
    return std::nullopt;
}

/// lim f as the variable grows without bound: 0 when the numerator's top
/// degree is smaller, the top-coefficient ratio when equal, absent when the
/// numerator dominates.
template <field_scalar S>
std::optional<S> rf_limit_at_infinity(const RationalFunction<S>& f) {
    if (f.num().is_zero()) return S{};
    const int dn = f.num().max_exp();
    const int dd = f.den().max_exp();
    if (dn < dd) return S{};
    if (dn == dd) return f.num().coeff(dn) * scalar_inverse(f.den().coeff(dd));
    return std::nullopt;
}

}  // namespace genera
