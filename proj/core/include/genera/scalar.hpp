/// @file scalar.hpp
/// @brief Scalar-domain contract and the exact rational number type.
///
/// Every symbolic container in this library (Laurent polynomials, rational
/// functions, truncated series, nilpotent graded rings) is generic over a
/// commutative scalar ring with decidable equality.  The concepts below spell
/// out that contract; the customization points `from_rational` and
/// `scalar_inverse` let the containers promote constants and invert units
/// without knowing the concrete domain.

#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace genera {

/// Commutative ring with decidable equality.  Default construction yields the
/// additive zero; construction from long embeds the integers.
template <typename T>
concept ring_scalar = std::regular<T> && requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

/// Ring in which every nonzero element is invertible via scalar_inverse().
template <typename T>
concept field_scalar = ring_scalar<T> && requires(T a) {
    { scalar_inverse(a) } -> std::convertible_to<T>;
};

/// Arbitrary-precision rational number.  Thin value wrapper over GMP's
/// mpq_class keeping the canonical form (reduced, positive denominator)
/// at all times.  No floating point enters or leaves.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parses "p", "-p", or "p/q".  Inverse of str().
    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        q.canonicalize();
        return Rational(std::move(q));
    }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(v_ / o.v_));
    }
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// True when the value is an integer divisible by n.
    bool is_divisible_by(long n) const {
        return is_integer() && mpz_divisible_ui_p(v_.get_num().get_mpz_t(),
                                                  static_cast<unsigned long>(n));
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_.get_str();
    }

  private:
    mpq_class v_;
};

inline Rational scalar_inverse(const Rational& a) {
    if (a.is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(1) / a;
}

/// Embeds a rational constant into a scalar domain.  Each domain provides an
/// overload; the Rational overload is the identity.
inline Rational from_rational(const Rational& q, const Rational&) { return q; }

/// Tag-dispatch helper: from_rational_as<T>(q) builds the constant q in T.
template <ring_scalar T>
T from_rational_as(const Rational& q) {
    return from_rational(q, T{});
}

/// n! as an exact rational (helper for exponential series).
inline Rational factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/// Generalized binomial coefficient C(k, n) = k(k-1)...(k-n+1)/n! for
/// arbitrary integer k and n >= 0 (the Riemann-Roch oracle needs k < n).
inline Rational binomial(long k, int n) {
    Rational num(1);
    for (int j = 0; j < n; ++j) num *= Rational(k - j);
    return num / factorial(n);
}

}  // namespace genera
