/// @file cyclotomic.hpp
/// @brief Exact arithmetic in Q[zeta_d] = Q[x]/(Phi_d(x)).
///
/// A CycNumber is an element of the quotient of the rational polynomial ring
/// by the d-th cyclotomic polynomial, stored as phi(d) rational coordinates
/// in the power basis 1, zeta, ..., zeta^{phi(d)-1}.  Values of different
/// moduli combine when one modulus divides the other (zeta_e = zeta_d^{d/e});
/// rational constants live at modulus 1 and embed everywhere.

#pragma once

#include <genera/scalar.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace genera {

namespace detail {
/// Shared per-modulus data: the cyclotomic polynomial and reduction rows
/// expressing x^{phi+j} modulo Phi_d in the power basis.
struct CycTable {
    int d = 1;
    int phi = 1;
    std::vector<Rational> phi_poly;              // monic, degree phi
    std::vector<std::vector<Rational>> red;      // red[j] = x^{phi+j} mod Phi_d
};
const std::shared_ptr<const CycTable>& cyc_table(int d);
}  // namespace detail

class CycNumber {
  public:
    CycNumber() : CycNumber(Rational(0)) {}
    CycNumber(long n) : CycNumber(Rational(n)) {}
    explicit CycNumber(const Rational& q)
        : tab_(detail::cyc_table(1)), c_{q} {}

    /// Element with the given power-basis coordinates (length phi(d)).
    static CycNumber from_coeffs(int d, std::vector<Rational> coeffs);

    /// zeta_d^power.
    static CycNumber zeta(int d, long power = 1);

    /// -zeta_N^beta realized inside modulus lcm(2, N); the standard home of
    /// the level-N parameter y.
    static CycNumber minus_zeta_pow(int N, long beta = 1);

    int modulus() const { return tab_->d; }
    const std::vector<Rational>& coeffs() const { return c_; }

    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber operator-() const;
    CycNumber operator/(const CycNumber& o) const;
    CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
    CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    bool is_zero() const;
    bool is_one() const;

    /// The value as a Rational when it lies in the prime field.
    std::optional<Rational> as_rational() const;

    /// Multiplicative inverse (extended Euclid against Phi_d; Phi_d is
    /// irreducible over Q so every nonzero element is a unit).
    CycNumber inverse() const;

    /// Human-readable form, e.g. "1/2 - 3*z^2 (z = zeta_6)".
    std::string str() const;

  private:
    CycNumber(std::shared_ptr<const detail::CycTable> t, std::vector<Rational> c)
        : tab_(std::move(t)), c_(std::move(c)) {}

    /// Rewrites both operands in a common modulus (one must divide the other).
    static void promote(CycNumber& a, CycNumber& b);
    CycNumber embedded_into(const std::shared_ptr<const detail::CycTable>& t) const;

    std::shared_ptr<const detail::CycTable> tab_;
    std::vector<Rational> c_;
};

inline CycNumber scalar_inverse(const CycNumber& a) { return a.inverse(); }
inline CycNumber from_rational(const Rational& q, const CycNumber&) {
    return CycNumber(q);
}

/// y^e for cyclotomic y, e of either sign.
inline CycNumber cyc_pow(const CycNumber& y, int e) {
    const CycNumber base = e >= 0 ? y : scalar_inverse(y);
    CycNumber r(1);
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) r = r * base;
    return r;
}

/// Euler's totient (small arguments; moduli here stay tiny).
int euler_phi(int d);

}  // namespace genera
