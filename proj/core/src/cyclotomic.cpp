#include <genera/cyclotomic.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace genera {

namespace {

using Poly = std::vector<Rational>;  // dense, coeffs[k] = coefficient of x^k

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

/// Quotient and remainder of a by b (b nonzero), standard long division.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    if (b.empty()) throw std::domain_error("poly divmod: zero divisor");
    Poly q;
    if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1);
    const Rational lead_inv = scalar_inverse(b.back());
    while (a.size() >= b.size()) {
        const size_t shift = a.size() - b.size();
        const Rational c = a.back() * lead_inv;
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
        if (a.empty()) break;
        if (a.size() >= b.size() && a.back().is_zero()) trim(a);
    }
    trim(q);
    return {q, a};
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
std::tuple<Poly, Poly, Poly> ext_gcd(Poly a, Poly b) {
    Poly s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        Poly s2 = s0, t2 = t0;
        Poly qs1 = mul(q, s1), qt1 = mul(q, t1);
        s2.resize(std::max(s2.size(), qs1.size()));
        t2.resize(std::max(t2.size(), qt1.size()));
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
        for (size_t i = 0; i < qt1.size(); ++i) t2[i] -= qt1[i];
        trim(s2);
        trim(t2);
        a = b;
        b = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (a.empty()) throw std::domain_error("poly ext_gcd: gcd of zeros");
    const Rational inv = scalar_inverse(a.back());
    for (auto& c : a) c *= inv;
    for (auto& c : s0) c *= inv;
    for (auto& c : t0) c *= inv;
    return {a, s0, t0};
}

/// Phi_d via Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
Poly cyclotomic_poly(int d) {
    if (d == 1) return Poly{Rational(-1), Rational(1)};
    Poly num(d + 1);
    num[0] = Rational(-1);
    num[d] = Rational(1);
    Poly den{Rational(1)};
    for (int e = 1; e < d; ++e)
        if (d % e == 0) den = mul(den, cyclotomic_poly(e));
    auto [q, r] = divmod(num, den);
    if (!r.empty())
        throw std::logic_error("cyclotomic_poly: division not exact");
    return q;
}

}  // namespace

int euler_phi(int d) {
    if (d <= 0) throw std::domain_error("euler_phi: modulus must be positive");
    int result = d, n = d;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace detail {

const std::shared_ptr<const CycTable>& cyc_table(int d) {
    static std::map<int, std::shared_ptr<const CycTable>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    auto t = std::make_shared<CycTable>();
    t->d = d;
    t->phi_poly = cyclotomic_poly(d);
    t->phi = static_cast<int>(t->phi_poly.size()) - 1;
    // Reduction rows: x^{phi + j} mod Phi_d for j = 0 .. phi - 2 (enough to
    // reduce any product of two reduced elements).
    if (t->phi >= 1) {
        std::vector<Rational> cur(t->phi);  // x^phi mod Phi = -(low part)
        for (int i = 0; i < t->phi; ++i) cur[i] = -t->phi_poly[i];
        for (int j = 0; j + 1 < t->phi; ++j) {
            t->red.push_back(cur);
            // multiply by x, reduce the overflowing x^phi term
            std::vector<Rational> nxt(t->phi);
            for (int i = 0; i + 1 < t->phi; ++i) nxt[i + 1] = cur[i];
            const Rational top = cur[t->phi - 1];
            if (!top.is_zero())
                for (int i = 0; i < t->phi; ++i)
                    nxt[i] += top * (-t->phi_poly[i]);
            cur = std::move(nxt);
        }
        if (t->phi == 1) t->red.push_back(cur);  // unused, keeps row 0 valid
    }
    return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace detail

CycNumber CycNumber::from_coeffs(int d, std::vector<Rational> coeffs) {
    const auto& t = detail::cyc_table(d);
    if (static_cast<int>(coeffs.size()) != t->phi)
        throw std::invalid_argument("CycNumber: coefficient list must have length phi(d)");
    return CycNumber(t, std::move(coeffs));
}

CycNumber CycNumber::zeta(int d, long power) {
    const auto& t = detail::cyc_table(d);
    long e = power % d;
    if (e < 0) e += d;
    // Build x^e and reduce mod Phi_d by repeated multiplication-by-x rows.
    std::vector<Rational> c(t->phi);
    if (e < t->phi) {
        c[e] = Rational(1);
        return CycNumber(t, std::move(c));
    }
    // e >= phi: walk up using the reduction rows.
    std::vector<Rational> cur(t->phi);
    cur = t->red.at(0);  // x^phi
    for (long k = t->phi; k < e; ++k) {
        std::vector<Rational> nxt(t->phi);
        for (int i = 0; i + 1 < t->phi; ++i) nxt[i + 1] = cur[i];
        const Rational top = cur[t->phi - 1];
        if (!top.is_zero())
            for (int i = 0; i < t->phi; ++i) nxt[i] += top * (-t->phi_poly[i]);
        cur = std::move(nxt);
    }
    return CycNumber(t, std::move(cur));
}

CycNumber CycNumber::minus_zeta_pow(int N, long beta) {
    if (N < 2) throw std::domain_error("minus_zeta_pow: N must be >= 2");
    const int d = std::lcm(2, N);
    const long e = (d / 2 + beta * (d / N)) % d;
    return zeta(d, e);
}

CycNumber CycNumber::embedded_into(
    const std::shared_ptr<const detail::CycTable>& t) const {
    if (t->d == tab_->d) return *this;
    if (t->d % tab_->d != 0)
        throw std::domain_error("CycNumber: incompatible moduli " +
                                std::to_string(tab_->d) + " and " +
                                std::to_string(t->d));
    const long step = t->d / tab_->d;  // zeta_old = zeta_new^step
    CycNumber acc(t, std::vector<Rational>(t->phi));
    for (int k = 0; k < static_cast<int>(c_.size()); ++k) {
        if (c_[k].is_zero()) continue;
        CycNumber term = zeta(t->d, step * k);
        for (auto& coef : term.c_) coef *= c_[k];
        acc = acc + term;
    }
    return acc;
}

void CycNumber::promote(CycNumber& a, CycNumber& b) {
    if (a.tab_->d == b.tab_->d) return;
    if (b.tab_->d % a.tab_->d == 0) {
        a = a.embedded_into(b.tab_);
    } else if (a.tab_->d % b.tab_->d == 0) {
        b = b.embedded_into(a.tab_);
    } else {
        const int l = std::lcm(a.tab_->d, b.tab_->d);
        const auto& t = detail::cyc_table(l);
        a = a.embedded_into(t);
        b = b.embedded_into(t);
    }
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    CycNumber a = *this, b = o;
    promote(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    CycNumber a = *this, b = o;
    promote(a, b);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
    return a;
}

CycNumber CycNumber::operator-() const {
    CycNumber a = *this;
    for (auto& c : a.c_) c = -c;
    return a;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    CycNumber a = *this, b = o;
    promote(a, b);
    const auto& t = a.tab_;
    const int phi = t->phi;
    std::vector<Rational> conv(2 * phi - 1);
    for (int i = 0; i < phi; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; j < phi; ++j) {
            if (b.c_[j].is_zero()) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    std::vector<Rational> out(phi);
    for (int k = 0; k < phi && k < static_cast<int>(conv.size()); ++k)
        out[k] = conv[k];
    for (int k = phi; k < static_cast<int>(conv.size()); ++k) {
        if (conv[k].is_zero()) continue;
        const auto& row = t->red[k - phi];
        for (int i = 0; i < phi; ++i) out[i] += conv[k] * row[i];
    }
    return CycNumber(t, std::move(out));
}

CycNumber CycNumber::operator/(const CycNumber& o) const {
    return *this * o.inverse();
}

bool CycNumber::operator==(const CycNumber& o) const {
    CycNumber a = *this, b = o;
    promote(a, b);
    return a.c_ == b.c_;
}

bool CycNumber::is_zero() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

bool CycNumber::is_one() const {
    if (!c_[0].is_one()) return false;
    return std::all_of(c_.begin() + 1, c_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

std::optional<Rational> CycNumber::as_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return std::nullopt;
    return c_[0];
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycNumber: inverse of zero");
    if (auto q = as_rational(); q && tab_->phi == 1)
        return CycNumber(tab_, {scalar_inverse(*q)});
    std::vector<Rational> a(c_);
    auto [g, s, t] = ext_gcd(a, tab_->phi_poly);
    if (g.size() != 1)
        throw std::logic_error("CycNumber: element not invertible (Phi_d reducible?)");
    // s * this = g = 1 modulo Phi_d after the monic normalization in ext_gcd.
    s.resize(tab_->phi);
    CycNumber inv(tab_, std::move(s));
    return inv;
}

std::string CycNumber::str() const {
    if (auto q = as_rational()) return q->str();
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[k].str();
        if (k >= 1) os << "*z" << (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (first) os << "0";
    os << " (z = zeta_" << tab_->d << ")";
    return os.str();
}

}  // namespace genera
