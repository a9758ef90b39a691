/// @file qseries.hpp
/// @brief Truncated power series with exact coefficients in a pluggable ring.
///
/// A QSeries is either *exact* (a polynomial: all omitted coefficients are
/// genuinely zero) or *truncated* at a declared order Q (coefficients beyond
/// Q are unknown).  Arithmetic propagates exactness: exact op exact stays
/// exact; anything touching a truncated operand truncates at the smallest
/// order in play.  All arithmetic is exact within the truncation window.

#pragma once

#include <genera/scalar.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace genera {

template <ring_scalar S>
class QSeries {
  public:
    /// Exact zero.
    QSeries() : exact_(true) {}
    /// Truncated zero of the given order (order+1 stored coefficients).
    QSeries(char var, int order) : var_(var), c_(order + 1), exact_(false) {
        if (order < 0) throw std::domain_error("QSeries: negative order");
    }

    static QSeries constant(char var, const S& c) {
        QSeries s;
        s.var_ = var;
        if (!c.is_zero()) s.c_ = {c};
        return s;
    }
    static QSeries monomial(char var, int k, const S& c) {
        QSeries s;
        s.var_ = var;
        if (!c.is_zero()) {
            s.c_.resize(k + 1);
            s.c_[k] = c;
        }
        return s;
    }
    /// Truncated series with the given coefficient window c[0..Q].
    static QSeries truncated(char var, std::vector<S> coeffs) {
        if (coeffs.empty()) throw std::domain_error("QSeries: empty window");
        QSeries s;
        s.var_ = var;
        s.c_ = std::move(coeffs);
        s.exact_ = false;
        return s;
    }

    char var() const { return var_; }
    bool exact() const { return exact_; }
    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (c_.empty() || !(c_[0] == from_rational_as<S>(Rational(1)))) return false;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }

    /// Truncation order; meaningless (and an error to query) when exact.
    int order() const {
        if (exact_) throw std::domain_error("QSeries: exact value has no order");
        return static_cast<int>(c_.size()) - 1;
    }

    const S& coeff(int k) const {
        static const S zero{};
        if (k < 0) throw std::domain_error("QSeries: negative index");
        if (k >= static_cast<int>(c_.size())) {
            if (exact_) return zero;
            throw std::domain_error("QSeries: coefficient beyond truncation order");
        }
        return c_[k];
    }

    /// Reinterprets an exact polynomial as a truncated series of given order.
    QSeries as_truncated(int order) const {
        QSeries s(var_, order);
        for (int k = 0; k <= order && k < static_cast<int>(c_.size()); ++k)
            s.c_[k] = c_[k];
        if (!exact_ && order > static_cast<int>(c_.size()) - 1)
            throw std::domain_error("QSeries: cannot extend a truncated series");
        return s;
    }

    QSeries operator+(const QSeries& o) const { return combined(o, false); }
    QSeries operator-(const QSeries& o) const { return combined(o, true); }
    QSeries operator-() const {
        QSeries r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    QSeries operator*(const QSeries& o) const {
        QSeries r;
        r.var_ = pick_var(o);
        // An empty coefficient vector only occurs for the exact zero, which
        // absorbs multiplicatively.
        if (c_.empty() || o.c_.empty()) return r;
        r.exact_ = exact_ && o.exact_;
        size_t n;
        if (r.exact_) {
            n = c_.size() + o.c_.size() - 1;
        } else {
            n = std::min(window(*this), window(o));
        }
        r.c_.resize(n);
        for (size_t i = 0; i < c_.size() && i < n; ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size() && i + j < n; ++j) {
                if (o.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
            }
        }
        r.trim();
        return r;
    }

    QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
    QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
    QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

    QSeries scaled(const S& c) const {
        QSeries r = *this;
        for (auto& x : r.c_) x = x * c;
        r.trim();
        return r;
    }

    /// Multiplicative inverse of a truncated series with invertible constant
    /// term (or of an exact constant).
    QSeries inverse() const {
        if (c_.empty()) throw std::domain_error("QSeries: inverse of zero");
        if (exact_) {
            if (c_.size() == 1) return constant(var_, scalar_inverse(c_[0]));
            throw std::domain_error(
                "QSeries: inverse of an exact non-constant; truncate first");
        }
        QSeries r(var_, order());
        const S inv0 = scalar_inverse(c_[0]);
        r.c_[0] = inv0;
        for (int k = 1; k <= order(); ++k) {
            S acc{};
            for (int i = 1; i <= k; ++i) {
                if (i < static_cast<int>(c_.size()) && !c_[i].is_zero())
                    acc = acc + c_[i] * r.c_[k - i];
            }
            r.c_[k] = -(inv0 * acc);
        }
        return r;
    }

    bool operator==(const QSeries& o) const {
        if (exact_ != o.exact_) {
            const QSeries& ex = exact_ ? *this : o;
            const QSeries& tr = exact_ ? o : *this;
            if (ex.c_.size() > tr.c_.size()) return false;
            for (size_t i = 0; i < tr.c_.size(); ++i) {
                const S& e = i < ex.c_.size() ? ex.c_[i] : S{};
                if (!(e == tr.c_[i])) return false;
            }
            return true;
        }
        if (!exact_ && c_.size() != o.c_.size()) return false;
        return c_ == o.c_;
    }
    bool operator!=(const QSeries& o) const { return !(*this == o); }

    template <typename F>
    auto map(F f) const {
        using S2 = decltype(f(std::declval<S>()));
        QSeries<S2> r;
        std::vector<S2> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        if (exact_) {
            QSeries<S2> e = QSeries<S2>::constant(var_, S2{});
            for (int k = static_cast<int>(out.size()) - 1; k >= 0; --k)
                e = e + QSeries<S2>::monomial(var_, k, out[k]);
            return e;
        }
        return QSeries<S2>::truncated(var_, std::move(out));
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ", ";
            if constexpr (requires(const S& x) { x.str(); })
                os << c_[i].str();
            else
                os << c_[i];
        }
        os << "]";
        if (!exact_) os << " + O(" << var_ << "^" << c_.size() << ")";
        return os.str();
    }

  private:
    static size_t window(const QSeries& s) {
        return s.exact_ ? static_cast<size_t>(-1) : s.c_.size();
    }
    char pick_var(const QSeries& o) const {
        if (exact_ && c_.size() <= 1) return o.var_;
        if (o.exact_ && o.c_.size() <= 1) return var_;
        if (var_ != o.var_ && !c_.empty() && !o.c_.empty())
            throw std::domain_error(std::string("QSeries: mixed variables '") +
                                    var_ + "' and '" + o.var_ + "'");
        return var_;
    }
    void trim() {
        if (!exact_) return;
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    QSeries combined(const QSeries& o, bool subtract) const {
        QSeries r;
        r.var_ = pick_var(o);
        r.exact_ = exact_ && o.exact_;
        size_t n;
        if (r.exact_)
            n = std::max(c_.size(), o.c_.size());
        else
            n = std::min(window(*this), window(o));
        r.c_.resize(n);
        for (size_t i = 0; i < n; ++i) {
            const S& a = i < c_.size() ? c_[i] : S{};
            const S& b = i < o.c_.size() ? o.c_[i] : S{};
            r.c_[i] = subtract ? a - b : a + b;
        }
        r.trim();
        return r;
    }

    char var_ = 'q';
    std::vector<S> c_;
    bool exact_ = true;
};

template <ring_scalar S>
QSeries<S> scalar_inverse(const QSeries<S>& s) {
    return s.inverse();
}

template <ring_scalar S>
QSeries<S> from_rational(const Rational& q, const QSeries<S>&) {
    return QSeries<S>::constant('q', from_rational_as<S>(q));
}

}  // namespace genera
