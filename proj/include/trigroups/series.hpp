#pragma once

#include "trigroups/bipoly.hpp"
#include "trigroups/cyclo.hpp"
#include "trigroups/rational.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tg {

inline constexpr int default_order = 50;

enum class Var { qt1, qt2, qt3, qhat, q, Q, z };

// Local variable of a series. The unit step of the exponents is var^(1/root),
// so q^(1/2)-series carry {Var::q, 2}.
struct Tag {
    Var var = Var::q;
    int root = 1;
    friend bool operator==(const Tag&, const Tag&) = default;
};

std::string tag_name(const Tag& t);

class tag_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational inverse(const Rational& x)
    {
        if (x == 0) {
            throw std::domain_error("division by a series with zero leading coefficient");
        }
        return Rational(1) / x;
    }
    static std::string str(const Rational& x) { return x.get_str(); }
};

template <>
struct scalar_traits<BiPoly> {
    static bool is_zero(const BiPoly& x) { return x.is_zero(); }
    static BiPoly inverse(const BiPoly& x)
    {
        if (!x.is_constant() || x.is_zero()) {
            throw std::domain_error("leading coefficient is not an invertible constant");
        }
        return BiPoly(Rational(1) / x.constant_term());
    }
    static std::string str(const BiPoly& x) { return x.to_string(); }
};

template <>
struct scalar_traits<CycloScalar> {
    static bool is_zero(const CycloScalar& x) { return x.is_zero(); }
    static CycloScalar inverse(const CycloScalar& x)
    {
        if (x.is_zero()) {
            throw std::domain_error("division by a series with zero leading coefficient");
        }
        return x.inverse();
    }
    static std::string str(const CycloScalar& x) { return x.to_string(); }
};

template <class T>
T scalar_pow(const T& base, long n)
{
    if (n < 0) {
        return scalar_pow(scalar_traits<T>::inverse(base), -n);
    }
    T result(1);
    T b = base;
    while (n > 0) {
        if (n & 1) {
            result = result * b;
        }
        n >>= 1;
        if (n > 0) {
            b = b * b;
        }
    }
    return result;
}

// Truncated Laurent series sum_{e=offset}^{order} c_e x^e + O(x^{order+1}).
template <class T>
class FormalSeries {
public:
    FormalSeries() = default;
    FormalSeries(Tag tag, int offset, std::vector<T> coeffs, int order)
        : tag_(tag), offset_(offset), order_(order), c_(std::move(coeffs))
    {
        c_.resize(static_cast<std::size_t>(std::max(0, order_ - offset_ + 1)), T(0));
    }

    static FormalSeries zero(Tag tag, int order) { return FormalSeries(tag, 0, {}, order); }
    static FormalSeries constant(Tag tag, const T& c, int order) { return FormalSeries(tag, 0, {c}, order); }
    static FormalSeries one(Tag tag, int order) { return constant(tag, T(1), order); }
    static FormalSeries monomial(Tag tag, int e, const T& c, int order)
    {
        return FormalSeries(tag, e, {c}, order);
    }

    const Tag& tag() const { return tag_; }
    int offset() const { return offset_; }
    int order() const { return order_; }
    const std::vector<T>& coeffs() const { return c_; }

    // Coefficient of x^e; zero below the offset.
    T coeff(int e) const
    {
        if (e > order_) {
            throw std::out_of_range("coefficient beyond truncation order");
        }
        if (e < offset_) {
            return T(0);
        }
        return c_[static_cast<std::size_t>(e - offset_)];
    }
    const T& at(int e) const { return c_.at(static_cast<std::size_t>(e - offset_)); }

    // Exponent of the first nonzero coefficient; order()+1 if none is known.
    int valuation() const
    {
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (!scalar_traits<T>::is_zero(c_[k])) {
                return offset_ + static_cast<int>(k);
            }
        }
        return order_ + 1;
    }
    bool is_zero() const { return valuation() > order_; }

    // Drop leading zeros so that offset() == valuation().
    FormalSeries stripped() const
    {
        int v = valuation();
        if (v == offset_) {
            return *this;
        }
        if (v > order_) {
            return FormalSeries(tag_, order_ + 1, {}, order_);
        }
        return FormalSeries(tag_, v, std::vector<T>(c_.begin() + (v - offset_), c_.end()), order_);
    }

    FormalSeries truncated(int n) const
    {
        if (n >= order_) {
            return *this;
        }
        std::vector<T> c;
        for (int e = offset_; e <= n; ++e) {
            c.push_back(at(e));
        }
        return FormalSeries(tag_, offset_, std::move(c), n);
    }

    FormalSeries retagged(Tag t) const
    {
        FormalSeries r = *this;
        r.tag_ = t;
        return r;
    }

    // Multiplication by x^m.
    FormalSeries shifted(int m) const { return FormalSeries(tag_, offset_ + m, c_, order_ + m); }

    FormalSeries operator-() const
    {
        FormalSeries r = *this;
        for (auto& c : r.c_) {
            c = -c;
        }
        return r;
    }

    FormalSeries& operator+=(const FormalSeries& o) { return *this = add(*this, o, false); }
    FormalSeries& operator-=(const FormalSeries& o) { return *this = add(*this, o, true); }
    FormalSeries& operator*=(const FormalSeries& o) { return *this = multiply(*this, o); }
    FormalSeries& operator/=(const FormalSeries& o) { return *this = multiply(*this, o.inverse()); }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) { return add(a, b, false); }
    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return add(a, b, true); }
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) { return multiply(a, b); }
    friend FormalSeries operator/(const FormalSeries& a, const FormalSeries& b) { return multiply(a, b.inverse()); }

    friend FormalSeries operator*(const FormalSeries& a, const T& s)
    {
        FormalSeries r = a;
        for (auto& c : r.c_) {
            c = c * s;
        }
        return r;
    }
    friend FormalSeries operator*(const T& s, const FormalSeries& a) { return a * s; }
    friend FormalSeries operator+(const FormalSeries& a, const T& s)
    {
        return a + constant(a.tag_, s, a.order_);
    }
    friend FormalSeries operator-(const FormalSeries& a, const T& s)
    {
        return a - constant(a.tag_, s, a.order_);
    }

    FormalSeries inverse() const
    {
        const int v = valuation();
        if (v > order_) {
            throw std::domain_error("division by a series with zero leading coefficient");
        }
        const T inv0 = scalar_traits<T>::inverse(at(v));
        const int len = order_ - v + 1;
        std::vector<T> w(static_cast<std::size_t>(len), T(0));
        w[0] = inv0;
        for (int n = 1; n < len; ++n) {
            T acc(0);
            for (int k = 1; k <= n; ++k) {
                const T& u = at(v + k);
                if (!scalar_traits<T>::is_zero(u)) {
                    acc = acc + u * w[static_cast<std::size_t>(n - k)];
                }
            }
            w[static_cast<std::size_t>(n)] = -(acc * inv0);
        }
        return FormalSeries(tag_, -v, std::move(w), order_ - 2 * v);
    }

    // x d/dx, x being the unit step of the tag.
    FormalSeries theta() const
    {
        FormalSeries r = *this;
        for (int e = offset_; e <= order_; ++e) {
            auto& c = r.c_[static_cast<std::size_t>(e - offset_)];
            c = c * T(Rational(e));
        }
        return r;
    }

    // x -> c x.
    FormalSeries rescaled(const T& c, Tag new_tag) const
    {
        FormalSeries r = *this;
        r.tag_ = new_tag;
        for (int e = offset_; e <= order_; ++e) {
            auto& v = r.c_[static_cast<std::size_t>(e - offset_)];
            if (!scalar_traits<T>::is_zero(v)) {
                v = v * scalar_pow(c, e);
            }
        }
        return r;
    }

    // x -> y^k.
    FormalSeries inflated(int k, Tag new_tag) const
    {
        if (k < 1) {
            throw std::invalid_argument("inflation factor must be positive");
        }
        const int order = k * order_ + k - 1;
        std::vector<T> c(static_cast<std::size_t>(std::max(0, order - k * offset_ + 1)), T(0));
        for (int e = offset_; e <= order_; ++e) {
            c[static_cast<std::size_t>(k * (e - offset_))] = at(e);
        }
        return FormalSeries(new_tag, k * offset_, std::move(c), order);
    }

    // y^k -> x; every nonzero exponent must be divisible by k.
    FormalSeries deflated(int k, Tag new_tag) const
    {
        if (k < 1) {
            throw std::invalid_argument("deflation factor must be positive");
        }
        auto floordiv = [k](int a) { return a >= 0 ? a / k : -((-a + k - 1) / k); };
        std::vector<T> c;
        const int off = -floordiv(-offset_);
        const int ord = floordiv(order_);
        for (int e = offset_; e <= order_; ++e) {
            if (!scalar_traits<T>::is_zero(at(e)) && e % k != 0) {
                throw std::domain_error("series has exponents not divisible by the deflation factor");
            }
        }
        for (int e = off; e <= ord; ++e) {
            c.push_back(at(k * e));
        }
        return FormalSeries(new_tag, off, std::move(c), ord);
    }

    template <class U, class F>
    FormalSeries<U> mapped(F&& f) const
    {
        std::vector<U> c;
        c.reserve(c_.size());
        for (const auto& v : c_) {
            c.push_back(f(v));
        }
        return FormalSeries<U>(tag_, offset_, std::move(c), order_);
    }

    std::string to_string(int max_terms = 8) const
    {
        std::ostringstream os;
        int shown = 0;
        for (int e = offset_; e <= order_ && shown < max_terms; ++e) {
            const T& c = at(e);
            if (scalar_traits<T>::is_zero(c)) {
                continue;
            }
            if (shown > 0) {
                os << " + ";
            }
            os << "(" << scalar_traits<T>::str(c) << ")*" << tag_name(tag_) << "^" << e;
            ++shown;
        }
        if (shown == 0) {
            os << "0";
        }
        os << " + O(" << tag_name(tag_) << "^" << order_ + 1 << ")";
        return os.str();
    }

private:
    static void check_tags(const FormalSeries& a, const FormalSeries& b)
    {
        if (!(a.tag_ == b.tag_)) {
            throw tag_mismatch("series in different variables: " + tag_name(a.tag_) + " vs " + tag_name(b.tag_));
        }
    }

    static FormalSeries add(const FormalSeries& a, const FormalSeries& b, bool subtract)
    {
        check_tags(a, b);
        const int order = std::min(a.order_, b.order_);
        const int offset = std::min(a.offset_, b.offset_);
        std::vector<T> c;
        for (int e = offset; e <= order; ++e) {
            c.push_back(subtract ? T(a.coeff(e) - b.coeff(e)) : T(a.coeff(e) + b.coeff(e)));
        }
        return FormalSeries(a.tag_, offset, std::move(c), order);
    }

    static FormalSeries multiply(const FormalSeries& a, const FormalSeries& b)
    {
        check_tags(a, b);
        const int va = a.valuation();
        const int vb = b.valuation();
        const int order = std::min(a.order_ + vb, b.order_ + va);
        const int offset = va + vb;
        const int len = order - offset + 1;
        std::vector<T> c(static_cast<std::size_t>(std::max(0, len)), T(0));
        const int la = a.order_ - va + 1;
        const int lb = b.order_ - vb + 1;
        for (int i = 0; i < std::min(la, len); ++i) {
            const T& x = a.at(va + i);
            if (scalar_traits<T>::is_zero(x)) {
                continue;
            }
            for (int j = 0; j < std::min(lb, len - i); ++j) {
                const T& y = b.at(vb + j);
                if (!scalar_traits<T>::is_zero(y)) {
                    auto& slot = c[static_cast<std::size_t>(i + j)];
                    slot = slot + x * y;
                }
            }
        }
        return FormalSeries(a.tag_, offset, std::move(c), order);
    }

    Tag tag_{};
    int offset_ = 0;
    int order_ = -1;
    std::vector<T> c_;
};

using RSeries = FormalSeries<Rational>;
using PSeries = FormalSeries<BiPoly>;
using CSeries = FormalSeries<CycloScalar>;

// Coefficient-wise equality on the common known range.
template <class T>
bool agree(const FormalSeries<T>& a, const FormalSeries<T>& b, int up_to = 1 << 30)
{
    if (!(a.tag() == b.tag())) {
        return false;
    }
    const int hi = std::min({a.order(), b.order(), up_to});
    const int lo = std::min(a.offset(), b.offset());
    for (int e = lo; e <= hi; ++e) {
        if (!(a.coeff(e) == b.coeff(e))) {
            return false;
        }
    }
    return true;
}

// s^e for a series 1 + O(x) and rational e.
template <class T>
FormalSeries<T> pow_rational(const FormalSeries<T>& s, const Rational& e)
{
    if (s.offset() > 0 || s.coeff(0) != T(1) || s.valuation() < 0) {
        throw std::domain_error("rational power needs a series with leading term 1");
    }
    const int n_max = s.order();
    std::vector<T> y(static_cast<std::size_t>(n_max + 1), T(0));
    y[0] = T(1);
    for (int n = 1; n <= n_max; ++n) {
        T acc(0);
        for (int k = 1; k <= n; ++k) {
            const T sk = s.coeff(k);
            if (!scalar_traits<T>::is_zero(sk)) {
                acc = acc + sk * y[static_cast<std::size_t>(n - k)] * T(Rational(e * k - (n - k)));
            }
        }
        y[static_cast<std::size_t>(n)] = acc * T(Rational(1, 1) / n);
    }
    return FormalSeries<T>(s.tag(), 0, std::move(y), n_max);
}

// Integer power of a series whose leading coefficient is invertible.
template <class T>
FormalSeries<T> pow_int(const FormalSeries<T>& s, long n)
{
    const int v = s.valuation();
    if (v > s.order()) {
        if (n > 0) {
            return FormalSeries<T>::zero(s.tag(), static_cast<int>(n * (s.order() + 1) - 1));
        }
        throw std::domain_error("power of a series with no known nonzero coefficient");
    }
    const T c = s.at(v);
    const T cinv = scalar_traits<T>::inverse(c);
    FormalSeries<T> u = s.shifted(-v) * cinv;
    FormalSeries<T> p = pow_rational(u, Rational(n));
    return p.shifted(static_cast<int>(n * v)) * scalar_pow(c, n);
}

// (x ds/dx) / s.
template <class T>
FormalSeries<T> log_derivative(const FormalSeries<T>& s)
{
    return s.theta() * s.inverse();
}

// Compositional inverse of s = c1 x + c2 x^2 + ... (Lagrange inversion).
template <class T>
FormalSeries<T> revert(const FormalSeries<T>& s)
{
    if (s.valuation() != 1) {
        throw std::domain_error("reversion needs a series starting at x^1");
    }
    const int N = s.order();
    FormalSeries<T> phi = s.shifted(-1).inverse();
    std::vector<T> t(static_cast<std::size_t>(N), T(0));
    FormalSeries<T> power = FormalSeries<T>::one(s.tag(), N - 1);
    for (int n = 1; n <= N; ++n) {
        power = power * phi;
        t[static_cast<std::size_t>(n - 1)] = power.coeff(n - 1) * T(Rational(1, 1) / n);
    }
    return FormalSeries<T>(s.tag(), 1, std::move(t), N);
}

// f(g(x)) for g = O(x); negative powers of f need g to start exactly at x^1.
template <class T>
FormalSeries<T> compose(const FormalSeries<T>& f, const FormalSeries<T>& g)
{
    const int vg = g.valuation();
    if (vg < 1) {
        throw std::domain_error("composition needs g(0) = 0");
    }
    if (f.offset() < 0 && vg != 1) {
        throw std::domain_error("Laurent composition needs g to start at x^1");
    }
    const int cap = vg * (f.order() + 1) - 1;
    FormalSeries<T> result = FormalSeries<T>::zero(g.tag(), cap);
    if (f.offset() < 0) {
        FormalSeries<T> ginv = g.inverse();
        FormalSeries<T> p = ginv;
        for (int e = -1; e >= f.offset(); --e) {
            if (!scalar_traits<T>::is_zero(f.coeff(e))) {
                result += p * f.coeff(e);
            }
            if (e > f.offset()) {
                p = p * ginv;
            }
        }
    }
    FormalSeries<T> p = FormalSeries<T>::one(g.tag(), cap);
    for (int e = 0; e <= f.order(); ++e) {
        if (e > 0) {
            p = p * g;
        }
        if (e >= f.offset() && !scalar_traits<T>::is_zero(f.coeff(e))) {
            result += p * f.coeff(e);
        }
    }
    return result.truncated(cap);
}

// Lift a rational series into another coefficient domain.
template <class U>
FormalSeries<U> lift(const RSeries& s)
{
    return s.mapped<U>([](const Rational& r) { return U(r); });
}

} // namespace tg
