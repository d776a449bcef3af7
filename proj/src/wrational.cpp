#include "trigroups/wrational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace tg {

namespace {

using WPoly = std::vector<BiPoly>;

void trim_poly(WPoly& p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

WPoly poly_mul(const WPoly& a, const WPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    WPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim_poly(r);
    return r;
}

// Multiply by (w - j^2)^e.
WPoly times_factor(WPoly p, int j, int e)
{
    const WPoly f{BiPoly(Rational(-j * j)), BiPoly(1)};
    for (int k = 0; k < e; ++k) {
        p = poly_mul(p, f);
    }
    return p;
}

// Exact division by (w - r), or nullopt.
std::optional<WPoly> divide_root(const WPoly& p, const Rational& r)
{
    if (p.empty()) {
        return WPoly{};
    }
    WPoly q(p.size() - 1);
    BiPoly carry;
    for (std::size_t k = p.size(); k-- > 1;) {
        carry = p[k] + carry * r;
        q[k - 1] = carry;
    }
    BiPoly rem = p[0] + carry * r;
    if (!rem.is_zero()) {
        return std::nullopt;
    }
    return q;
}

} // namespace

WRational WRational::w()
{
    WRational r;
    r.num_ = {BiPoly(), BiPoly(1)};
    return r;
}

void WRational::trim()
{
    trim_poly(num_);
    if (num_.empty()) {
        den_.clear();
        den_const_ = 1;
    }
}

WRational operator+(const WRational& a, const WRational& b)
{
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    WRational r;
    r.den_ = a.den_;
    for (const auto& [j, e] : b.den_) {
        r.den_[j] = std::max(r.den_[j], e);
    }
    r.den_const_ = a.den_const_ * b.den_const_;
    auto lift = [&](const WRational& x, const Rational& scale) {
        WPoly p = x.num_;
        for (auto& c : p) {
            c *= scale;
        }
        for (const auto& [j, e] : r.den_) {
            auto it = x.den_.find(j);
            int have = it == x.den_.end() ? 0 : it->second;
            p = times_factor(p, j, e - have);
        }
        return p;
    };
    WPoly pa = lift(a, b.den_const_);
    WPoly pb = lift(b, a.den_const_);
    r.num_.assign(std::max(pa.size(), pb.size()), BiPoly());
    for (std::size_t k = 0; k < pa.size(); ++k) {
        r.num_[k] += pa[k];
    }
    for (std::size_t k = 0; k < pb.size(); ++k) {
        r.num_[k] += pb[k];
    }
    r.trim();
    return r.reduced();
}

WRational operator*(const WRational& a, const WRational& b)
{
    WRational r;
    r.num_ = poly_mul(a.num_, b.num_);
    if (r.num_.empty()) {
        return r;
    }
    r.den_const_ = a.den_const_ * b.den_const_;
    r.den_ = a.den_;
    for (const auto& [j, e] : b.den_) {
        r.den_[j] += e;
    }
    return r.reduced();
}

WRational WRational::operator-() const
{
    WRational r = *this;
    for (auto& c : r.num_) {
        c = -c;
    }
    return r;
}

WRational WRational::reduced() const
{
    WRational r = *this;
    for (auto it = r.den_.begin(); it != r.den_.end();) {
        while (it->second > 0) {
            auto q = divide_root(r.num_, Rational(it->first * it->first));
            if (!q) {
                break;
            }
            r.num_ = *q;
            --it->second;
        }
        it = it->second == 0 ? r.den_.erase(it) : std::next(it);
    }
    return r;
}

WRational WRational::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero rational function");
    }
    WPoly p = num_;
    std::map<int, int> factors;
    const int bound = 4096;
    for (int j = 0; j <= bound && p.size() > 1; ++j) {
        while (p.size() > 1) {
            auto q = divide_root(p, Rational(j * j));
            if (!q) {
                break;
            }
            p = *q;
            ++factors[j];
        }
    }
    if (p.size() != 1 || !p[0].is_constant()) {
        throw std::domain_error("rational function is not invertible in the pivot ring");
    }
    WRational r;
    r.num_ = {BiPoly(den_const_)};
    for (const auto& [j, e] : den_) {
        r.num_ = times_factor(r.num_, j, e);
    }
    r.den_const_ = p[0].constant_term();
    r.den_ = factors;
    r.trim();
    return r.reduced();
}

bool operator==(const WRational& a, const WRational& b)
{
    WPoly lhs = a.num_;
    for (auto& c : lhs) {
        c *= b.den_const_;
    }
    for (const auto& [j, e] : b.den_) {
        lhs = times_factor(lhs, j, e);
    }
    WPoly rhs = b.num_;
    for (auto& c : rhs) {
        c *= a.den_const_;
    }
    for (const auto& [j, e] : a.den_) {
        rhs = times_factor(rhs, j, e);
    }
    trim_poly(lhs);
    trim_poly(rhs);
    return lhs == rhs;
}

BiPoly WRational::eval_w(const Rational& w) const
{
    Rational d = den_const_;
    for (const auto& [j, e] : den_) {
        d *= pow(w - j * j, e);
    }
    if (d == 0) {
        throw std::domain_error("rational function evaluated at a pole");
    }
    BiPoly s;
    Rational wk = 1;
    for (const auto& c : num_) {
        s += c * wk;
        wk *= w;
    }
    return s / d;
}

std::string WRational::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (std::size_t k = 0; k < num_.size(); ++k) {
        if (num_[k].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << num_[k].to_string("gp", "gm") << ")";
        if (k > 0) {
            os << "*w";
            if (k > 1) {
                os << "^" << k;
            }
        }
    }
    os << ")/(" << den_const_.get_str();
    for (const auto& [j, e] : den_) {
        os << "*(w-" << j * j << ")";
        if (e > 1) {
            os << "^" << e;
        }
    }
    os << ")";
    return os.str();
}

} // namespace tg
