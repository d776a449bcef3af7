#include "trigroups/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tg {

BiPoly::BiPoly(const Rational& c)
{
    if (c != 0) {
        terms_.emplace(Exponent{0, 0}, c);
    }
}

BiPoly BiPoly::monomial(int i, int j, const Rational& c)
{
    if (i < 0 || j < 0) {
        throw std::invalid_argument("BiPoly exponents must be non-negative");
    }
    BiPoly p;
    if (c != 0) {
        p.terms_.emplace(Exponent{i, j}, c);
    }
    return p;
}

bool BiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Rational BiPoly::coeff(int i, int j) const
{
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_x() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e.first);
    }
    return d;
}

int BiPoly::degree_y() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e.second);
    }
    return d;
}

int BiPoly::total_degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e.first + e.second);
    }
    return d;
}

void BiPoly::add_term(const Exponent& e, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o)
{
    for (const auto& [e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        }
    }
    return r;
}

BiPoly& BiPoly::operator*=(const BiPoly& o)
{
    *this = *this * o;
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) {
        v *= c;
    }
    return *this;
}

BiPoly& BiPoly::operator/=(const Rational& c)
{
    if (c == 0) {
        throw std::domain_error("BiPoly division by zero");
    }
    for (auto& [e, v] : terms_) {
        v /= c;
    }
    return *this;
}

BiPoly BiPoly::operator-() const
{
    BiPoly r = *this;
    for (auto& [e, v] : r.terms_) {
        v = -v;
    }
    return r;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const
{
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        s += c * pow(x, e.first) * pow(y, e.second);
    }
    return s;
}

BiPoly BiPoly::scale(const Rational& sx, const Rational& sy) const
{
    BiPoly r;
    for (const auto& [e, c] : terms_) {
        r.add_term(e, c * pow(sx, e.first) * pow(sy, e.second));
    }
    return r;
}

BiPoly BiPoly::swap_xy() const
{
    BiPoly r;
    for (const auto& [e, c] : terms_) {
        r.terms_.emplace(Exponent{e.second, e.first}, c);
    }
    return r;
}

BiPoly BiPoly::compose(const BiPoly& px, const BiPoly& py) const
{
    BiPoly r;
    std::map<int, BiPoly> xp{{0, BiPoly(1)}};
    std::map<int, BiPoly> yp{{0, BiPoly(1)}};
    auto power = [](std::map<int, BiPoly>& cache, const BiPoly& base, int n) -> const BiPoly& {
        int have = cache.rbegin()->first;
        while (have < n) {
            cache[have + 1] = cache[have] * base;
            ++have;
        }
        return cache[n];
    };
    for (const auto& [e, c] : terms_) {
        r += power(xp, px, e.first) * power(yp, py, e.second) * c;
    }
    return r;
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& d) const
{
    if (d.is_zero()) {
        throw std::domain_error("BiPoly division by zero polynomial");
    }
    // Lex order, Y before X. If d divides r, LT(d) divides LT(r).
    auto leading = [](const BiPoly& p) {
        return *std::max_element(p.terms_.begin(), p.terms_.end(), [](const auto& a, const auto& b) {
            return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
        });
    };
    const auto [de, dc] = leading(d);
    BiPoly q;
    BiPoly r = *this;
    while (!r.is_zero()) {
        const auto [re, rc] = leading(r);
        if (re.first < de.first || re.second < de.second) {
            return std::nullopt;
        }
        BiPoly t = monomial(re.first - de.first, re.second - de.second, rc / dc);
        q += t;
        r -= t * d;
    }
    return q;
}

BiPoly BiPoly::at_infinity_y() const
{
    int dy = degree_y();
    BiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.second == dy) {
            r.add_term({e.first, 0}, c);
        }
    }
    return r;
}

BiPoly BiPoly::at_infinity_x() const
{
    int dx = degree_x();
    BiPoly r;
    for (const auto& [e, c] : terms_) {
        if (e.first == dx) {
            r.add_term({0, e.second}, c);
        }
    }
    return r;
}

Rational BiPoly::at_infinity_both() const
{
    std::map<int, Rational> diag;
    for (const auto& [e, c] : terms_) {
        diag[e.first + e.second] += c;
    }
    for (auto it = diag.rbegin(); it != diag.rend(); ++it) {
        if (it->second != 0) {
            return it->second;
        }
    }
    return 0;
}

std::string BiPoly::to_string(const std::string& xname, const std::string& yname) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        if (!first) {
            os << (c < 0 ? " - " : " + ");
        } else if (c < 0) {
            os << "-";
        }
        first = false;
        bool unit = (a == 1) && (e.first + e.second > 0);
        if (!unit) {
            os << a.get_str();
        }
        auto put = [&](const std::string& name, int p, bool need_star) {
            if (p == 0) {
                return need_star;
            }
            if (need_star) {
                os << "*";
            }
            os << name;
            if (p > 1) {
                os << "^" << p;
            }
            return true;
        };
        bool star = put(xname, e.first, !unit);
        put(yname, e.second, star);
    }
    return os.str();
}

} // namespace tg
