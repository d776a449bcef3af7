#pragma once

#include "trigroups/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace tg {

// Polynomial in two commuting symbols X, Y with rational coefficients.
// Zero coefficients are never stored.
class BiPoly {
public:
    using Exponent = std::pair<int, int>;
    using TermMap = std::map<Exponent, Rational>;

    BiPoly() = default;
    BiPoly(const Rational& c);
    BiPoly(long c) : BiPoly(Rational(c)) {}

    static BiPoly monomial(int i, int j, const Rational& c = 1);
    static BiPoly x() { return monomial(1, 0); }
    static BiPoly y() { return monomial(0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational coeff(int i, int j) const;
    Rational constant_term() const { return coeff(0, 0); }

    int degree_x() const;
    int degree_y() const;
    int total_degree() const;

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& c);
    BiPoly& operator/=(const Rational& c);

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
    friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
    friend BiPoly operator/(BiPoly a, const Rational& c) { return a /= c; }
    BiPoly operator-() const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    Rational eval(const Rational& x, const Rational& y) const;

    // (X, Y) -> (sx X, sy Y).
    BiPoly scale(const Rational& sx, const Rational& sy) const;
    BiPoly swap_xy() const;

    // Substitute polynomials for X and Y.
    BiPoly compose(const BiPoly& px, const BiPoly& py) const;

    // Exact quotient, or nullopt when d does not divide *this.
    std::optional<BiPoly> divide_exact(const BiPoly& d) const;

    // Value "at Y = infinity": the coefficient of the highest power of Y,
    // as a polynomial in X.
    BiPoly at_infinity_y() const;
    // Value at X = infinity, as a polynomial in Y.
    BiPoly at_infinity_x() const;
    // Value at X = Y = infinity: leading coefficient of P(t, t).
    Rational at_infinity_both() const;

    std::string to_string(const std::string& xname = "X", const std::string& yname = "Y") const;

private:
    void add_term(const Exponent& e, const Rational& c);
    TermMap terms_;
};

} // namespace tg
