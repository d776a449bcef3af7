#pragma once

#include "trigroups/bipoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace tg {

// N(w) / (c * prod_j (w - j^2)^{e_j}) with N a polynomial in w whose
// coefficients are BiPoly in (gamma+, gamma-). Used for the coefficients of
// the expansion at an elliptic third vertex, where w = v3^2 stays symbolic.
class WRational {
public:
    WRational() = default;
    WRational(const BiPoly& p) : num_{p} { trim(); }
    WRational(const Rational& r) : WRational(BiPoly(r)) {}
    WRational(long r) : WRational(BiPoly(r)) {}

    static WRational w();

    const std::vector<BiPoly>& numerator() const { return num_; }
    const Rational& denominator_constant() const { return den_const_; }
    const std::map<int, int>& denominator_factors() const { return den_; }

    bool is_zero() const { return num_.empty(); }

    friend WRational operator+(const WRational& a, const WRational& b);
    friend WRational operator-(const WRational& a, const WRational& b) { return a + (-b); }
    friend WRational operator*(const WRational& a, const WRational& b);
    WRational operator-() const;

    // Exact when the numerator splits as a constant times factors (w - j^2).
    WRational inverse() const;

    // Removes common (w - j^2) factors.
    WRational reduced() const;

    // Cross-multiplied comparison; independent of representation.
    friend bool operator==(const WRational& a, const WRational& b);

    // Specialize w to a rational value; throws at a pole.
    BiPoly eval_w(const Rational& w) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<BiPoly> num_;
    Rational den_const_ = 1;
    std::map<int, int> den_;
};

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<WRational> {
    static bool is_zero(const WRational& x) { return x.is_zero(); }
    static WRational inverse(const WRational& x) { return x.inverse(); }
    static std::string str(const WRational& x) { return x.to_string(); }
};

} // namespace tg
