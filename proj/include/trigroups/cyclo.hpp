#pragma once

#include "trigroups/rational.hpp"

#include <array>
#include <string>

namespace tg {

// Element r0 + r1 i + r2 sqrt3 + r3 i sqrt3 of Q(i, sqrt3).
class CycloScalar {
public:
    CycloScalar() : r_{0, 0, 0, 0} {}
    CycloScalar(const Rational& c) : r_{c, 0, 0, 0} {}
    CycloScalar(long c) : CycloScalar(Rational(c)) {}
    CycloScalar(const Rational& r0, const Rational& r1, const Rational& r2, const Rational& r3)
        : r_{r0, r1, r2, r3}
    {
    }

    static CycloScalar i() { return {0, 1, 0, 0}; }
    static CycloScalar sqrt3() { return {0, 0, 1, 0}; }
    static CycloScalar i_sqrt3() { return {0, 0, 0, 1}; }

    const Rational& operator[](int k) const { return r_[static_cast<std::size_t>(k)]; }

    bool is_zero() const { return r_[0] == 0 && r_[1] == 0 && r_[2] == 0 && r_[3] == 0; }
    bool is_rational() const { return r_[1] == 0 && r_[2] == 0 && r_[3] == 0; }

    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }
    CycloScalar& operator/=(const CycloScalar& o) { return *this = *this * o.inverse(); }

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * b.inverse(); }
    CycloScalar operator-() const { return {-r_[0], -r_[1], -r_[2], -r_[3]}; }

    friend bool operator==(const CycloScalar& a, const CycloScalar& b) { return a.r_ == b.r_; }

    // Complex conjugation (i -> -i).
    CycloScalar conj() const { return {r_[0], -r_[1], r_[2], -r_[3]}; }
    // The automorphism sqrt3 -> -sqrt3.
    CycloScalar galois_sqrt3() const { return {r_[0], r_[1], -r_[2], -r_[3]}; }
    Rational norm() const;
    CycloScalar inverse() const;

    // All components integral. Z[i, sqrt3] sits inside the ring of integers,
    // so this is a sufficient integrality test (not a necessary one).
    bool has_integer_components() const;

    std::string to_string() const;
    std::array<std::string, 4> component_strings() const;

private:
    std::array<Rational, 4> r_;
};

} // namespace tg
