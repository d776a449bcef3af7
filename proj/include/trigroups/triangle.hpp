#pragma once

#include "trigroups/bigfloat.hpp"
#include "trigroups/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace tg {

// Order of a stabilizer; 0 stands for infinity (a cusp).
inline constexpr int INF = 0;

struct TriangleType {
    std::array<int, 3> m{2, 3, INF};

    bool is_cusp(int i) const { return m[static_cast<std::size_t>(i)] == INF; }
    bool has_cusp() const { return is_cusp(0) || is_cusp(1) || is_cusp(2); }
    // v_i = 1/m_i (0 at a cusp); i is 0-based.
    Rational v(int i) const;
    std::string to_string() const;
    friend bool operator==(const TriangleType&, const TriangleType&) = default;
};

class invalid_type : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Classification {
    bool hyperbolic = false;
    std::string reason;
    TriangleType original;
    TriangleType canonical;      // m1 <= m2 <= m3, infinity last
    std::array<int, 3> perm{};   // canonical.m[k] == original.m[perm[k]]
};

// Throws invalid_type when some m_i < 2.
Classification classify(int m1, int m2, int m3);

// Parses "2,3,inf"; throws invalid_type on malformed text or a
// non-hyperbolic type.
TriangleType parse_type(const std::string& text);

// a + sum_d r_d sqrt(d) over squarefree d > 1; closed under + and *.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& r);
    static Surd sqrt_of(long d); // d a positive integer

    const std::map<long, Rational>& terms() const { return t_; }
    bool is_rational() const;
    Rational rational_part() const;

    friend Surd operator+(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a, const Surd& b);
    friend Surd operator*(const Surd& a, const Surd& b);
    Surd operator-() const;
    friend bool operator==(const Surd&, const Surd&) = default;

    Real value() const;
    std::string to_string() const;

private:
    void add(long d, const Rational& c);
    std::map<long, Rational> t_;
};

// 2cos(pi/m) exactly when m in {2,3,4,5,6,inf}.
std::optional<Surd> two_cos_pi_over(int m);
Real two_cos_pi_over_real(int m);

template <class T>
struct Mat2 {
    T a, b, c, d;
    friend Mat2 operator*(const Mat2& x, const Mat2& y)
    {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

template <class T>
Mat2<T> mat_pow(const Mat2<T>& x, int n)
{
    Mat2<T> r{T(1), T(0), T(0), T(1)};
    for (int k = 0; k < n; ++k) {
        r = r * x;
    }
    return r;
}

struct GroupData {
    TriangleType type;
    std::array<Rational, 3> v;
    Rational a, b, c;            // Halphen parameters
    Rational ha, hb, hc;         // hypergeometric parameters at the cusp
    std::optional<Surd> h3;      // cusp width, exact when available
    Real h3_real;
    std::optional<Rational> h2;  // width of zeta_2 when m2 is infinite
    Complex zeta1, zeta2;        // zeta_3 = i infinity
    // Generators; exact entries when 2cos(pi v_i) is a surd.
    bool exact_generators = false;
    std::array<Mat2<Surd>, 3> gens;
    std::array<Mat2<Real>, 3> gens_real;
};

GroupData group_data(const TriangleType& t);

// True iff t is one of the nine cusped types commensurable with the modular group.
// Throws invalid_type for cocompact types.
bool is_arithmetic(const TriangleType& t);

} // namespace tg
