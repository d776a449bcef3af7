#pragma once

#include "trigroups/bigfloat.hpp"
#include "trigroups/triangle.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace tg {

class hyp_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Gauss's finite formula for psi(m/n), 0 < m < n.
Real digamma_rational(long m, long n);
// psi at any rational that is not a non-positive integer.
Real digamma(const Rational& x);
// Gamma and 1/Gamma at rationals; 1/Gamma vanishes at the poles.
Real gamma_rational(const Rational& x);
Real rgamma_rational(const Rational& x);

enum class HypRoute { direct, one_minus_z, inverse_z, continuation };

// |z| <= 1/2 direct, |1-z| <= 1/2 via 1-z, |z| >= 2 via 1/z, otherwise
// Taylor continuation of the Gauss equation along the ray from 0.
HypRoute hyp2f1_route(const Complex& z);

// Principal branch of 2F1 on C minus [1, inf).
Complex hyp2f1(const Rational& a, const Rational& b, const Rational& c, const Complex& z);

// The individual evaluators, exposed for overlap checks.
Complex hyp2f1_series(const Rational& a, const Rational& b, const Rational& c, const Complex& z);
Complex hyp2f1_one_minus_z(const Rational& a, const Rational& b, const Rational& c, const Complex& z);
Complex hyp2f1_inverse_z(const Rational& a, const Rational& b, const Rational& c, const Complex& z);
Complex hyp2f1_continued(const Rational& a, const Rational& b, const Rational& c, const Complex& z);

// Value and derivative of a solution of the Gauss equation.
struct Jet {
    Complex y, dy;
};

// Carries (y, y') along the straight segments through the given points.
Jet gauss_continue(const Rational& a, const Rational& b, const Rational& c, Jet start,
                   const std::vector<Complex>& path);

enum class CuspCount { inf0 = 0, inf1 = 1, inf2 = 2, inf3 = 3 };

struct ConnectionCase {
    CuspCount tag = CuspCount::inf0;
    Rational a, b, c;
};

// Validates the case invariants; throws std::invalid_argument.
ConnectionCase make_case(CuspCount tag, const Rational& a, const Rational& b, const Rational& c);
// Parameters for a type, taken in the order m1 <= m2 <= m3:
// a, b = (1 - v1 - v2 +- v3)/2, c = 1 - v1.
ConnectionCase connection_case(const TriangleType& t);

// u1 = F(a,b,c;z), u2 = z^(1-c) F(a-c+1,b-c+1,2-c;z); for inf^3 u2 = i F(1/2,1/2,1;1-z).
std::array<Jet, 2> local_solutions(const ConnectionCase& cc, const Complex& z);

// The displayed log series for u2 of case inf^3 (|z| < 1).
Complex inf3_u2_log_series(const Complex& z);

using CMat = Mat2<Complex>;

CMat inverse(const CMat& m);
Complex trace(const CMat& m);
Complex det(const CMat& m);
Real max_abs_diff(const CMat& x, const CMat& y);

// u = A w near z = 1, where w is the local basis at 1: (F(..;1-z), (1-z)^(c-a-b) F(..;1-z))
// or, when c = a + b, (F(a,b;1;1-z), the logarithmic solution).
CMat connection_to_one(const ConnectionCase& cc);
// The same matrix from the Gamma-function coefficients (c - a - b non-integral only).
CMat connection_to_one_closed_form(const ConnectionCase& cc);

struct Monodromy {
    CMat M0, M1, Minf;
};

// Matrices act on the row (u1, u2) from the right, loops counterclockwise.
// M1 comes from the connection at z = 1, Minf = M1^-1 M0^-1; inf^3 is exact.
Monodromy monodromy(const ConnectionCase& cc);

// (u1, u2) continued numerically once counterclockwise around |z - center| = radius,
// starting and ending at center + radius e^(i start_angle); returns M with u_new = u M.
CMat monodromy_by_continuation(const ConnectionCase& cc, const Complex& center, const Real& radius,
                               const Real& start_angle);

struct AlphaConstants {
    TriangleType type;
    std::array<Real, 3> alpha; // alpha_1, alpha_2, alpha_3
    Real mu;
    Real h3;
    Rational alpha3_over_nu;
    Real nu;
};

// alpha_i at a cusp from the finite cosine product, at an elliptic point from
// the Gamma quotient; v1, v2 are those of the type as given. Requires m3 = inf.
AlphaConstants alpha_constants(const TriangleType& t);
Real alpha_cusp(const Rational& v1, const Rational& v2);
Real alpha_elliptic(const Rational& v1, const Rational& v2, int i);
Real mu_constant(const Rational& a, const Rational& c);

class roundtrip_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RoundTrip {
    Complex tau;
    Complex qt3;
    Complex J;
    Real residual;
};

// tau(z) through the Schwarz map, then |J(tau(z)) - (1 - z)| with J the
// truncated cusp expansion in qt3 = alpha_3 exp(2 pi i (tau - Re zeta_1)/h3).
// z in the closed upper half plane, off [0, inf).
Complex schwarz_tau(const TriangleType& t, const Complex& z);
RoundTrip schwarz_roundtrip(const TriangleType& t, const Complex& z, int N);

} // namespace tg
