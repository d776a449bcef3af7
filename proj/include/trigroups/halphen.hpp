#pragma once

#include "trigroups/series.hpp"
#include "trigroups/triangle.hpp"

#include <array>
#include <string>
#include <vector>

namespace tg {

template <class T>
using Triple = std::array<T, 3>;

struct HalphenParams {
    Rational a, b, c;
};

HalphenParams halphen_params(const TriangleType& t);

// Right-hand side of the Halphen system.
template <class T>
Triple<T> halphen_rhs(const Triple<T>& t, const HalphenParams& p)
{
    const T one(1);
    const T a(p.a), b(p.b), c(p.c);
    return {(a - one) * (t[0] * t[1] + t[0] * t[2] - t[1] * t[2]) + (b + c - one) * t[0] * t[0],
            (b - one) * (t[1] * t[0] + t[1] * t[2] - t[0] * t[2]) + (a + c - one) * t[1] * t[1],
            (c - one) * (t[2] * t[0] + t[2] * t[1] - t[0] * t[1]) + (a + b - one) * t[2] * t[2]};
}

// Normalized Halphen solution s_i = (h3 / 2 pi i) t_i as rational series in
// qhat = nu exp(2 pi i tau / h3). The ODE reads qhat ds/dqhat = F(s).
struct HalphenSolution {
    TriangleType type;
    HalphenParams params;
    std::array<RSeries, 3> s;
    // kappa_i without the 2 pi i / h3 prefactor, in X = m1, Y = m2.
    std::array<BiPoly, 3> kappa;
    // The rational ratio alpha_3 / nu; the Schwarzian variable is qt3 = ratio * qhat.
    Rational alpha3_over_nu;
};

HalphenSolution solve_cusp(const TriangleType& t, int order);

// s_n = P^n shat_n(v1, v2) with P = m1^2 m2^2 (infinite factors dropped);
// these are the shat_n as polynomials in X = v1, Y = v2.
std::vector<Triple<BiPoly>> halphen_universal_v(int order);

// ttilde[i][j] in X = m1, Y = m2 for 1 <= j <= order (index 0 unused).
std::array<std::vector<BiPoly>, 3> symbolic_t_coeffs(int order);

// Evaluate a polynomial in (m1, m2) at a type, using the convention that
// the value at m = infinity is the coefficient of the top power.
Rational specialize_m(const BiPoly& p, const TriangleType& t);

std::array<BiPoly, 3> kappa_polys();

// E^(variant)_{2k}: (s1 - s2)(s3 - s2)^(k-1) or (s1 - s2)^(k-1)(s3 - s2).
RSeries eisenstein_like(const HalphenSolution& h, int k, int variant);
RSeries halphen_E4(const HalphenSolution& h);
RSeries halphen_E6(const HalphenSolution& h);

struct HalphenHauptmodul {
    RSeries J;      // (s3 - s2)/(s3 - s1), Laurent in qhat
    RSeries j_norm; // 1/qhat + O(qhat)
    Rational scale, shift; // j_norm = scale * J + shift
};

HalphenHauptmodul hauptmodul_from_halphen(const HalphenSolution& h);

// qhat ds/dqhat - F(s), componentwise.
std::array<RSeries, 3> halphen_residual(const HalphenSolution& h);

// det(M - n I) for the linearization at (0, -1, 0).
Rational recursion_determinant(const HalphenParams& p, int n);

// k s_i(lambda qhat^k) for the diagonal part of the SL(2,C) action.
std::array<RSeries, 3> diagonal_transform(const std::array<RSeries, 3>& s, int k, const Rational& lambda);

} // namespace tg
