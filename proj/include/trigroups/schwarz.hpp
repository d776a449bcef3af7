#pragma once

#include "trigroups/series.hpp"
#include "trigroups/triangle.hpp"
#include "trigroups/wrational.hpp"

#include <vector>

namespace tg {

// 1, 2, 3 for zeta_1, zeta_2, zeta_3.
enum class Point { z1 = 1, z2 = 2, z3 = 3 };

Tag point_tag(Point p);

struct HauptmodulExpansion {
    TriangleType type;
    Point point = Point::z3;
    RSeries series; // in the normalized local variable of the point
};

// Coefficients of the Schwarzian equation
//   -2 J''' J' + 3 J''^2 - w J'^2 = J'^4 (A/J^2 + B/(J-1)^2 + C/(J(J-1))),
// with ' = x d/dx for the local variable x.
template <class T>
struct SchwarzCoeffs {
    T A, B, C, w;
};

SchwarzCoeffs<Rational> schwarz_coeffs(const TriangleType& t, Point p);

// Normalized expansion J = 1 + x + ..., x + ..., or 1/x + ... at the point.
// Works for any hyperbolic type, including types without a cusp.
HauptmodulExpansion expansion_at(const TriangleType& t, Point p, int order);

// The expansion at zeta_3; requires m3 = infinity.
HauptmodulExpansion cusp_expansion(const TriangleType& t, int order);
// The expansion at zeta_1 (i = 1) or zeta_2 (i = 2).
HauptmodulExpansion elliptic_expansion(const TriangleType& t, int i, int order);

// Universal cusp coefficients as a series in qt3 with BiPoly coefficients
// in X = gamma+ = v1^2 + v2^2, Y = gamma- = v1^2 - v2^2.
PSeries universal_cusp_series(int order);
std::vector<BiPoly> universal_coeffs_cusped(int n_max);
// Coefficients c_0..c_{n_max} at an elliptic zeta_3, with w = v3^2 symbolic.
std::vector<WRational> universal_coeffs_nocusp(int n_max);

// gamma+, gamma- of a type.
std::pair<Rational, Rational> gammas(const TriangleType& t);

// c_n(gamma+, -gamma-) == (-1)^(n+1) c_n(gamma+, gamma-) for 1 <= n <= N.
bool antisymmetry_check(int N);

// Left minus right side of the Schwarzian equation, evaluated with
// ordinary series arithmetic. Zero to its truncation order for a solution.
template <class T>
FormalSeries<T> schwarz_residual(const FormalSeries<T>& J, const SchwarzCoeffs<T>& k);

extern template RSeries schwarz_residual<Rational>(const RSeries&, const SchwarzCoeffs<Rational>&);
extern template PSeries schwarz_residual<BiPoly>(const PSeries&, const SchwarzCoeffs<BiPoly>&);
extern template FormalSeries<WRational> schwarz_residual<WRational>(const FormalSeries<WRational>&,
                                                                    const SchwarzCoeffs<WRational>&);

SchwarzCoeffs<BiPoly> universal_cusp_coeffs();
SchwarzCoeffs<WRational> universal_nocusp_coeffs();
FormalSeries<WRational> universal_nocusp_series(int order);

} // namespace tg
