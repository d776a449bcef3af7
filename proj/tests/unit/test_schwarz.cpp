#include "doctest.h"

#include "../common/displays.hpp"
#include "trigroups/schwarz.hpp"

#include <random>

using namespace tg;

namespace {
TriangleType T(int a, int b, int c) { return TriangleType{{a, b, c}}; }
} // namespace

TEST_CASE("modular group cusp coefficients")
{
    auto e = cusp_expansion(T(2, 3, INF), 6);
    CHECK(e.series.offset() == -1);
    CHECK(e.series.coeff(-1) == 1);
    CHECK(e.series.coeff(0) == rat(31, 72));
    CHECK(e.series.coeff(0) == rat(744, 1728));
    CHECK(e.series.coeff(1) == rat(5469, 82944));
    CHECK(e.series.coeff(1) == rat(196884, 1728 * 1728));
    CHECK(e.series.coeff(2) == Rational(21493760) / (Rational(1728) * 1728 * 1728));
}

TEST_CASE("Hecke group of order four")
{
    auto e = cusp_expansion(T(2, 4, INF), 4);
    CHECK(e.series.coeff(1) == rat(1093, 16384));
}

TEST_CASE("elliptic point of the modular group")
{
    auto e = elliptic_expansion(T(2, 3, INF), 1, 8);
    CHECK(e.series.coeff(0) == 1);
    CHECK(e.series.coeff(1) == 1);
    auto a = displays::modular_a();
    for (int k = 2; k <= 6; ++k) {
        CHECK(e.series.coeff(k) == parse_rational(a[static_cast<std::size_t>(k - 2)]));
    }
}

TEST_CASE("zeta_2 normalization")
{
    for (auto t : {T(2, 3, INF), T(2, 5, INF), T(3, INF, INF), T(INF, INF, INF)}) {
        auto e = elliptic_expansion(t, 2, 5);
        CHECK(e.series.coeff(0) == 0);
        CHECK(e.series.coeff(1) == 1);
    }
}

TEST_CASE("universal cusp coefficients match the displayed polynomials")
{
    auto c = universal_coeffs_cusped(6);
    auto d = displays::cusped_c();
    for (std::size_t n = 0; n < d.size(); ++n) {
        CHECK_MESSAGE(c[n] == d[n], "c_" << n << ": " << c[n].to_string() << " vs " << d[n].to_string());
    }
    auto [gp, gm] = gammas(T(2, 3, INF));
    CHECK(c[2].eval(gp, gm) == rat(10495, 2519424));
}

TEST_CASE("universal no-cusp coefficients match the displayed rational functions")
{
    auto c = universal_coeffs_nocusp(3);
    auto d = displays::nocusp_c();
    for (std::size_t n = 0; n < d.size(); ++n) {
        CHECK_MESSAGE(c[n] == d[n], "c_" << n << ": " << c[n].to_string());
    }
    // at w = 0 they reduce to the cusped coefficients
    auto cc = universal_coeffs_cusped(3);
    for (std::size_t n = 0; n < 4; ++n) {
        CHECK(c[n].eval_w(0) == cc[n]);
    }
    CHECK_THROWS(c[1].eval_w(4));
}

TEST_CASE("universal coefficients specialize to concrete expansions")
{
    auto c = universal_coeffs_cusped(12);
    for (auto t : {T(2, 3, INF), T(2, 5, INF), T(3, 7, INF), T(4, INF, INF), T(INF, INF, INF)}) {
        auto e = cusp_expansion(t, 12);
        auto [gp, gm] = gammas(t);
        for (int n = 0; n <= 12; ++n) {
            CHECK(c[static_cast<std::size_t>(n)].eval(gp, gm) == e.series.coeff(n));
        }
    }
    auto cn = universal_coeffs_nocusp(3);
    auto t = T(2, 3, 7);
    auto e = expansion_at(t, Point::z3, 3);
    auto [gp, gm] = gammas(t);
    for (int n = 0; n <= 3; ++n) {
        CHECK(cn[static_cast<std::size_t>(n)].eval_w(rat(1, 49)).eval(gp, gm) == e.series.coeff(n));
    }
}

TEST_CASE("vanishing specializations")
{
    auto c = universal_coeffs_cusped(15);
    for (int n = 2; n <= 15; ++n) {
        CHECK(c[static_cast<std::size_t>(n)].eval(rat(1, 2), 0) == 0);
    }
    for (int n = 0; n <= 15; ++n) {
        CHECK(c[static_cast<std::size_t>(n)].eval(1, 1) == 0);
    }
    CHECK(c[0].eval(rat(1, 2), 0) == rat(1, 2));
    CHECK(c[1].eval(rat(1, 2), 0) == rat(1, 16));
}

TEST_CASE("antisymmetry under exchange of the first two orders")
{
    auto c = universal_coeffs_cusped(3);
    CHECK(c[2].scale(1, -1) == -c[2]);
    CHECK(c[1].scale(1, -1) == c[1]);
    CHECK(antisymmetry_check(20));
    // concrete form: c_n(m1,m2) = (-1)^(n+1) c_n(m2,m1)
    auto a = cusp_expansion(T(3, 7, INF), 10);
    auto b = cusp_expansion(T(7, 3, INF), 10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(a.series.coeff(n) == (n % 2 ? 1 : -1) * b.series.coeff(n));
    }
}

TEST_CASE("ODE residuals vanish")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(2, 12);
    std::vector<TriangleType> types{T(2, 3, INF), T(2, 4, INF), T(INF, INF, INF), T(3, 3, INF)};
    while (types.size() < 14) {
        int a = d(rng), b = d(rng);
        if (classify(a, b, INF).hyperbolic) {
            types.push_back(T(a, b, INF));
        }
    }
    for (const auto& t : types) {
        for (Point p : {Point::z1, Point::z2, Point::z3}) {
            auto e = expansion_at(t, p, 36);
            auto r = schwarz_residual(e.series, schwarz_coeffs(t, p));
            CHECK_MESSAGE(r.is_zero(), t.to_string());
            CHECK(r.order() >= 30);
        }
    }
    auto t = T(2, 3, 7);
    auto r = schwarz_residual(expansion_at(t, Point::z3, 20).series, schwarz_coeffs(t, Point::z3));
    CHECK(r.is_zero());
    auto u = universal_cusp_series(8);
    CHECK(schwarz_residual(u, universal_cusp_coeffs()).is_zero());
    auto un = universal_nocusp_series(3);
    CHECK(schwarz_residual(un, universal_nocusp_coeffs()).is_zero());
}

TEST_CASE("cusp expansion rejects cocompact types")
{
    CHECK_THROWS_AS(cusp_expansion(T(2, 3, 7), 5), invalid_type);
    CHECK_THROWS_AS(expansion_at(T(3, 3, 3), Point::z3, 5), invalid_type);
}
