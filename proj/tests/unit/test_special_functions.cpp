#include "doctest.h"

#include "trigroups/classical.hpp"
#include "trigroups/special_functions.hpp"

#include <boost/math/special_functions/ellint_1.hpp>

#include <random>

using namespace tg;

namespace {

Complex cz(double re, double im)
{
    return Complex(Real(re), Real(im));
}

bool close(const Complex& x, const Complex& y, const Real& tol)
{
    return abs(x - y) <= tol * (1 + abs(y));
}

TriangleType T(int a, int b, int c)
{
    return TriangleType{{a, b, c}};
}

} // namespace

TEST_CASE("digamma at rationals")
{
    const Real g = euler_gamma();
    CHECK(abs(digamma_rational(1, 2) - (-g - 2 * log(Real(2)))) < Real("1e-35"));
    CHECK(abs(digamma_rational(1, 3) + digamma_rational(2, 3) - (-2 * g - 3 * log(Real(3)))) < Real("1e-35"));
    CHECK(abs(digamma(Rational(1)) + g) < Real("1e-35"));
    CHECK(abs(digamma(Rational(4)) - (-g + Real(11) / 6)) < Real("1e-35"));
    CHECK(abs(digamma(rat(3, 2)) - (digamma(rat(1, 2)) + 2)) < Real("1e-35"));
    CHECK_THROWS(digamma(Rational(-2)));
    CHECK_THROWS(digamma_rational(3, 3));

    // psi(1 - x) = psi(x) + pi cot(pi x)
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> den(2, 60);
    const Real pi = real_pi();
    for (int k = 0; k < 50; ++k) {
        const long n = den(rng);
        std::uniform_int_distribution<long> num(1, n - 1);
        const Rational x = rat(num(rng), n);
        const Real lhs = digamma(1 - x);
        const Real rhs = digamma(x) + pi * cos(pi * to_real(x)) / sin(pi * to_real(x));
        CHECK(abs(lhs - rhs) < Real("1e-33"));
    }
    // against the derivative of log Gamma, away from rationals with small denominators
    const Rational x = rat(7, 13);
    const Real h("1e-12");
    const Real fd = (log(boost::math::tgamma(to_real(x) + h)) - log(boost::math::tgamma(to_real(x) - h))) / (2 * h);
    CHECK(abs(fd - digamma(x)) < Real("1e-20"));
}

TEST_CASE("gamma helpers")
{
    CHECK(abs(pow(gamma_rational(rat(1, 2)), 2) - real_pi()) < Real("1e-35"));
    CHECK(rgamma_rational(Rational(0)) == 0);
    CHECK(rgamma_rational(Rational(-3)) == 0);
    CHECK_THROWS(gamma_rational(Rational(-1)));
}

TEST_CASE("2F1 routing and elementary closed forms")
{
    CHECK(hyp2f1(rat(1, 3), rat(1, 4), rat(1, 2), cz(0, 0)) == Complex(1));
    CHECK(hyp2f1_route(cz(0.5, 0)) == HypRoute::direct);
    CHECK(hyp2f1_route(cz(0.9, 0.2)) == HypRoute::one_minus_z);
    CHECK(hyp2f1_route(cz(-3, 1)) == HypRoute::inverse_z);
    CHECK(hyp2f1_route(cz(-1, 0.2)) == HypRoute::continuation);

    // F(a, b; b; z) = (1 - z)^-a along every route
    const Rational a = rat(1, 3), b = rat(1, 4);
    for (Complex z : {cz(0.3, 0.1), cz(0.8, -0.3), cz(-4, 2), cz(-1.2, 0.4), cz(1.5, 1.5), cz(0.2, -1.1)}) {
        const Complex expect = pow(Complex(1) - z, Complex(to_real(-a)));
        CHECK(close(hyp2f1(a, b, b, z), expect, Real("1e-30")));
    }
    // F(1/2, 1/2; 1; z) = (2/pi) K(sqrt z)
    for (double x : {0.3, 0.8, 0.95}) {
        const Real k = sqrt(Real(x));
        const Real K = boost::math::ellint_1(k);
        CHECK(close(hyp2f1(rat(1, 2), rat(1, 2), Rational(1), cz(x, 0)), Complex(2 * K / real_pi()), Real("1e-30")));
    }
    CHECK_THROWS_AS(hyp2f1(a, b, rat(1, 2), cz(3, 0)), hyp_domain_error);
    CHECK_THROWS_AS(hyp2f1(a, b, Rational(-2), cz(0.1, 0)), hyp_domain_error);
    // c - a - b a nonzero integer is outside the four cases
    CHECK_THROWS_AS(hyp2f1(rat(1, 3), rat(2, 3), Rational(2), cz(0.9, 0.1)), hyp_domain_error);
    // terminating series evaluate anywhere
    CHECK(close(hyp2f1(Rational(-2), Rational(1), Rational(1), cz(3, 0)), Complex(4), Real("1e-35")));
}

TEST_CASE("log series of the three-cusp case")
{
    for (Complex z : {cz(0.1, 0.05), cz(0.4, 0), cz(0.25, -0.3)}) {
        const Complex direct = Complex(Real(0), Real(1)) * hyp2f1_series(rat(1, 2), rat(1, 2), Rational(1), Complex(1) - z);
        CHECK(close(inf3_u2_log_series(z), direct, Real("1e-30")));
    }
    const Complex z = cz(0.5, 0);
    CHECK(abs(hyp2f1_series(rat(1, 2), rat(1, 2), Rational(1), z) - hyp2f1_one_minus_z(rat(1, 2), rat(1, 2), Rational(1), z)) <
          Real("1e-18"));
}

TEST_CASE("connection formulas agree with the direct series in the overlap")
{
    const std::vector<Complex> annulus{cz(0.55, 0.3), cz(0.6, -0.2), cz(0.7, 0.5), cz(0.45, 0.4), cz(0.8, 0.1)};
    for (auto t : {T(2, 3, 7), T(2, 5, INF), T(3, 4, INF), T(2, INF, INF), T(5, INF, INF), T(INF, INF, INF)}) {
        CAPTURE(t.to_string());
        const ConnectionCase cc = connection_case(t);
        for (const Complex& z : annulus) {
            // u1 and the hypergeometric factor of u2
            CHECK(abs(hyp2f1_series(cc.a, cc.b, cc.c, z) - hyp2f1_one_minus_z(cc.a, cc.b, cc.c, z)) < Real("1e-15"));
            if (cc.tag != CuspCount::inf3) {
                const Rational a2 = cc.a - cc.c + 1, b2 = cc.b - cc.c + 1, c2 = 2 - cc.c;
                CHECK(abs(hyp2f1_series(a2, b2, c2, z) - hyp2f1_one_minus_z(a2, b2, c2, z)) < Real("1e-15"));
            }
        }
        // 1/z side against continuation of the Gauss equation
        for (Complex z : {cz(-2.5, 0.5), cz(2.2, 1.4), cz(-0.5, -2.6)}) {
            CHECK(abs(hyp2f1_inverse_z(cc.a, cc.b, cc.c, z) - hyp2f1_continued(cc.a, cc.b, cc.c, z)) < Real("1e-15"));
        }
    }
}

TEST_CASE("connection matrix at z = 1")
{
    for (auto t : {T(2, 3, 7), T(2, 3, INF), T(4, 5, INF), T(3, 3, 4)}) {
        const ConnectionCase cc = connection_case(t);
        CHECK(max_abs_diff(connection_to_one(cc), connection_to_one_closed_form(cc)) < Real("1e-30"));
    }
    CHECK_THROWS_AS(connection_to_one_closed_form(connection_case(T(2, INF, INF))), hyp_domain_error);
}

TEST_CASE("connection cases validate their parameters")
{
    CHECK(connection_case(T(2, 3, 7)).tag == CuspCount::inf0);
    CHECK(connection_case(T(2, 3, INF)).tag == CuspCount::inf1);
    CHECK(connection_case(T(INF, 2, INF)).tag == CuspCount::inf2);
    CHECK(connection_case(T(INF, INF, INF)).tag == CuspCount::inf3);
    const ConnectionCase c = connection_case(T(2, 3, 7));
    CHECK(c.a == rat(13, 84));
    CHECK(c.b == rat(1, 84));
    CHECK(c.c == rat(1, 2));
    CHECK_THROWS(make_case(CuspCount::inf1, rat(1, 3), rat(1, 4), rat(1, 2)));
    CHECK_THROWS(make_case(CuspCount::inf2, rat(1, 4), rat(1, 4), rat(1, 3)));
    CHECK_THROWS(make_case(CuspCount::inf3, rat(1, 4), rat(1, 4), Rational(1)));
}

TEST_CASE("monodromy")
{
    SUBCASE("three cusps: exact matrices")
    {
        const Monodromy m = monodromy(connection_case(T(INF, INF, INF)));
        const CMat M0{Complex(1), Complex(2), Complex(0), Complex(1)};
        const CMat M1{Complex(1), Complex(0), Complex(-2), Complex(1)};
        const CMat Mi{Complex(1), Complex(-2), Complex(2), Complex(-3)};
        CHECK(m.M0 == M0);
        CHECK(m.M1 == M1);
        CHECK(m.Minf == Mi);
    }
    SUBCASE("connection monodromy matches numerical loops")
    {
        for (auto t : {T(2, 3, 7), T(2, 5, INF), T(2, INF, INF), T(4, INF, INF), T(INF, INF, INF)}) {
            CAPTURE(t.to_string());
            const ConnectionCase cc = connection_case(t);
            const Monodromy m = monodromy(cc);
            CHECK(max_abs_diff(m.M0, monodromy_by_continuation(cc, Complex(0), Real(1) / 2, Real(0))) < Real("1e-25"));
            CHECK(max_abs_diff(m.M1, monodromy_by_continuation(cc, Complex(1), Real(1) / 2, real_pi())) < Real("1e-25"));
            CHECK(max_abs_diff(m.Minf, inverse(m.M1) * inverse(m.M0)) < Real("1e-30"));
            CHECK(abs(det(m.M0) * det(m.M1) * det(m.Minf) - Complex(1)) < Real("1e-30"));
        }
    }
    SUBCASE("finite order at infinity for (2,3,7)")
    {
        const Monodromy m = monodromy(connection_case(T(2, 3, 7)));
        const CMat id{Complex(1), Complex(0), Complex(0), Complex(1)};
        CHECK(max_abs_diff(mat_pow(m.Minf, 84), id) < Real("1e-25"));
        for (int k : {12, 28, 42}) {
            CHECK(max_abs_diff(mat_pow(m.Minf, k), id) > Real("1e-3"));
        }
        CHECK(max_abs_diff(mat_pow(m.M0, 2), id) < Real("1e-30"));
        CHECK(max_abs_diff(mat_pow(m.M1, 3), id) < Real("1e-25"));
        // eigenvalues exp(2 pi i a), exp(2 pi i b): |tr| = 2 cos(pi (a - b)) = 2 cos(pi/7)
        CHECK(abs(abs(trace(m.Minf)) - 2 * cos(real_pi() / 7)) < Real("1e-25"));
    }
    SUBCASE("trace patterns for the arithmetic types")
    {
        const Real pi = real_pi();
        for (const auto& row : table1()) {
            const ConnectionCase cc = connection_case(row.type);
            const Monodromy m = monodromy(cc);
            const auto cl = classify(row.type.m[0], row.type.m[1], row.type.m[2]);
            const Real v1 = to_real(cl.canonical.v(0));
            const Real v2 = to_real(cl.canonical.v(1));
            CHECK(abs(abs(trace(m.M0)) - 2 * abs(cos(pi * v1))) < Real("1e-12"));
            CHECK(abs(abs(trace(m.M1)) - 2 * abs(cos(pi * v2))) < Real("1e-12"));
        }
    }
}

TEST_CASE("alpha constants")
{
    const Real s3 = sqrt(Real(3));
    const std::vector<std::pair<TriangleType, Real>> expected{
        {T(2, 3, INF), Real(1728)}, {T(2, 4, INF), Real(256)}, {T(2, 6, INF), Real(108)},
        {T(2, INF, INF), Real(64)}, {T(3, 3, INF), 48 * s3},    {T(3, INF, INF), Real(27)},
        {T(4, 4, INF), Real(32)},   {T(6, 6, INF), 12 * s3},    {T(INF, INF, INF), Real(16)},
    };
    for (const auto& [t, value] : expected) {
        CAPTURE(t.to_string());
        const AlphaConstants a = alpha_constants(t);
        CHECK(a.alpha[2] > 0);
        CHECK(abs(a.alpha[2] / value - 1) < Real("1e-9"));
        CHECK(abs(a.nu * to_real(a.alpha3_over_nu) - a.alpha[2]) < Real("1e-30"));
    }
    // symmetric in v1, v2
    CHECK(abs(alpha_cusp(rat(1, 2), rat(1, 7)) - alpha_cusp(rat(1, 7), rat(1, 2))) < Real("1e-30"));
    CHECK(abs(alpha_constants(T(INF, INF, INF)).nu - 8) < Real("1e-30"));
    CHECK(abs(alpha_constants(T(INF, INF, INF)).mu - 1) < Real("1e-30"));
    CHECK(abs(alpha_constants(T(2, 3, INF)).h3 - 1) < Real("1e-30"));
    CHECK_THROWS_AS(alpha_constants(T(2, 3, 7)), invalid_type);
}

TEST_CASE("Schwarz map round trip")
{
    SUBCASE("the singular modulus j(2i) = 66^3")
    {
        const Complex z(Real(1) - Real(287496) / 1728);
        const RoundTrip r = schwarz_roundtrip(T(2, 3, INF), z, 40);
        CHECK(abs(r.tau - cz(0, 2)) < Real("1e-30"));
        CHECK(r.residual < Real("1e-8"));
    }
    const std::vector<Complex> points{cz(0.3, 0.4), cz(-2, 0.5), cz(3, 2), cz(0.5, 0.5), cz(-0.4, 1.5)};
    for (auto t : {T(2, 3, INF), T(2, 5, INF), T(INF, INF, INF), T(3, INF, INF), T(4, 7, INF)}) {
        CAPTURE(t.to_string());
        for (const Complex& z : points) {
            const RoundTrip r = schwarz_roundtrip(t, z, 60);
            CHECK(r.tau.imag() > 0);
            CHECK(r.residual < Real("1e-8"));
        }
    }
    CHECK_THROWS_AS(schwarz_roundtrip(T(2, 3, 7), cz(0.3, 0.4), 10), invalid_type);
    CHECK_THROWS(schwarz_roundtrip(T(2, 3, INF), cz(0.3, -0.4), 10));
}
