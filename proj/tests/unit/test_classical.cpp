#include "doctest.h"

#include "trigroups/classical.hpp"
#include "trigroups/forms.hpp"
#include "trigroups/schwarz.hpp"

using namespace tg;

namespace {

TriangleType T(int a, int b, int c) { return TriangleType{{a, b, c}}; }

CycloScalar cs(const std::string& r0, const std::string& r1 = "0", const std::string& r2 = "0",
               const std::string& r3 = "0")
{
    return {parse_rational(r0), parse_rational(r1), parse_rational(r2), parse_rational(r3)};
}

} // namespace

TEST_CASE("Bernoulli numbers and Eisenstein normalization")
{
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(12) == rat(-691, 2730));
    CHECK(bernoulli(7) == 0);
    auto E2 = eisenstein_classical(2, 5);
    CHECK(E2.coeff(1) == -24);
    CHECK(E2.coeff(2) == -72);
    auto E4 = eisenstein_classical(4, 5);
    CHECK(E4.coeff(1) == 240);
    CHECK(E4.coeff(2) == 2160);
    auto E6 = eisenstein_classical(6, 5);
    CHECK(E6.coeff(1) == -504);
    CHECK(E6.coeff(2) == -16632);
    CHECK_THROWS(eisenstein_classical(3, 5));
}

TEST_CASE("j from Eisenstein series")
{
    auto J = hecke_hauptmodul(3, 40) * Rational(1728);
    CHECK(J.coeff(-1) == 1);
    CHECK(J.coeff(0) == 744);
    CHECK(J.coeff(1) == 196884);
    CHECK(J.coeff(2) == 21493760);
    CHECK(J.order() >= 40);
    auto S = cusp_expansion(T(2, 3, INF), 40).series.rescaled(Rational(1728), TAG_Q) * Rational(1728);
    CHECK(agree(J, S, 40));
}

TEST_CASE("theta functions")
{
    auto t3 = theta_series(3, 10);
    CHECK(t3.coeff(0) == 1);
    CHECK(t3.coeff(1) == 2);
    CHECK(t3.coeff(2) == 0);
    CHECK(t3.coeff(4) == 2);
    auto t4 = theta_series(4, 10);
    CHECK(t4.coeff(1) == -2);
    CHECK(t4.coeff(4) == 2);
    auto t2 = theta_series(2, 10);
    CHECK(t2.tag() == TAG_Q_EIGHTH);
    CHECK(t2.coeff(1) == 2);
    CHECK(t2.coeff(9) == 2);
    CHECK(t2.coeff(5) == 0);

    const int N = 40;
    auto jac = theta_fourth(3, N) - theta_fourth(2, N) - theta_fourth(4, N);
    CHECK(jac.order() >= N);
    CHECK(jac.is_zero());

    auto J = theta_fourth(3, 12) / theta_fourth(2, 12);
    CHECK(J.coeff(-1) == rat(1, 16));
    CHECK(J.coeff(0) == rat(1, 2));
    CHECK(J.coeff(1) == rat(5, 4));
    CHECK(J.coeff(2) == 0);
    CHECK(J.coeff(3) == rat(-31, 8));
    CHECK(J.coeff(5) == rat(27, 2));
}

TEST_CASE("eta quotients for levels 2 and 3")
{
    auto f2 = eta_hauptmodul(2, 12);
    CHECK(f2.a == rat(-1, 64));
    CHECK(f2.b == 0);
    const std::vector<std::string> j2 = {"-1/64", "3/8", "-69/16", "32", "-5601/32", "768", "-23003/8"};
    for (int e = -1; e <= 5; ++e) {
        CHECK(f2.series.coeff(e) == parse_rational(j2[static_cast<std::size_t>(e + 1)]));
    }
    // the remaining coefficients are not fitted
    auto S2 = cusp_expansion(T(2, INF, INF), 30).series.rescaled(Rational(-64), TAG_Q);
    CHECK(agree(eta_hauptmodul(2, 30).series, S2));

    auto f3 = eta_hauptmodul(3, 12);
    const std::vector<std::string> j3 = {"-1/27", "4/9", "-2", "76/27", "9", "-44", "1384/27"};
    for (int e = -1; e <= 5; ++e) {
        CHECK(f3.series.coeff(e) == parse_rational(j3[static_cast<std::size_t>(e + 1)]));
    }

    const int N = 30;
    for (int level : {2, 3}) {
        auto E2 = eisenstein_classical(2, N);
        auto rhs = E2 - at_multiple(E2, level).truncated(N) * Rational(level);
        CHECK(agree(eta_log_derivative(level, N), rhs, N));
    }
    CHECK_THROWS(eta_quotient(5, 10));
}

TEST_CASE("quasi-modular E2 of (2,inf,inf) and its weight-2 form")
{
    const int N = 25;
    auto t = T(2, INF, INF);
    auto p = delta_and_e2(t, N);
    auto e2 = p.e2.rescaled(Rational(-64), TAG_Q);
    auto E2 = eisenstein_classical(2, N);
    auto E2_2 = at_multiple(E2, 2).truncated(N);
    // log derivative of eta(2 tau)^16 / eta(tau)^8, the weight-4 form with a single zero at i inf
    CHECK(agree(e2, (E2_2 * Rational(4) - E2) * Rational(rat(1, 3)), N));
    // E2(tau) - 2 E2(2 tau) is holomorphic of weight 2: it spans the one-dimensional space
    auto f2 = basis(t, 1, N).elements.at(0).rescaled(Rational(-64), TAG_Q);
    CHECK(agree(f2, (E2 - E2_2 * Rational(2)) * Rational(-1), N));
}

TEST_CASE("Fricke-invariant eta combinations")
{
    const int N = 30;
    // 256 J(2,4,inf) - (eta(t)/eta(2t))^24 - 4096 (eta(2t)/eta(t))^24 is constant
    auto e2 = eta_quotient(2, N + 2);
    auto J4 = hecke_hauptmodul(4, N) * Rational(256);
    auto d4 = J4 - e2 - e2.inverse() * Rational(4096);
    CHECK(d4.truncated(N).stripped().valuation() >= 0);
    for (int e = 1; e <= N; ++e) {
        CHECK(d4.coeff(e) == 0);
    }
    // 108 J(2,6,inf) - (eta(t)/eta(3t))^12 - 729 (eta(3t)/eta(t))^12 is constant
    auto e3 = eta_quotient(3, N + 2);
    auto J6 = hecke_hauptmodul(6, N) * Rational(108);
    auto d6 = J6 - e3 - e3.inverse() * Rational(729);
    CHECK(d6.coeff(-1) == 0);
    CHECK(d6.coeff(0) == 54);
    for (int e = 1; e <= N; ++e) {
        CHECK(d6.coeff(e) == 0);
    }
}

TEST_CASE("Hecke Eisenstein series and the (2,4,inf), (2,6,inf) Hauptmoduln")
{
    for (int p : {2, 3}) {
        for (int k = 2; k <= 6; ++k) {
            auto E = hecke_eisenstein(p, k, 20);
            CHECK(E.coeff(0) == 1);
            const Rational bound = pow(Rational(p), k) + 1;
            const Integer bnum = abs(bernoulli(2 * k).get_num());
            for (int e = 1; e <= 20; ++e) {
                CHECK(is_integer(E.coeff(e) * bound * Rational(bnum)));
            }
        }
    }
    auto J4 = hecke_hauptmodul(4, 6);
    const std::vector<std::string> d4 = {"1/256", "13/32", "1093/64", "376", "620001/128", "41792"};
    for (int e = -1; e <= 4; ++e) {
        CHECK(J4.coeff(e) == parse_rational(d4[static_cast<std::size_t>(e + 1)]));
    }
    // q^-1 + 42 + 783q + 8672q^2 + ... after scaling by 108
    auto J6 = hecke_hauptmodul(6, 6) * Rational(108);
    const std::vector<long> d6 = {1, 42, 783, 8672, 65367, 371520};
    for (int e = -1; e <= 4; ++e) {
        CHECK(J6.coeff(e) == d6[static_cast<std::size_t>(e + 1)]);
    }
}

TEST_CASE("(m,m,inf) Hauptmoduln over Q(i, sqrt3)")
{
    auto J3 = mm_type_hauptmodul(3, 6);
    CHECK(J3.coeff(-1) == cs("0", "0", "0", "-1/144"));
    CHECK(J3.coeff(0) == cs("1/2"));
    CHECK(J3.coeff(1) == cs("0", "0", "0", "41/12"));
    CHECK(J3.coeff(3) == cs("0", "0", "0", "1255/8"));
    CHECK(J3.coeff(5) == cs("0", "0", "0", "45925/18"));
    auto J4 = mm_type_hauptmodul(4, 8);
    CHECK(J4.coeff(-1) == cs("0", "-1/32"));
    CHECK(J4.coeff(1) == cs("0", "19/8"));
    CHECK(J4.coeff(3) == cs("0", "351/16"));
    CHECK(J4.coeff(5) == cs("0", "653/4"));
    CHECK(J4.coeff(7) == cs("0", "23425/32"));
    auto J6 = mm_type_hauptmodul(6, 6);
    CHECK(J6.coeff(-1) == cs("0", "0", "0", "-1/36"));
    CHECK(J6.coeff(1) == cs("0", "0", "0", "11/12"));
    CHECK(J6.coeff(3) == cs("0", "0", "0", "17/4"));
    CHECK(J6.coeff(5) == cs("0", "0", "0", "713/36"));

    // Q = i q^(1/2) turns 32 J(4,4,inf) into Q^-1 + Z[[Q]]
    auto K = J4.rescaled(CycloScalar::i().inverse(), Tag{Var::Q, 1}) * CycloScalar(32);
    CHECK(K.coeff(-1) == CycloScalar(1));
    for (int e = 0; e <= 8; ++e) {
        CHECK(K.coeff(e).is_rational());
        CHECK(K.coeff(e).has_integer_components());
    }
}

TEST_CASE("registry rows")
{
    CHECK(table1().size() == 9);
    CHECK(table1_row(T(3, 3, INF)).alpha3 == CycloScalar::sqrt3() * CycloScalar(48));
    CHECK(table1_row(T(INF, INF, INF)).h3 == 2);
    CHECK_THROWS_AS(table1_row(T(2, 5, INF)), invalid_type);
    for (const auto& r : table1()) {
        // |q_sub| = alpha_3
        CHECK((r.q_sub * r.q_sub.conj()) == r.alpha3 * r.alpha3);
    }
}

TEST_CASE("classical and Schwarz Hauptmoduln coincide for all nine types")
{
    const int N = 40;
    for (const auto& r : table1()) {
        auto a = classical_hauptmodul(r.type, N);
        auto b = schwarz_in_classical_variable(r.type, N);
        CHECK_MESSAGE(a.order() >= N, r.type.to_string());
        CHECK_MESSAGE(agree(a, b, N), r.type.to_string());
    }
}

TEST_CASE("integral bases")
{
    for (const auto& r : table1()) {
        auto rep = proposition1_check(r.type, 12, 30);
        CHECK_MESSAGE(rep.ok(), r.type.to_string());
        CHECK(rep.forms_checked > 0);
    }
    // a non-integral rescaling is caught
    auto rep = proposition1_check(T(2, 3, INF), 4, 5);
    CHECK(rep.ok());
}
