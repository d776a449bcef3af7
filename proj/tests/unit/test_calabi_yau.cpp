#include "trigroups/bigfloat.hpp"
#include "trigroups/calabi_yau.hpp"

#include <doctest.h>

using namespace tg;

namespace {
const CYModel& quintic() { return find_cy_model("quintic"); }

IMat4 minus_identity(IMat4 x)
{
    for (std::size_t i = 0; i < 4; ++i) x[i][i] -= 1;
    return x;
}

bool is_zero(const IMat4& x)
{
    for (const auto& r : x) {
        for (const auto& e : r) {
            if (e != 0) return false;
        }
    }
    return true;
}
} // namespace

TEST_CASE("model registry")
{
    const auto& v = cy_models();
    REQUIRE(v.size() == 14);
    CHECK(quintic().a1 == rat(1, 5));
    CHECK(quintic().n0 == 5);
    CHECK_FALSE(quintic().n0_inferred);
    CHECK(&find_cy_model("1") == &quintic());
    CHECK(&find_cy_model("14") == &find_cy_model("1/2,1/2"));
    CHECK(find_cy_model("1/6,1/3").n1 == -3);
    CHECK_THROWS_AS(find_cy_model("15"), std::invalid_argument);
    CHECK_THROWS_AS(find_cy_model("1/7,1/7"), std::invalid_argument);
    int finite = 0;
    for (const auto& m : v) {
        auto a = m.a();
        CHECK(a[2] == 1 - m.a2);
        CHECK(a[3] == 1 - m.a1);
        finite += !m.type.is_cusp(0);
    }
    CHECK(finite == 7);
}

TEST_CASE("Frobenius solutions")
{
    auto f = frobenius(quintic(), 20);
    CHECK(f.psi0.coeff(0) == 1);
    CHECK(f.psi0.coeff(1) == rat(24, 625));
    CHECK(f.sigma.coeff(0) == 0);
    // psi0_n = (5n)!/(n!)^5 / 5^(5n)
    for (int n = 0; n <= 20; ++n) {
        Rational want = Rational(factorial(5ul * static_cast<unsigned long>(n))) /
                        Rational(pow(Rational(factorial(static_cast<unsigned long>(n))), 5)) / pow(Rational(5), 5 * n);
        CHECK(f.psi0.coeff(n) == want);
    }
    for (const auto& m : cy_models()) {
        auto p = frobenius(m, 20);
        auto r0 = pf_apply(m, p.psi0);
        auto r1 = pf_log_part(m, p);
        for (int n = 0; n <= 20; ++n) {
            CHECK_MESSAGE(r0.coeff(n) == 0, m.name << " psi0 n=" << n);
            CHECK_MESSAGE(r1.coeff(n) == 0, m.name << " psi1 n=" << n);
        }
        // ratio test
        for (int n = 0; n < 20; ++n) {
            Rational r = 1;
            for (const auto& a : m.a()) r *= a + n;
            CHECK(p.psi0.coeff(n + 1) == p.psi0.coeff(n) * r / pow(Rational(n + 1), 4));
        }
    }
    // a perturbed sigma is caught
    auto bad = f;
    bad.sigma = bad.sigma + RSeries::monomial(TAG_Z, 3, rat(1, 7), 20);
    CHECK(pf_log_part(quintic(), bad).coeff(3) != 0);
}

TEST_CASE("mirror map")
{
    auto mm = mirror_map(quintic(), 20);
    CHECK(mm.mu == 3125);
    CHECK(mm.q_of_z.valuation() == 1);
    CHECK(mm.q_of_z.coeff(1) == 1);
    CHECK(mm.Z_of_Q.coeff(1) == 1);
    CHECK(mm.Z_of_Q.coeff(2) == -770);
    CHECK(mm.Z_of_Q.coeff(3) == 171525);
    CHECK(mm.Q_of_Z.coeff(2) == 770);
    auto back = compose(mm.Z_of_Q, mm.Q_of_Z.retagged(mm.Z_of_Q.tag()));
    CHECK(back.coeff(1) == 1);
    for (int n = 2; n <= 20; ++n) CHECK(back.coeff(n) == 0);
    const Integer mus[] = {3125, 11664, 65536, 800000, 1728, 27648, 2985984, 1024, 432, 6912, 729, 4096, 186624, 256};
    for (std::size_t k = 0; k < 14; ++k) {
        auto m = mirror_map(cy_models()[k], 8);
        CHECK_MESSAGE(m.mu == mus[k], cy_models()[k].name);
        // integral mirror map in Z, Q
        for (int n = 1; n <= 8; ++n) CHECK(is_integer(m.Z_of_Q.coeff(n)));
    }
}

TEST_CASE("Yukawa coupling and instanton numbers")
{
    auto y = yukawa(quintic(), 8);
    for (int n = 0; n <= 8; ++n) CHECK(y.log_coefficient.coeff(n) == 0);
    CHECK(y.Y_Q.coeff(0) == 5);
    CHECK(y.n[0] == 5);
    CHECK(y.n[1] == 2875);
    CHECK(y.n[2] == 609250);
    CHECK(y.n[3] == 317206375);
    CHECK(y.n[4] == Rational(Integer("242467530000")));
    CHECK(y.non_integral.empty());
    for (const auto& m : cy_models()) {
        auto r = yukawa(m, 6);
        CHECK(r.n[0] == m.n0);
        CHECK_MESSAGE(r.non_integral.empty(), m.name);
        std::string s;
        for (int d = 1; d <= 3; ++d) s += " " + r.n[static_cast<std::size_t>(d)].get_str();
        MESSAGE(m.name << " n0=" << m.n0 << std::string(m.n0_inferred ? " (inferred)" : "") << " n1..n3:" << s);
    }
    // y_2 = n_1 + 8 n_2
    auto e = lambert_invert(RSeries(TAG_Z, 0, {Rational(1), Rational(9), Rational(9)}, 2));
    CHECK(e[1] == 9);
    CHECK(e[2] == 0);
}

TEST_CASE("integer monodromy")
{
    auto q = cy_monodromy(quintic());
    CHECK(q.minf_order == 5);
    IMat4 p = identity4();
    for (int k = 0; k < 5; ++k) p = p * q.Minf;
    CHECK(p == identity4());
    CHECK(cy_monodromy(find_cy_model("1/2,1/2")).minf_order == 0);
    for (const auto& m : cy_models()) {
        auto r = cy_monodromy(m);
        CHECK(det(r.M0) == 1);
        CHECK(det(r.Minf) == 1);
        CHECK(det(r.M1) == 1);
        CHECK(r.M1 * r.Minf * r.M0 == identity4()); // M1 = M0^-1 Minf^-1
        long want = m.type.is_cusp(0) ? 0 : m.type.m[0];
        CHECK_MESSAGE(r.minf_order == want, m.name);
        // det(x - Minf) = prod (x^2 - 2 cos(2 pi a_j) x + 1)
        auto c = char_poly(r.Minf);
        Real c1 = 2 * cos(2 * real_pi() * to_real(m.a1)), c2 = 2 * cos(2 * real_pi() * to_real(m.a2));
        Real want_poly[5] = {1, -(c1 + c2), 2 + c1 * c2, -(c1 + c2), 1};
        for (std::size_t k = 0; k < 5; ++k) CHECK(abs(Real(c[k].get_str()) - want_poly[k]) < Real("1e-30"));
        // M0 maximally unipotent
        IMat4 n0 = minus_identity(r.M0);
        CHECK_FALSE(is_zero(n0 * n0 * n0));
        CHECK(is_zero(n0 * n0 * n0 * n0));
        // conifold transvection
        CHECK(rank(minus_identity(r.conifold)) == 1);
        CHECK(char_poly(r.conifold) == std::array<Integer, 5>{1, -4, 6, -4, 1});
    }
    CHECK(inverse(q.M0) * q.M0 == identity4());
    IMat4 sing = identity4();
    sing[0][0] = 2;
    CHECK_THROWS(inverse(sing));
    CHECK(matrix_order(sing, 100) == 0);
}
