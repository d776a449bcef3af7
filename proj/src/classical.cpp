#include "trigroups/classical.hpp"

#include "trigroups/forms.hpp"
#include "trigroups/schwarz.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace tg {

Rational bernoulli(int n)
{
    static std::mutex mu;
    static std::vector<Rational> B{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(B.size()) <= n) {
        const int m = static_cast<int>(B.size());
        Rational s = 0;
        Integer binom = 1; // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            s += binom * B[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        B.push_back(-s / (m + 1));
    }
    return B[static_cast<std::size_t>(n)];
}

RSeries eisenstein_classical(int k, int N)
{
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("Eisenstein series needs even weight >= 2");
    }
    const Rational c = Rational(-2 * k) / bernoulli(k);
    std::vector<Rational> co(static_cast<std::size_t>(N + 1), 0);
    co[0] = 1;
    // sieve sigma_{k-1}
    for (int d = 1; d <= N; ++d) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
        for (int n = d; n <= N; n += d) {
            co[static_cast<std::size_t>(n)] += p;
        }
    }
    for (int n = 1; n <= N; ++n) {
        co[static_cast<std::size_t>(n)] *= c;
    }
    return RSeries(TAG_Q, 0, std::move(co), N);
}

RSeries at_multiple(const RSeries& s, int p)
{
    return s.inflated(p, s.tag());
}

RSeries theta_series(int i, int N)
{
    if (i == 2) {
        const int order = 4 * N + 3;
        std::vector<Rational> co(static_cast<std::size_t>(order + 1), 0);
        for (int n = 0; (2 * n + 1) * (2 * n + 1) <= order; ++n) {
            co[static_cast<std::size_t>((2 * n + 1) * (2 * n + 1))] = 2;
        }
        return RSeries(TAG_Q_EIGHTH, 0, std::move(co), order);
    }
    if (i != 3 && i != 4) {
        throw std::invalid_argument("theta index must be 2, 3 or 4");
    }
    std::vector<Rational> co(static_cast<std::size_t>(N + 1), 0);
    co[0] = 1;
    for (int n = 1; n * n <= N; ++n) {
        co[static_cast<std::size_t>(n * n)] = (i == 4 && n % 2 != 0) ? -2 : 2;
    }
    return RSeries(TAG_Q_HALF, 0, std::move(co), N);
}

RSeries theta_fourth(int i, int N)
{
    if (i == 2) {
        return pow_int(theta_series(2, N), 4).deflated(4, TAG_Q_HALF).truncated(N);
    }
    return pow_int(theta_series(i, N), 4);
}

namespace {

// prod_{n >= 1} (1 - q^n) to order N
RSeries euler_product(int N)
{
    std::vector<Rational> p(static_cast<std::size_t>(N + 1), 0);
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        for (int e = N; e >= n; --e) {
            p[static_cast<std::size_t>(e)] -= p[static_cast<std::size_t>(e - n)];
        }
    }
    return RSeries(TAG_Q, 0, std::move(p), N);
}

void require_level(int level)
{
    if (level != 2 && level != 3) {
        throw std::invalid_argument("eta quotients are provided for levels 2 and 3");
    }
}

} // namespace

RSeries eta_quotient(int level, int N)
{
    require_level(level);
    const int e = 24 / (level - 1);
    const RSeries f = euler_product(N + 1);
    const RSeries g = at_multiple(f, level).truncated(N + 1);
    return (pow_int(f, e) / pow_int(g, e)).shifted(-1);
}

RSeries eta_log_derivative(int level, int N)
{
    return log_derivative(eta_quotient(level, N)) * Rational(level - 1);
}

AffineFit eta_hauptmodul(int level, int N)
{
    require_level(level);
    const TriangleType t{{level, INF, INF}};
    const Table1Row& row = table1_row(t);
    const RSeries J = cusp_expansion(t, N).series.rescaled(row.q_sub[0], TAG_Q);
    const RSeries raw = eta_quotient(level, N);
    AffineFit f;
    f.a = J.coeff(-1) / raw.coeff(-1);
    f.b = J.coeff(0) - f.a * raw.coeff(0);
    f.series = raw * f.a + f.b;
    return f;
}

RSeries hecke_eisenstein(int p, int k, int N)
{
    if (k < 1) {
        throw std::invalid_argument("Hecke Eisenstein series needs k >= 1");
    }
    const RSeries E = eisenstein_classical(2 * k, N);
    const Rational pk = pow(Rational(p), k);
    return ((E + at_multiple(E, p).truncated(N) * pk) * (Rational(1) / (pk + 1)));
}

RSeries hecke_E(int m, int weight, int N)
{
    switch (m) {
    case 3: return eisenstein_classical(weight, N);
    case 4: return hecke_eisenstein(2, weight / 2, N);
    case 6: return hecke_eisenstein(3, weight / 2, N);
    }
    throw std::invalid_argument("Hecke Eisenstein series are provided for m = 3, 4, 6");
}

RSeries hecke_hauptmodul(int m, int N)
{
    const RSeries f4 = hecke_E(m, 4, N + 2);
    const RSeries f6 = hecke_E(m, 6, N + 2);
    const RSeries c = f4 * f4 * f4;
    return (c / (c - f6 * f6)).truncated(N);
}

CycloScalar mm_sqrt_leading(int m)
{
    switch (m) {
    case 3: return {0, 0, 0, 24};
    case 4: return {0, 16, 0, 0};
    case 6: return {0, 0, 0, 6};
    }
    throw std::invalid_argument("(m, m, inf) Hauptmoduln are provided for m = 3, 4, 6");
}

CSeries mm_type_hauptmodul(int m, int N)
{
    const CycloScalar c = mm_sqrt_leading(m);
    const int M = N / 2 + 3;
    const RSeries E4 = hecke_E(m, 4, M);
    const RSeries E6 = hecke_E(m, 6, M);
    const RSeries u = E6 * E6 - E4 * E4 * E4;
    const Rational lead = u.coeff(1);
    if (!(c * c == CycloScalar(lead))) {
        throw std::logic_error("unexpected leading coefficient of E6^2 - E4^3");
    }
    const RSeries unit = u.shifted(-1) * (Rational(1) / lead);
    const RSeries root = pow_rational(unit, rat(1, 2)).inflated(2, TAG_Q_HALF).shifted(1);
    const CSeries sq = lift<CycloScalar>(root) * c;
    const CSeries e6 = lift<CycloScalar>(E6.inflated(2, TAG_Q_HALF));
    const CSeries J = (e6 / sq + CycloScalar(1)) * CycloScalar(rat(1, 2));
    return J.truncated(N);
}

const std::vector<Table1Row>& table1()
{
    static const std::vector<Table1Row> rows = [] {
        const CycloScalar I = CycloScalar::i(), IS3 = CycloScalar::i_sqrt3(), S3 = CycloScalar::sqrt3();
        std::vector<Table1Row> r;
        auto add = [&](std::array<int, 3> m, std::string real, std::string g, std::array<std::string, 6> data,
                       CycloScalar alpha3, int h3, CycloScalar q_sub, long lambda, std::string Q) {
            Table1Row x;
            x.type = TriangleType{m};
            x.realization = std::move(real);
            x.g = std::move(g);
            x.zeta1 = data[0];
            x.gamma1 = data[1];
            x.zeta2 = data[2];
            x.gamma2 = data[3];
            x.zeta3 = data[4];
            x.gamma3 = data[5];
            x.alpha3 = alpha3;
            x.h3 = h3;
            x.q_sub = q_sub;
            x.lambda = lambda;
            x.Q = std::move(Q);
            r.push_back(std::move(x));
        };
        add({2, 3, INF}, "Gamma(1)", "1", {"i", "S", "omega", "(0,1;-1,1)", "inf", "T"}, 1728, 1, 1728, 1728, "q");
        add({2, 4, INF}, "Gamma0+(2)", "(2,0;0,1)",
            {"i/sqrt2", "W2", "(-1+i)/2", "(2,1;-2,0)/sqrt2", "inf", "T"}, 256, 1, 256, 256, "q");
        add({2, 6, INF}, "Gamma0+(3)", "(3,0;1,1)",
            {"i/sqrt3", "W3", "(-3+i sqrt3)/6", "(3,1;-3,0)/sqrt3", "inf", "T"}, 108, 1, 108, 108, "q");
        add({2, INF, INF}, "Gamma0(2)", "(1,1;0,2)", {"(1+i)/2", "(1,-1;2,-1)", "0", "U^2", "inf", "T"}, 64, 1,
            -64, -64, "q");
        add({3, 3, INF}, "Gamma(1)*", "1", {"omega^2", "(1,1;-1,0)", "omega", "(0,1;-1,1)", "inf", "T^2"},
            S3 * CycloScalar(48), 2, IS3 * CycloScalar(48), 144, "i q^(1/2)/sqrt3");
        add({3, INF, INF}, "Gamma0(3)", "(1,-1;0,3)",
            {"(3+i sqrt3)/6", "(1,-1;3,-2)", "0", "U^3", "inf", "T"}, 27, 1, -27, -27, "q");
        add({4, 4, INF}, "Gamma0+(2)*", "(2,0;1,1)",
            {"(i-1)/2", "(2,1;-2,0)/sqrt2", "(1+i)/2", "(0,1;-2,2)/sqrt2", "inf", "T^2"}, 32, 2,
            I * CycloScalar(32), 32, "i q^(1/2)");
        add({6, 6, INF}, "Gamma0+(3)*", "(3,0;1,1)",
            {"(-3+i sqrt3)/6", "(3,1;-3,0)/sqrt3", "(3+i sqrt3)/6", "(0,1;-3,3)/sqrt3", "inf", "T^2"},
            S3 * CycloScalar(12), 2, IS3 * CycloScalar(12), 36, "i q^(1/2)/sqrt3");
        add({INF, INF, INF}, "Gamma(2)", "(1,1;0,2)", {"0", "U^2", "1", "(-1,2;-2,3)", "inf", "T^2"}, 16, 2, 16,
            16, "q^(1/2)");
        return r;
    }();
    return rows;
}

const Table1Row& table1_row(const TriangleType& t)
{
    for (const auto& r : table1()) {
        if (r.type == t) {
            return r;
        }
    }
    throw invalid_type(t.to_string() + " is not one of the nine arithmetic types (ordered m1 <= m2)");
}

CSeries classical_hauptmodul(const TriangleType& t, int N)
{
    table1_row(t); // rejects non-arithmetic types
    const int m1 = t.m[0], m2 = t.m[1];
    if (m1 == 2 && m2 != INF) {
        return lift<CycloScalar>(hecke_hauptmodul(m2, N));
    }
    if (m2 == INF && m1 != INF) {
        return lift<CycloScalar>(eta_hauptmodul(m1, N).series);
    }
    if (m1 == m2 && m1 != INF) {
        return mm_type_hauptmodul(m1, N);
    }
    const RSeries J = theta_fourth(3, N + 2) / theta_fourth(2, N + 2);
    return lift<CycloScalar>(J.truncated(N));
}

CSeries schwarz_in_classical_variable(const TriangleType& t, int N)
{
    const Table1Row& row = table1_row(t);
    const Tag x = row.h3 == 1 ? TAG_Q : TAG_Q_HALF;
    return lift<CycloScalar>(cusp_expansion(t, N).series).rescaled(row.q_sub, x);
}

Prop1Report proposition1_check(const TriangleType& t, int max_weight, int N)
{
    const Table1Row& row = table1_row(t);
    Prop1Report rep;
    rep.type = t;
    rep.lambda = row.lambda;
    rep.max_weight = max_weight;
    rep.order = N;
    const Tag QV{Var::Q, 1};
    for (int k = 0; 2 * k <= max_weight; ++k) {
        const FormBasis b = basis(t, k, N);
        for (std::size_t l = 0; l < b.elements.size(); ++l) {
            RSeries f = b.elements[l].rescaled(row.lambda, QV);
            const int v = f.valuation();
            f = f * (Rational(1) / f.coeff(v));
            ++rep.forms_checked;
            for (int e = v; e <= N; ++e) {
                if (!is_integer(f.coeff(e))) {
                    rep.violations.push_back({2 * k, static_cast<int>(l), e, f.coeff(e).get_str()});
                }
            }
        }
    }
    return rep;
}

} // namespace tg
