#include "trigroups/calabi_yau.hpp"

#include "trigroups/bigfloat.hpp"
#include "trigroups/special_functions.hpp"

#include <stdexcept>

namespace tg {

namespace {

CYModel row(const std::string& name, Rational a1, Rational a2, long n1, long n2, int m)
{
    CYModel c;
    c.name = name;
    c.a1 = std::move(a1);
    c.a2 = std::move(a2);
    c.n1 = n1;
    c.n2 = n2;
    c.type = TriangleType{{m, INF, INF}};
    c.n0 = -n2;
    return c;
}

std::vector<CYModel> build_models()
{
    std::vector<CYModel> v{
        row("quintic", rat(1, 5), rat(2, 5), -4, -5, 5),
        row("1/6,1/3", rat(1, 6), rat(1, 3), -3, -3, 6),
        row("1/8,3/8", rat(1, 8), rat(3, 8), -3, -2, 8),
        row("1/10,3/10", rat(1, 10), rat(3, 10), -2, -1, 10),
        row("1/4,1/3", rat(1, 4), rat(1, 3), -4, -6, 12),
        row("1/6,1/4", rat(1, 6), rat(1, 4), -2, -2, 12),
        row("1/12,5/12", rat(1, 12), rat(5, 12), -3, -1, 12),
        row("1/4,1/2", rat(1, 4), rat(1, 2), -5, -8, INF),
        row("1/3,1/2", rat(1, 3), rat(1, 2), -6, -12, INF),
        row("1/6,1/2", rat(1, 6), rat(1, 2), -4, -4, INF),
        row("1/3,1/3", rat(1, 3), rat(1, 3), -5, -9, INF),
        row("1/4,1/4", rat(1, 4), rat(1, 4), -3, -4, INF),
        row("1/6,1/6", rat(1, 6), rat(1, 6), -1, -1, INF),
        row("1/2,1/2", rat(1, 2), rat(1, 2), -7, -16, INF),
    };
    v[0].n0_inferred = false;
    return v;
}

Rational P(const CYModel& m, const Rational& x)
{
    Rational r = 1;
    for (const auto& a : m.a()) r *= x + a;
    return r;
}

// derivative of prod (x + a_i) in x
Rational dP(const CYModel& m, const Rational& x)
{
    auto a = m.a();
    Rational s = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        Rational t = 1;
        for (std::size_t j = 0; j < 4; ++j) {
            if (j != i) t *= x + a[j];
        }
        s += t;
    }
    return s;
}

// exp(f) for f(0) = 0, from theta E = (theta f) E.
RSeries series_exp(const RSeries& f)
{
    if (f.coeff(0) != 0) throw std::domain_error("series_exp needs f(0) = 0");
    const int N = f.order();
    std::vector<Rational> e(static_cast<std::size_t>(N + 1));
    e[0] = 1;
    for (int n = 1; n <= N; ++n) {
        Rational s = 0;
        for (int k = 1; k <= n; ++k) s += k * f.coeff(k) * e[static_cast<std::size_t>(n - k)];
        e[static_cast<std::size_t>(n)] = s / n;
    }
    return RSeries(f.tag(), 0, std::move(e), N);
}

RSeries scaled_variable(const RSeries& s, const Rational& c)
{
    // s(c x)
    std::vector<Rational> v;
    Rational p = pow(c, s.offset());
    for (int n = s.offset(); n <= s.order(); ++n) {
        v.push_back(s.coeff(n) * p);
        p *= c;
    }
    return RSeries(s.tag(), s.offset(), std::move(v), s.order());
}

} // namespace

const std::vector<CYModel>& cy_models()
{
    static const std::vector<CYModel> v = build_models();
    return v;
}

const CYModel& find_cy_model(const std::string& key)
{
    const auto& v = cy_models();
    for (const auto& m : v) {
        if (m.name == key || m.a1.get_str() + "," + m.a2.get_str() == key) return m;
    }
    try {
        std::size_t used = 0;
        int k = std::stoi(key, &used);
        if (used == key.size() && k >= 1 && k <= static_cast<int>(v.size())) return v[static_cast<std::size_t>(k - 1)];
    } catch (const std::logic_error&) {
    }
    throw std::invalid_argument("unknown Calabi-Yau model '" + key + "'");
}

FrobeniusPair frobenius(const CYModel& m, int N)
{
    std::vector<Rational> c(static_cast<std::size_t>(N + 1)), s(static_cast<std::size_t>(N + 1));
    c[0] = 1;
    s[0] = 0;
    for (int n = 1; n <= N; ++n) {
        Rational n4 = pow(Rational(n), 4);
        auto k = static_cast<std::size_t>(n);
        c[k] = P(m, n - 1) * c[k - 1] / n4;
        // n^4 s_n - P(n-1) s_{n-1} = -(4 n^3 c_n - P'(n-1) c_{n-1})
        s[k] = (P(m, n - 1) * s[k - 1] - 4 * pow(Rational(n), 3) * c[k] + dP(m, n - 1) * c[k - 1]) / n4;
    }
    return {RSeries(TAG_Z, 0, std::move(c), N), RSeries(TAG_Z, 0, std::move(s), N)};
}

RSeries pf_apply(const CYModel& m, const RSeries& f)
{
    std::vector<Rational> r;
    for (int n = 0; n <= f.order(); ++n) {
        Rational v = pow(Rational(n), 4) * f.coeff(n);
        if (n >= 1) v -= P(m, n - 1) * f.coeff(n - 1);
        r.push_back(v);
    }
    return RSeries(f.tag(), 0, std::move(r), f.order());
}

RSeries pf_log_part(const CYModel& m, const FrobeniusPair& p)
{
    // L(f ln z) = (L f) ln z + 4 delta^3 f - z P'(delta) f
    RSeries r = pf_apply(m, p.sigma);
    std::vector<Rational> extra;
    for (int n = 0; n <= p.psi0.order(); ++n) {
        Rational v = 4 * pow(Rational(n), 3) * p.psi0.coeff(n);
        if (n >= 1) v -= dP(m, n - 1) * p.psi0.coeff(n - 1);
        extra.push_back(v);
    }
    return r + RSeries(r.tag(), 0, std::move(extra), r.order());
}

Integer cy_mu(const CYModel& m)
{
    Real s = 0;
    for (const auto& a : m.a()) s += digamma(Rational(1)) - digamma(a);
    Real mu = exp(s);
    Real r = round(mu);
    if (abs(mu - r) > Real("1e-25") * r) throw std::logic_error("cy_mu: not an integer for " + m.name);
    return Integer(r.str(0, std::ios_base::fixed).substr(0, r.str(0, std::ios_base::fixed).find('.')));
}

MirrorMap mirror_map(const CYModel& m, int N)
{
    auto fp = frobenius(m, N);
    MirrorMap r;
    r.mu = cy_mu(m);
    r.q_of_z = series_exp(fp.sigma / fp.psi0).shifted(1).truncated(N);
    Rational inv(1, 1);
    inv /= Rational(r.mu);
    // Q(Z) = q(mu Z)/mu
    r.Q_of_Z = scaled_variable(r.q_of_z, Rational(r.mu)) * inv;
    r.Z_of_Q = revert(r.Q_of_Z).retagged(Tag{Var::Q, 1});
    return r;
}

std::vector<Rational> lambert_invert(const RSeries& Y)
{
    const int N = Y.order();
    std::vector<Rational> n(static_cast<std::size_t>(N + 1));
    n[0] = Y.coeff(0);
    for (int k = 1; k <= N; ++k) {
        Rational y = Y.coeff(k);
        for (int d = 1; d < k; ++d) {
            if (k % d == 0) y -= n[static_cast<std::size_t>(d)] * pow(Rational(d), 3);
        }
        n[static_cast<std::size_t>(k)] = y / pow(Rational(k), 3);
    }
    return n;
}

YukawaResult yukawa(const CYModel& m, int N)
{
    auto fp = frobenius(m, N);
    const auto& p0 = fp.psi0;
    const auto& s = fp.sigma;
    YukawaResult r;
    // psi_1 = psi_0 L + sigma with L = ln z, theta psi_1 = (theta psi_0) L + psi_0 + theta sigma.
    // Product: psi_0 ((theta psi_0) L + psi_0 + theta sigma) - (psi_0 L + sigma) theta psi_0
    r.log_coefficient = p0 * p0.theta() - p0 * p0.theta();
    r.wronskian = p0 * p0 + p0 * s.theta() - s * p0.theta();
    RSeries one_minus_z(TAG_Z, 0, {Rational(1), Rational(-1)}, N);
    RSeries W3 = r.wronskian * r.wronskian * r.wronskian;
    RSeries p4 = p0 * p0 * p0 * p0;
    r.Y_z = p4 / (W3 * one_minus_z) * Rational(m.n0);
    auto mm = mirror_map(m, N);
    RSeries Y_Z = scaled_variable(r.Y_z, Rational(mm.mu));
    r.Y_Q = compose(Y_Z, mm.Z_of_Q).truncated(N);
    r.n = lambert_invert(r.Y_Q);
    for (int d = 1; d <= N; ++d) {
        if (!is_integer(r.n[static_cast<std::size_t>(d)])) r.non_integral.push_back(d);
    }
    return r;
}

IMat4 identity4()
{
    IMat4 x;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) x[i][j] = i == j ? 1 : 0;
    }
    return x;
}

IMat4 operator*(const IMat4& x, const IMat4& y)
{
    IMat4 z;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            Integer s = 0;
            for (std::size_t k = 0; k < 4; ++k) s += x[i][k] * y[k][j];
            z[i][j] = s;
        }
    }
    return z;
}

namespace {

using QMat4 = std::array<std::array<Rational, 4>, 4>;

QMat4 to_q(const IMat4& x)
{
    QMat4 q;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) q[i][j] = Rational(x[i][j]);
    }
    return q;
}

// Row echelon form in place; returns (rank, determinant).
std::pair<int, Rational> eliminate(QMat4& a, QMat4* companion = nullptr)
{
    Rational d = 1;
    int r = 0;
    for (std::size_t col = 0; col < 4 && r < 4; ++col) {
        auto piv = static_cast<std::size_t>(r);
        while (piv < 4 && a[piv][col] == 0) ++piv;
        if (piv == 4) {
            d = 0;
            continue;
        }
        auto rr = static_cast<std::size_t>(r);
        if (piv != rr) {
            std::swap(a[piv], a[rr]);
            if (companion) std::swap((*companion)[piv], (*companion)[rr]);
            d = -d;
        }
        Rational p = a[rr][col];
        d *= p;
        for (std::size_t j = 0; j < 4; ++j) {
            a[rr][j] /= p;
            if (companion) (*companion)[rr][j] /= p;
        }
        for (std::size_t i = 0; i < 4; ++i) {
            if (i == rr || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < 4; ++j) {
                a[i][j] -= f * a[rr][j];
                if (companion) (*companion)[i][j] -= f * (*companion)[rr][j];
            }
        }
        ++r;
    }
    return {r, r == 4 ? d : Rational(0)};
}

} // namespace

Integer det(const IMat4& x)
{
    auto a = to_q(x);
    return eliminate(a).second.get_num();
}

int rank(const IMat4& x)
{
    auto a = to_q(x);
    return eliminate(a).first;
}

IMat4 inverse(const IMat4& x)
{
    auto a = to_q(x);
    auto inv = to_q(identity4());
    auto [r, d] = eliminate(a, &inv);
    if (d != 1 && d != -1) throw std::domain_error("inverse: determinant is not +-1");
    IMat4 out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) out[i][j] = inv[i][j].get_num();
    }
    return out;
}

std::array<Integer, 5> char_poly(const IMat4& x)
{
    // Faddeev-LeVerrier: M_k = x M_{k-1} + c_{4-k+1} I, c_{4-k} = -tr(x M_k)/k
    std::array<Integer, 5> c;
    c[4] = 1;
    IMat4 M = identity4();
    for (int k = 1; k <= 4; ++k) {
        IMat4 AM = x * M;
        Integer tr = 0;
        for (std::size_t i = 0; i < 4; ++i) tr += AM[i][i];
        auto idx = static_cast<std::size_t>(4 - k);
        c[idx] = -tr / k;
        M = AM;
        for (std::size_t i = 0; i < 4; ++i) M[i][i] += c[idx];
    }
    return c;
}

long matrix_order(const IMat4& x, long bound)
{
    const IMat4 I = identity4();
    IMat4 p = x;
    for (long k = 1; k <= bound; ++k) {
        if (p == I) return k;
        p = p * x;
    }
    return 0;
}

CYMonodromy cy_monodromy(const CYModel& m, long order_bound)
{
    CYMonodromy r;
    r.M0 = {{{1, 0, 0, 0}, {-1, 1, 0, 0}, {1, -1, 1, 0}, {0, 0, -1, 1}}};
    r.Minf = {{{m.n1, 1 - m.n1, m.n2, -m.n2}, {-1, 1, 0, 0}, {1, -1, 1, 0}, {0, 0, -1, 1}}};
    r.M1 = inverse(r.M0) * inverse(r.Minf);
    r.conifold = inverse(r.M0) * r.Minf;
    r.minf_order = matrix_order(r.Minf, order_bound);
    return r;
}

} // namespace tg
