#include "trigroups/forms.hpp"

#include "trigroups/schwarz.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace tg {

namespace {

void require_cusp(const TriangleType& t)
{
    if (!t.is_cusp(2)) {
        throw invalid_type("forms are expanded at a cusp zeta_3; need m3 = infinity");
    }
}

// J at zeta_3 is the expensive part and is shared by every weight.
RSeries cached_J(const TriangleType& t, int N)
{
    static std::mutex mu;
    static std::map<std::pair<std::array<int, 3>, int>, RSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(t.m, N);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, cusp_expansion(t, N).series).first;
    }
    return it->second;
}

TriangleType sorted_type(const TriangleType& t)
{
    TriangleType s = t;
    auto key = [](int m) { return m == INF ? 1 << 30 : m; };
    if (key(s.m[0]) > key(s.m[1])) {
        std::swap(s.m[0], s.m[1]);
    }
    return s;
}

} // namespace

int ceil_div_m(int k, int m)
{
    if (m == INF) {
        return 0;
    }
    int q = k / m;
    if (k % m != 0 && k > 0) {
        ++q;
    }
    return q;
}

int d_order(const TriangleType& t, int k)
{
    return k - ceil_div_m(k, t.m[0]) - ceil_div_m(k, t.m[1]);
}

int dimension(const TriangleType& t, int weight)
{
    require_cusp(t);
    if (weight % 2 != 0) {
        throw std::invalid_argument("weight must be even");
    }
    const int k = weight / 2;
    if (k < 0) {
        return 0;
    }
    return std::max(0, d_order(t, k) + 1);
}

RSeries f_form(const TriangleType& t, int k, int N)
{
    require_cusp(t);
    // the leading term must be visible even when d_{2k} > N
    N = std::max(N, d_order(t, k));
    const RSeries J = cached_J(t, N);
    const RSeries Jd = J.theta();
    RSeries f = pow_int(Jd, k) * pow_int(J, ceil_div_m(k, t.m[1]) - k) *
                pow_int(J - Rational(1), ceil_div_m(k, t.m[0]) - k);
    if (k % 2 != 0) {
        f = -f;
    }
    return f.truncated(N);
}

FormBasis basis(const TriangleType& t, int k, int N)
{
    require_cusp(t);
    if (k < 0) {
        throw std::invalid_argument("basis needs k >= 0");
    }
    FormBasis b;
    b.type = t;
    b.weight = 2 * k;
    b.d = d_order(t, k);
    if (b.d < 0) {
        return b;
    }
    N = std::max(N, b.d);
    const RSeries f = f_form(t, k, N + b.d);
    const RSeries J = cached_J(t, N + b.d);
    RSeries p = f;
    for (int l = 0; l <= b.d; ++l) {
        b.elements.push_back(p.truncated(N));
        p = p * J;
    }
    return b;
}

DeltaPackage delta_and_e2(const TriangleType& t, int N)
{
    require_cusp(t);
    DeltaPackage p;
    p.type = t;
    p.L = 1;
    for (int i = 0; i < 2; ++i) {
        if (!t.is_cusp(i)) {
            p.L = std::lcm(p.L, t.m[static_cast<std::size_t>(i)]);
        }
    }
    p.n_delta = Rational(p.L) * (Rational(1) - t.v(0) - t.v(1));
    const int nd = d_order(t, p.L);
    p.delta = f_form(t, p.L, std::max(N, nd) + N + 1);
    p.e2 = log_derivative(p.delta).truncated(N);
    p.delta = p.delta.truncated(std::max(N, nd));
    return p;
}

RSeries serre_derivative(const RSeries& f, int weight, const DeltaPackage& pkg)
{
    const Rational c = Rational(weight) / Rational(2 * pkg.L);
    RSeries e2 = pkg.e2;
    if (e2.order() > f.order()) {
        e2 = e2.truncated(f.order());
    }
    return f.theta() - e2 * f * c;
}

std::vector<Rational> coordinates(const RSeries& f, const FormBasis& b)
{
    std::vector<Rational> c(b.elements.size(), 0);
    if (b.elements.empty()) {
        if (!f.is_zero()) {
            throw not_a_form("nonzero series in a zero space");
        }
        return c;
    }
    if (f.valuation() < 0) {
        throw not_a_form("pole at the cusp");
    }
    RSeries g = f;
    for (int v = 0; v <= b.d; ++v) {
        const std::size_t l = static_cast<std::size_t>(b.d - v);
        const RSeries& e = b.elements[l];
        c[l] = g.coeff(v) / e.coeff(v);
        if (c[l] != 0) {
            g = g - e * c[l];
        }
    }
    if (!g.is_zero()) {
        throw not_a_form("residual after projection onto the basis at q^" + std::to_string(g.valuation()));
    }
    return c;
}

GeneratorSets generator_weights(const TriangleType& t)
{
    require_cusp(t);
    const TriangleType s = sorted_type(t);
    const int m1 = s.m[0], m2 = s.m[1];
    GeneratorSets g;
    auto f = [&](int k, int jp) {
        Generator x;
        x.weight = 2 * k;
        x.k = k;
        x.J_power = jp;
        x.name = (jp == 0 ? "" : (jp == 1 ? std::string("J ") : "J^" + std::to_string(jp) + " ")) + "f" +
                 std::to_string(2 * k);
        g.forms.push_back(x);
    };
    auto e = [&](int k, int variant) {
        Generator x;
        x.weight = 2 * k;
        x.k = k;
        x.variant = variant;
        x.name = "E^(" + std::to_string(variant) + ")_" + std::to_string(2 * k);
        g.halphen.push_back(x);
    };
    if (m1 == INF) {
        f(1, 0);
        f(1, 1);
    } else if (m2 == INF) {
        for (int k = 1; k <= m1; ++k) {
            f(k, 0);
            e(k, 1);
        }
    } else {
        for (int l = 2; l <= m2; ++l) {
            f(l, 0);
        }
        g.empty_second_range = m1 < 3;
        for (int l = 3; l <= m1; ++l) {
            f(l, d_order(s, l));
        }
        for (int k = 2; k <= m2; ++k) {
            e(k, 2);
        }
        for (int k = 3; k <= m1; ++k) {
            e(k, 1);
        }
    }
    return g;
}

RSeries generator_series(const TriangleType& t, const Generator& g, int N)
{
    const TriangleType s = sorted_type(t);
    if (g.variant != 0) {
        auto [a, b] = halphen_relation(s, g.k, g.variant);
        const RSeries J = cached_J(s, N + 2 * g.k);
        RSeries r = f_form(s, g.k, N + 2 * g.k) * pow_int(J, a) * pow_int(J - Rational(1), b);
        return r.truncated(N);
    }
    RSeries r = f_form(s, g.k, N + g.J_power) * pow_int(cached_J(s, N + g.J_power), g.J_power);
    return r.truncated(N);
}

std::pair<int, int> halphen_relation(const TriangleType& t, int k, int variant)
{
    const int A = ceil_div_m(k, t.m[1]) - k;
    const int B = ceil_div_m(k, t.m[0]) - k;
    if (variant == 1) {
        return {-1 - A, 1 - k - B};
    }
    if (variant == 2) {
        return {1 - k - A, -1 - B};
    }
    throw std::invalid_argument("variant must be 1 or 2");
}

std::array<Rational, 3> forced_orders(const TriangleType& t, int k)
{
    std::array<Rational, 3> r;
    for (int i = 0; i < 2; ++i) {
        r[static_cast<std::size_t>(i)] = Rational(ceil_div_m(k, t.m[static_cast<std::size_t>(i)])) - Rational(k) * t.v(i);
    }
    r[2] = d_order(t, k);
    return r;
}

int nocusp_dimension(const TriangleType& t, int k)
{
    if (t.has_cusp()) {
        throw invalid_type("nocusp_dimension needs all m_i finite");
    }
    if (k == 0) {
        return 1;
    }
    if (k < 0) {
        return 0;
    }
    int d = k + 1;
    for (int m : t.m) {
        d -= ceil_div_m(k, m);
    }
    return std::max(0, d);
}

} // namespace tg
