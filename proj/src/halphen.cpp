#include "trigroups/halphen.hpp"

#include <stdexcept>

namespace tg {

namespace {

const Tag QHAT{Var::qhat, 1};

template <class T>
using Mat3 = std::array<std::array<T, 3>, 3>;

template <class T>
Mat3<T> linearization(const T& a, const T& b, const T& c)
{
    const T one(1), zero(0);
    return {{{one - a, zero, a - one}, {one - b, zero, one - b}, {c - one, zero, one - c}}};
}

template <class T>
T det3(const Mat3<T>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <class T>
Mat3<T> adjugate(const Mat3<T>& m)
{
    Mat3<T> r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                m[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j1)] *
                    m[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j2)] -
                m[static_cast<std::size_t>(i1)][static_cast<std::size_t>(j2)] *
                    m[static_cast<std::size_t>(i2)][static_cast<std::size_t>(j1)];
        }
    }
    return r;
}

// Coefficients s_0..s_order of the cusp solution, s_0 = (0,-1,0), s_1 given.
// At order n the new vector solves (M - nI) s_n = -R_n, R_n being the
// order-n part of the quadratic form on the already known terms.
template <class T>
std::vector<Triple<T>> halphen_recursion(const T& a, const T& b, const T& c, const Triple<T>& first, int order)
{
    const T one(1);
    const Mat3<T> M = linearization(a, b, c);
    std::vector<Triple<T>> s;
    s.push_back({T(0), T(-1), T(0)});
    if (order >= 1) {
        for (int i = 0; i < 3; ++i) {
            T acc(0);
            for (int j = 0; j < 3; ++j) {
                acc = acc + M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * first[static_cast<std::size_t>(j)];
            }
            if (!(acc == first[static_cast<std::size_t>(i)])) {
                throw std::logic_error("first Halphen coefficient is not an eigenvector of the linearization");
            }
        }
        s.push_back(first);
    }
    for (int n = 2; n <= order; ++n) {
        T p11(0), p22(0), p33(0), p12(0), p13(0), p23(0);
        for (int j = 1; j < n; ++j) {
            const auto& x = s[static_cast<std::size_t>(j)];
            const auto& y = s[static_cast<std::size_t>(n - j)];
            p11 = p11 + x[0] * y[0];
            p22 = p22 + x[1] * y[1];
            p33 = p33 + x[2] * y[2];
            p12 = p12 + x[0] * y[1];
            p13 = p13 + x[0] * y[2];
            p23 = p23 + x[1] * y[2];
        }
        const Triple<T> R{(a - one) * (p12 + p13 - p23) + (b + c - one) * p11,
                          (b - one) * (p12 + p23 - p13) + (a + c - one) * p22,
                          (c - one) * (p13 + p23 - p12) + (a + b - one) * p33};
        Mat3<T> A = M;
        for (int i = 0; i < 3; ++i) {
            A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
                A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] - T(Rational(n));
        }
        const T det = det3(A);
        if (!(det == T(Rational(-n * n * (n - 1))))) {
            throw std::logic_error("unexpected determinant in the Halphen recursion");
        }
        const T inv = scalar_traits<T>::inverse(det);
        const Mat3<T> adj = adjugate(A);
        Triple<T> x;
        for (int i = 0; i < 3; ++i) {
            T acc(0);
            for (int j = 0; j < 3; ++j) {
                acc = acc - adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * R[static_cast<std::size_t>(j)];
            }
            x[static_cast<std::size_t>(i)] = acc * inv;
        }
        s.push_back(x);
    }
    return s;
}

Rational finite_square_product(const TriangleType& t)
{
    Rational P = 1;
    for (int i = 0; i < 2; ++i) {
        if (!t.is_cusp(i)) {
            P *= t.m[static_cast<std::size_t>(i)] * t.m[static_cast<std::size_t>(i)];
        }
    }
    return P;
}

// v1^a v2^b -> m1^(E-a) m2^(E-b)
BiPoly v_to_m(const BiPoly& p, int E)
{
    BiPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e.first > E || e.second > E) {
            throw std::logic_error("coefficient is not polynomial in m1, m2");
        }
        r += BiPoly::monomial(E - e.first, E - e.second, c);
    }
    return r;
}

} // namespace

HalphenParams halphen_params(const TriangleType& t)
{
    const Rational v1 = t.v(0), v2 = t.v(1), v3 = t.v(2);
    return {(1 + v2 - v1 - v3) / 2, (1 + v3 - v1 - v2) / 2, (1 + v1 - v2 - v3) / 2};
}

Rational recursion_determinant(const HalphenParams& p, int n)
{
    Mat3<Rational> A = linearization(p.a, p.b, p.c);
    for (std::size_t i = 0; i < 3; ++i) {
        A[i][i] -= n;
    }
    return det3(A);
}

std::array<BiPoly, 3> kappa_polys()
{
    const BiPoly X = BiPoly::x(), Y = BiPoly::y();
    return {-(X * X * Y * Y) - Y * Y * X + Y * X * X, X * Y + X + Y, X * X * Y * Y - Y * Y * X + Y * X * X};
}

HalphenSolution solve_cusp(const TriangleType& t, int order)
{
    if (!t.is_cusp(2)) {
        throw invalid_type("Halphen cusp solution needs m3 = infinity");
    }
    if (!classify(t.m[0], t.m[1], t.m[2]).hyperbolic) {
        throw invalid_type("non-hyperbolic type " + t.to_string());
    }
    if (order < 0) {
        throw std::invalid_argument("truncation order must be non-negative");
    }
    HalphenSolution h;
    h.type = t;
    h.params = halphen_params(t);
    h.kappa = kappa_polys();
    const Rational v1 = t.v(0), v2 = t.v(1);
    const Rational P = finite_square_product(t);
    h.alpha3_over_nu = 2 * P;
    const Triple<Rational> first{P * (-1 - v1 + v2), P * (1 + v1 + v2) * (v2 - v1), P * (1 - v1 + v2)};
    auto s = halphen_recursion<Rational>(h.params.a, h.params.b, h.params.c, first, order);
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<Rational> c;
        for (const auto& v : s) {
            c.push_back(v[i]);
        }
        h.s[i] = RSeries(QHAT, 0, std::move(c), order);
    }
    return h;
}

std::vector<Triple<BiPoly>> halphen_universal_v(int order)
{
    const BiPoly X = BiPoly::x(), Y = BiPoly::y(), one(1);
    const Rational half(1, 2);
    const BiPoly a = (one + Y - X) * half, b = (one - X - Y) * half, c = (one + X - Y) * half;
    const Triple<BiPoly> first{-one - X + Y, (one + X + Y) * (Y - X), one - X + Y};
    return halphen_recursion<BiPoly>(a, b, c, first, order);
}

std::array<std::vector<BiPoly>, 3> symbolic_t_coeffs(int order)
{
    if (order < 1) {
        throw std::invalid_argument("order must be at least 1");
    }
    const BiPoly X = BiPoly::x(), Y = BiPoly::y(), one(1);
    const std::array<BiPoly, 3> k{-one - X + Y, one + X + Y, one - X + Y};
    auto s = halphen_universal_v(order);
    std::array<std::vector<BiPoly>, 3> t;
    for (std::size_t i = 0; i < 3; ++i) {
        t[i].push_back(BiPoly());
        for (int n = 1; n <= order; ++n) {
            auto q = s[static_cast<std::size_t>(n)][i].divide_exact(k[i]);
            if (!q) {
                throw std::logic_error("Halphen coefficient not divisible by its kappa factor");
            }
            t[i].push_back(v_to_m(*q, i == 1 ? 2 * n - 1 : 2 * n - 2));
        }
    }
    return t;
}

Rational specialize_m(const BiPoly& p, const TriangleType& t)
{
    const bool i1 = t.is_cusp(0), i2 = t.is_cusp(1);
    if (i1 && i2) {
        return p.at_infinity_both();
    }
    if (i2) {
        return p.at_infinity_y().eval(t.m[0], 0);
    }
    if (i1) {
        return p.at_infinity_x().eval(0, t.m[1]);
    }
    return p.eval(t.m[0], t.m[1]);
}

RSeries eisenstein_like(const HalphenSolution& h, int k, int variant)
{
    if (k < 1 || (variant != 1 && variant != 2)) {
        throw std::invalid_argument("Eisenstein-like series needs k >= 1 and variant 1 or 2");
    }
    const RSeries d12 = h.s[0] - h.s[1];
    const RSeries d32 = h.s[2] - h.s[1];
    return variant == 1 ? d12 * pow_int(d32, k - 1) : pow_int(d12, k - 1) * d32;
}

RSeries halphen_E4(const HalphenSolution& h)
{
    return eisenstein_like(h, 2, 1);
}

RSeries halphen_E6(const HalphenSolution& h)
{
    return eisenstein_like(h, 3, 2);
}

HalphenHauptmodul hauptmodul_from_halphen(const HalphenSolution& h)
{
    HalphenHauptmodul r;
    r.J = (h.s[2] - h.s[1]) / (h.s[2] - h.s[0]);
    const BiPoly X = BiPoly::x(), Y = BiPoly::y();
    r.scale = specialize_m(X * X * Y * Y * Rational(2), h.type);
    r.shift = specialize_m(-(X * X * Y * Y) + Y * Y - X * X, h.type);
    r.j_norm = r.J * r.scale + r.shift;
    return r;
}

std::array<RSeries, 3> halphen_residual(const HalphenSolution& h)
{
    const auto& s = h.s;
    const auto& p = h.params;
    const RSeries s11 = s[0] * s[0], s22 = s[1] * s[1], s33 = s[2] * s[2];
    const RSeries s12 = s[0] * s[1], s13 = s[0] * s[2], s23 = s[1] * s[2];
    return {s[0].theta() - ((s12 + s13 - s23) * Rational(p.a - 1) + s11 * Rational(p.b + p.c - 1)),
            s[1].theta() - ((s12 + s23 - s13) * Rational(p.b - 1) + s22 * Rational(p.a + p.c - 1)),
            s[2].theta() - ((s13 + s23 - s12) * Rational(p.c - 1) + s33 * Rational(p.a + p.b - 1))};
}

std::array<RSeries, 3> diagonal_transform(const std::array<RSeries, 3>& s, int k, const Rational& lambda)
{
    std::array<RSeries, 3> r;
    for (std::size_t i = 0; i < 3; ++i) {
        r[i] = s[i].rescaled(lambda, s[i].tag()).inflated(k, s[i].tag()) * Rational(k);
    }
    return r;
}

} // namespace tg
