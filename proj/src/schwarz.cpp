#include "trigroups/schwarz.hpp"

#include <stdexcept>

namespace tg {

namespace {

// Solves the Schwarzian equation one coefficient at a time for
// J = J0 + K, K = x^e0 (1 + k_1 x + k_2 x^2 + ...).
// Every auxiliary series is kept with a nominal valuation, so its i-th
// stored entry depends on k_0..k_i only and the unknown k_i enters the
// residual linearly at relative index i.
template <class T>
class OnlineSchwarz {
public:
    OnlineSchwarz(const SchwarzCoeffs<T>& k, int J0, int e0)
        : k_(k), J0_(J0), e0_(e0), vJ_(J0 == 0 ? e0 : std::min(0, e0)), vM_(J0 == 1 ? e0 : std::min(0, e0)),
          vS_(std::min({2 * vJ_, 2 * vM_, vJ_ + vM_}))
    {
        if (2 * e0_ + 2 * vJ_ + 2 * vM_ != 4 * e0_ + vS_) {
            throw std::logic_error("inconsistent leading orders in the Schwarzian recursion");
        }
    }

    FormalSeries<T> solve(int order, Tag tag)
    {
        const int steps = order - e0_;
        K_.assign(1, T(1));
        if (!scalar_traits<T>::is_zero(level(0))) {
            throw std::logic_error("normalization does not satisfy the Schwarzian equation");
        }
        for (int n = 1; n <= steps; ++n) {
            K_.push_back(T(0));
            const T r0 = level(n);
            const T pivot = pivot_at(n);
            if (scalar_traits<T>::is_zero(pivot)) {
                throw std::logic_error("vanishing pivot in the Schwarzian recursion");
            }
            K_[n] = -(r0 * scalar_traits<T>::inverse(pivot));
            level(n);
        }
        const int off = std::min(e0_, 0);
        std::vector<T> c(static_cast<std::size_t>(order - off + 1), T(0));
        for (int i = 0; i <= steps; ++i) {
            c[static_cast<std::size_t>(e0_ + i - off)] = K_[static_cast<std::size_t>(i)];
        }
        if (J0_ != 0) {
            c[static_cast<std::size_t>(-off)] = c[static_cast<std::size_t>(-off)] + T(Rational(J0_));
        }
        return FormalSeries<T>(tag, off, std::move(c), order);
    }

private:
    T Kabs(int e) const
    {
        int i = e - e0_;
        return (i >= 0 && i < static_cast<int>(K_.size())) ? K_[static_cast<std::size_t>(i)] : T(0);
    }

    static void put(std::vector<T>& v, int n, T x)
    {
        if (static_cast<int>(v.size()) <= n) {
            v.resize(static_cast<std::size_t>(n + 1), T(0));
        }
        v[static_cast<std::size_t>(n)] = std::move(x);
    }

    static T conv(const std::vector<T>& a, const std::vector<T>& b, int n)
    {
        T s(0);
        for (int i = 0; i <= n; ++i) {
            const T& x = a[static_cast<std::size_t>(i)];
            const T& y = b[static_cast<std::size_t>(n - i)];
            if (!scalar_traits<T>::is_zero(x) && !scalar_traits<T>::is_zero(y)) {
                s = s + x * y;
            }
        }
        return s;
    }

    static T at_or_zero(const std::vector<T>& v, int i)
    {
        return i >= 0 ? v[static_cast<std::size_t>(i)] : T(0);
    }

    // Fills entry n of every auxiliary series; returns residual entry n.
    T level(int n)
    {
        T j = Kabs(vJ_ + n);
        if (vJ_ + n == 0) {
            j = j + T(Rational(J0_));
        }
        T m = Kabs(vM_ + n);
        if (vM_ + n == 0) {
            m = m + T(Rational(J0_ - 1));
        }
        put(J_, n, j);
        put(M_, n, m);
        const Rational e(e0_ + n);
        const T& kn = K_[static_cast<std::size_t>(n)];
        put(D1_, n, kn * T(e));
        put(D2_, n, kn * T(e * e));
        put(D3_, n, kn * T(e * e * e));
        put(P1_, n, conv(J_, J_, n));
        put(P2_, n, conv(M_, M_, n));
        put(P3_, n, conv(J_, M_, n));
        put(Q_, n, conv(P1_, P2_, n));
        put(T3_, n, conv(D1_, D1_, n));
        put(L0_, n, T(-2) * conv(D3_, D1_, n) + T(3) * conv(D2_, D2_, n) - k_.w * T3_[static_cast<std::size_t>(n)]);
        put(D4_, n, conv(T3_, T3_, n));
        const int e_s = vS_ + n;
        put(S_, n,
            k_.A * at_or_zero(P2_, e_s - 2 * vM_) + k_.B * at_or_zero(P1_, e_s - 2 * vJ_) +
                k_.C * at_or_zero(P3_, e_s - vJ_ - vM_));
        return conv(L0_, Q_, n) - conv(D4_, S_, n);
    }

    // d(residual entry n)/d k_n; only products with the 0-th entries contribute.
    T pivot_at(int n) const
    {
        const std::size_t z = 0;
        const Rational e(e0_ + n);
        const T dJ = vJ_ == e0_ ? T(1) : T(0);
        const T dM = vM_ == e0_ ? T(1) : T(0);
        const T dD1(e), dD2(e * e), dD3(e * e * e);
        const T dP1 = T(2) * J_[z] * dJ;
        const T dP2 = T(2) * M_[z] * dM;
        const T dP3 = dJ * M_[z] + J_[z] * dM;
        const T dQ = dP1 * P2_[z] + P1_[z] * dP2;
        const T dT3 = T(2) * D1_[z] * dD1;
        const T dL0 = T(-2) * (dD3 * D1_[z] + D3_[z] * dD1) + T(6) * D2_[z] * dD2 - k_.w * dT3;
        const T dD4 = T(2) * T3_[z] * dT3;
        const int e_s = vS_ + n;
        T dS(0);
        if (e_s - 2 * vM_ == n) {
            dS = dS + k_.A * dP2;
        }
        if (e_s - 2 * vJ_ == n) {
            dS = dS + k_.B * dP1;
        }
        if (e_s - vJ_ - vM_ == n) {
            dS = dS + k_.C * dP3;
        }
        return dL0 * Q_[z] + L0_[z] * dQ - dD4 * S_[z] - D4_[z] * dS;
    }

    SchwarzCoeffs<T> k_;
    int J0_, e0_, vJ_, vM_, vS_;
    std::vector<T> K_;
    std::vector<T> J_, M_, D1_, D2_, D3_, P1_, P2_, P3_, Q_, T3_, L0_, D4_, S_;
};

std::pair<int, int> point_shape(Point p)
{
    switch (p) {
    case Point::z1: return {1, 1};
    case Point::z2: return {0, 1};
    case Point::z3: return {0, -1};
    }
    throw std::invalid_argument("unknown point");
}

void check_order(int order)
{
    if (order < 0) {
        throw std::invalid_argument("truncation order must be non-negative");
    }
}

} // namespace

Tag point_tag(Point p)
{
    switch (p) {
    case Point::z1: return {Var::qt1, 1};
    case Point::z2: return {Var::qt2, 1};
    case Point::z3: return {Var::qt3, 1};
    }
    throw std::invalid_argument("unknown point");
}

std::pair<Rational, Rational> gammas(const TriangleType& t)
{
    Rational a = t.v(0) * t.v(0);
    Rational b = t.v(1) * t.v(1);
    return {a + b, a - b};
}

SchwarzCoeffs<Rational> schwarz_coeffs(const TriangleType& t, Point p)
{
    const Rational s1 = t.v(0) * t.v(0), s2 = t.v(1) * t.v(1), s3 = t.v(2) * t.v(2);
    const Rational vp = t.v(static_cast<int>(p) - 1);
    return {1 - s2, 1 - s1, s1 + s2 - s3 - 1, vp * vp};
}

HauptmodulExpansion expansion_at(const TriangleType& t, Point p, int order)
{
    check_order(order);
    if (!classify(t.m[0], t.m[1], t.m[2]).hyperbolic) {
        throw invalid_type("non-hyperbolic type " + t.to_string());
    }
    auto [J0, e0] = point_shape(p);
    OnlineSchwarz<Rational> eng(schwarz_coeffs(t, p), J0, e0);
    return {t, p, eng.solve(order, point_tag(p))};
}

HauptmodulExpansion cusp_expansion(const TriangleType& t, int order)
{
    if (!t.is_cusp(2)) {
        throw invalid_type("cusp expansion needs m3 = infinity");
    }
    return expansion_at(t, Point::z3, order);
}

HauptmodulExpansion elliptic_expansion(const TriangleType& t, int i, int order)
{
    if (i != 1 && i != 2) {
        throw std::invalid_argument("elliptic expansion is taken at zeta_1 or zeta_2");
    }
    return expansion_at(t, i == 1 ? Point::z1 : Point::z2, order);
}

SchwarzCoeffs<BiPoly> universal_cusp_coeffs()
{
    const BiPoly X = BiPoly::x(), Y = BiPoly::y();
    const Rational h(1, 2);
    return {BiPoly(1) - (X - Y) * h, BiPoly(1) - (X + Y) * h, X - BiPoly(1), BiPoly()};
}

SchwarzCoeffs<WRational> universal_nocusp_coeffs()
{
    auto c = universal_cusp_coeffs();
    const WRational w = WRational::w();
    return {WRational(c.A), WRational(c.B), WRational(c.C) - w, w};
}

PSeries universal_cusp_series(int order)
{
    check_order(order);
    OnlineSchwarz<BiPoly> eng(universal_cusp_coeffs(), 0, -1);
    return eng.solve(order, point_tag(Point::z3));
}

std::vector<BiPoly> universal_coeffs_cusped(int n_max)
{
    PSeries s = universal_cusp_series(n_max);
    std::vector<BiPoly> c;
    for (int n = 0; n <= n_max; ++n) {
        c.push_back(s.coeff(n));
    }
    return c;
}

FormalSeries<WRational> universal_nocusp_series(int order)
{
    check_order(order);
    OnlineSchwarz<WRational> eng(universal_nocusp_coeffs(), 0, -1);
    return eng.solve(order, point_tag(Point::z3));
}

std::vector<WRational> universal_coeffs_nocusp(int n_max)
{
    auto s = universal_nocusp_series(n_max);
    std::vector<WRational> c;
    for (int n = 0; n <= n_max; ++n) {
        c.push_back(s.coeff(n));
    }
    return c;
}

bool antisymmetry_check(int N)
{
    auto c = universal_coeffs_cusped(N);
    for (int n = 1; n <= N; ++n) {
        const Rational sign = (n % 2 == 1) ? 1 : -1;
        if (!(c[static_cast<std::size_t>(n)].scale(1, -1) == c[static_cast<std::size_t>(n)] * sign)) {
            return false;
        }
    }
    return true;
}

template <class T>
FormalSeries<T> schwarz_residual(const FormalSeries<T>& J, const SchwarzCoeffs<T>& k)
{
    const auto d1 = J.theta();
    const auto d2 = d1.theta();
    const auto d3 = d2.theta();
    const auto Jm = J - T(1);
    const auto lhs = (d3 * d1 * T(-2) + d2 * d2 * T(3) - d1 * d1 * k.w) * (J * J) * (Jm * Jm);
    const auto d1sq = d1 * d1;
    const auto rhs = d1sq * d1sq * (Jm * Jm * k.A + J * J * k.B + J * Jm * k.C);
    return lhs - rhs;
}

template RSeries schwarz_residual<Rational>(const RSeries&, const SchwarzCoeffs<Rational>&);
template PSeries schwarz_residual<BiPoly>(const PSeries&, const SchwarzCoeffs<BiPoly>&);
template FormalSeries<WRational> schwarz_residual<WRational>(const FormalSeries<WRational>&,
                                                             const SchwarzCoeffs<WRational>&);

} // namespace tg
