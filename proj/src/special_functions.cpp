#include "trigroups/special_functions.hpp"

#include "trigroups/schwarz.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <numeric>

namespace tg {

namespace {

const Real& eps()
{
    static const Real e = ldexp(Real(1), -static_cast<int>(precision_bits) + 3);
    return e;
}

const Complex I_UNIT(Real(0), Real(1));

bool is_nonpositive_integer(const Rational& x)
{
    return is_integer(x) && x <= 0;
}

Real cplx_abs(const Complex& z)
{
    return abs(z);
}

Complex cpow(const Complex& z, const Rational& e)
{
    return pow(z, Complex(to_real(e)));
}

// Sum of (a)_n (b)_n / ((c)_n n!) z^n and its derivative; |z| < 1 or a terminating series.
Jet series_jet(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    if (is_nonpositive_integer(c)) {
        throw hyp_domain_error("2F1: c is a non-positive integer");
    }
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (!terminating && cplx_abs(z) >= 1) {
        throw hyp_domain_error("2F1: direct series needs |z| < 1");
    }
    const Real ra = to_real(a), rb = to_real(b), rc = to_real(c);
    // coef = (a)_n (b)_n / ((c)_n n!), zprev = z^(n-1)
    Complex coef(1), zprev(1), sum(1), d(0);
    int small = 0;
    for (long n = 0; n < 200000; ++n) {
        const Real rn(n);
        coef *= Complex((ra + rn) * (rb + rn) / ((rc + rn) * (rn + 1)));
        if (coef == Complex(0)) {
            break;
        }
        const Complex dadd = coef * Complex(rn + 1) * zprev;
        const Complex add = coef * zprev * z;
        sum += add;
        d += dadd;
        zprev *= z;
        if (cplx_abs(add) <= eps() * cplx_abs(sum) && cplx_abs(dadd) <= eps() * (cplx_abs(d) + eps())) {
            if (++small >= 3) {
                break;
            }
        } else {
            small = 0;
        }
    }
    return {sum, d};
}

// Sum p_n (h_n - ln s) s^n with p_n = (a)_n (b)_n / n!^2,
// h_n = 2 psi(n+1) - psi(a+n) - psi(b+n); returns value and d/ds.
Jet log_sum(const Rational& a, const Rational& b, const Complex& s)
{
    if (cplx_abs(s) >= 1) {
        throw hyp_domain_error("2F1: logarithmic series needs |s| < 1");
    }
    const Real ra = to_real(a), rb = to_real(b);
    const Complex L = log(s);
    Real psi1 = -euler_gamma();
    Real psia = digamma(a), psib = digamma(b);
    Complex p(1), spow(1);
    Complex val(0), der(0);
    int small = 0;
    for (long n = 0; n < 200000; ++n) {
        const Real rn(n);
        const Complex h(2 * psi1 - psia - psib);
        const Complex t = p * (h - L);
        const Complex add = t * spow;
        val += add;
        // d/ds of p (h - L) s^n = p (n (h - L) - 1) s^(n-1)
        der += p * (Complex(rn) * (h - L) - Complex(1)) * spow / s;
        if (cplx_abs(add) <= eps() * cplx_abs(val) && n > 2) {
            if (++small >= 3) {
                break;
            }
        } else {
            small = 0;
        }
        p *= Complex((ra + rn) * (rb + rn) / ((rn + 1) * (rn + 1)));
        spow *= s;
        psi1 += 1 / (rn + 1);
        psia += 1 / (ra + rn);
        psib += 1 / (rb + rn);
    }
    return {val, der};
}

Jet one_minus_z_jet(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    const Complex s = Complex(1) - z;
    const Rational e = c - a - b;
    if (e == 0) {
        const Real k = gamma_rational(a + b) * rgamma_rational(a) * rgamma_rational(b);
        Jet g = log_sum(a, b, s);
        return {Complex(k) * g.y, -Complex(k) * g.dy};
    }
    if (is_integer(e)) {
        throw hyp_domain_error("2F1: c - a - b is a nonzero integer, not covered");
    }
    const Real gc = gamma_rational(c);
    const Real A1 = gc * gamma_rational(e) * rgamma_rational(c - a) * rgamma_rational(c - b);
    const Real A2 = gc * gamma_rational(-e) * rgamma_rational(a) * rgamma_rational(b);
    Jet f1 = series_jet(a, b, 1 - e, s);
    Jet f2 = series_jet(c - a, c - b, 1 + e, s);
    const Complex se = cpow(s, e);
    const Complex dse = Complex(to_real(e)) * se / s;
    Complex y = Complex(A1) * f1.y + Complex(A2) * se * f2.y;
    Complex ds = Complex(A1) * f1.dy + Complex(A2) * (dse * f2.y + se * f2.dy);
    return {y, -ds};
}

Jet inverse_z_jet(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    const Complex w = Complex(1) / z;
    const Complex mz = -z;
    const Real gc = gamma_rational(c);
    if (a == b) {
        const Rational ca = c - a;
        if (is_integer(ca)) {
            throw hyp_domain_error("2F1: a = b with c - a integral, not covered");
        }
        if (cplx_abs(w) >= 1) {
            throw hyp_domain_error("2F1: 1/z series needs |z| > 1");
        }
        const Real K = gc * rgamma_rational(a) * rgamma_rational(ca);
        const Real ra = to_real(a), rd = to_real(1 - c + a), rca = to_real(ca);
        const Complex L = log(mz);
        Real psi1 = -euler_gamma();
        Real psia = digamma(a);
        Real psic = digamma(ca);
        Complex p(1), wpow(1), S(0), dS(0);
        int small = 0;
        for (long n = 0; n < 200000; ++n) {
            const Real rn(n);
            const Complex g = L + Complex(2 * psi1 - psia - psic);
            const Complex add = p * g * wpow;
            S += add;
            dS += p * (Complex(1) - Complex(rn) * g) * wpow;
            if (cplx_abs(add) <= eps() * cplx_abs(S) && n > 2) {
                if (++small >= 3) {
                    break;
                }
            } else {
                small = 0;
            }
            p *= Complex((ra + rn) * (rd + rn) / ((rn + 1) * (rn + 1)));
            wpow *= w;
            psi1 += 1 / (rn + 1);
            psia += 1 / (ra + rn);
            // psi(x - 1) = psi(x) - 1/(x - 1)
            psic -= 1 / (rca - rn - 1);
        }
        dS /= z;
        const Complex pre = Complex(K) * cpow(mz, -a);
        return {pre * S, pre * (Complex(-to_real(a)) * S / z + dS)};
    }
    if (is_integer(a - b)) {
        throw hyp_domain_error("2F1: a - b is a nonzero integer, not covered");
    }
    const Real B1 = gc * gamma_rational(b - a) * rgamma_rational(b) * rgamma_rational(c - a);
    const Real B2 = gc * gamma_rational(a - b) * rgamma_rational(a) * rgamma_rational(c - b);
    auto piece = [&](const Rational& p, const Rational& q, const Real& coef) {
        Jet g = series_jet(p, p - c + 1, p - q + 1, w);
        const Complex pre = Complex(coef) * cpow(mz, -p);
        Complex y = pre * g.y;
        Complex dy = pre * (Complex(-to_real(p)) * g.y / z - g.dy / (z * z));
        return Jet{y, dy};
    };
    Jet j1 = piece(a, b, B1);
    Jet j2 = piece(b, a, B2);
    return {j1.y + j2.y, j1.dy + j2.dy};
}

// One Taylor step of the Gauss equation from z0 by h.
Jet gauss_step(const Real& ra, const Real& rb, const Real& rc, const Complex& z0, const Jet& j, const Complex& h)
{
    const Complex P0 = z0 * (Complex(1) - z0);
    const Complex P1 = Complex(1) - Complex(2) * z0;
    const Complex Q0 = Complex(rc) - Complex(ra + rb + 1) * z0;
    const Complex Q1(-(ra + rb + 1));
    const Complex R(-(ra * rb));
    Complex y0 = j.y, y1 = j.dy;
    Complex val = y0 + y1 * h;
    Complex der = y1;
    Complex hp = h; // h^(n+1) for the coefficient y_{n+1}
    int small = 0;
    for (long n = 0; n < 100000; ++n) {
        const Complex rn{Real(n)};
        const Complex y2 = -((P1 * rn + Q0) * (rn + Complex(1)) * y1 + (Complex(-1) * rn * (rn - Complex(1)) + Q1 * rn + R) * y0) /
                           (P0 * (rn + Complex(2)) * (rn + Complex(1)));
        const Complex add = y2 * hp * h;
        val += add;
        der += y2 * (rn + Complex(2)) * hp;
        hp *= h;
        if (cplx_abs(add) <= eps() * (cplx_abs(val) + eps())) {
            if (++small >= 4) {
                break;
            }
        } else {
            small = 0;
        }
        y0 = y1;
        y1 = y2;
    }
    return {val, der};
}

Jet hyp2f1_jet(const Rational& a, const Rational& b, const Rational& c, const Complex& z);

Jet continued_jet(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    const Complex start = z * Complex(Real(2) / 5 / cplx_abs(z));
    return gauss_continue(a, b, c, series_jet(a, b, c, start), {start, z});
}

void check_cut(const Complex& z)
{
    if (z.imag() == 0 && z.real() >= 1) {
        throw hyp_domain_error("2F1: z lies on the branch cut [1, inf)");
    }
}

Jet hyp2f1_jet(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    if (is_nonpositive_integer(c)) {
        throw hyp_domain_error("2F1: c is a non-positive integer");
    }
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
        return series_jet(a, b, c, z);
    }
    check_cut(z);
    switch (hyp2f1_route(z)) {
    case HypRoute::direct:
        return series_jet(a, b, c, z);
    case HypRoute::one_minus_z:
        return one_minus_z_jet(a, b, c, z);
    case HypRoute::inverse_z:
        return inverse_z_jet(a, b, c, z);
    case HypRoute::continuation:
        break;
    }
    return continued_jet(a, b, c, z);
}

CMat transpose(const CMat& m)
{
    return {m.a, m.c, m.b, m.d};
}

// Rows (u_i, u_i') of a pair of jets.
CMat jet_matrix(const Jet& j1, const Jet& j2)
{
    return {j1.y, j1.dy, j2.y, j2.dy};
}

const Complex& two_pi_i()
{
    static const Complex v = Complex(Real(0), 2 * real_pi());
    return v;
}

} // namespace

Real digamma_rational(long m, long n)
{
    if (m <= 0 || m >= n) {
        throw std::invalid_argument("digamma_rational: need 0 < m < n");
    }
    const Real pi = real_pi();
    const Real rm(m), rn(n);
    Real r = -euler_gamma() - log(rn) - pi / 2 * cos(pi * rm / rn) / sin(pi * rm / rn);
    for (long k = 1; 2 * k <= n; ++k) {
        const Real rk(k);
        Real t = cos(2 * pi * rm * rk / rn) * log(2 - 2 * cos(2 * pi * rk / rn));
        if (2 * k == n) {
            t /= 2;
        }
        r += t;
    }
    return r;
}

Real digamma(const Rational& x)
{
    if (is_nonpositive_integer(x)) {
        throw std::domain_error("digamma: pole at a non-positive integer");
    }
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    const Rational frac = x - Rational(fl);
    long k = fl.get_si();
    Real r;
    Real base;
    if (frac == 0) {
        r = -euler_gamma();
        base = Real(1);
        k -= 1; // x = 1 + k
    } else {
        r = digamma_rational(frac.get_num().get_si(), frac.get_den().get_si());
        base = to_real(frac);
    }
    for (long j = 0; j < k; ++j) {
        r += 1 / (base + Real(j));
    }
    for (long j = -1; j >= k; --j) {
        r -= 1 / (base + Real(j));
    }
    return r;
}

Real gamma_rational(const Rational& x)
{
    if (is_nonpositive_integer(x)) {
        throw std::domain_error("gamma: pole at a non-positive integer");
    }
    return boost::math::tgamma(to_real(x));
}

Real rgamma_rational(const Rational& x)
{
    if (is_nonpositive_integer(x)) {
        return Real(0);
    }
    return 1 / boost::math::tgamma(to_real(x));
}

HypRoute hyp2f1_route(const Complex& z)
{
    if (cplx_abs(z) <= Real(1) / 2) {
        return HypRoute::direct;
    }
    if (cplx_abs(Complex(1) - z) <= Real(1) / 2) {
        return HypRoute::one_minus_z;
    }
    if (cplx_abs(z) >= 2) {
        return HypRoute::inverse_z;
    }
    return HypRoute::continuation;
}

Complex hyp2f1(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    return hyp2f1_jet(a, b, c, z).y;
}

Complex hyp2f1_series(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    return series_jet(a, b, c, z).y;
}

Complex hyp2f1_one_minus_z(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    check_cut(z);
    return one_minus_z_jet(a, b, c, z).y;
}

Complex hyp2f1_inverse_z(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    check_cut(z);
    return inverse_z_jet(a, b, c, z).y;
}

Complex hyp2f1_continued(const Rational& a, const Rational& b, const Rational& c, const Complex& z)
{
    check_cut(z);
    return continued_jet(a, b, c, z).y;
}

Jet gauss_continue(const Rational& a, const Rational& b, const Rational& c, Jet start, const std::vector<Complex>& path)
{
    const Real ra = to_real(a), rb = to_real(b), rc = to_real(c);
    Jet j = start;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        Complex p = path[i];
        const Complex target = path[i + 1];
        for (int guard = 0; guard < 100000; ++guard) {
            const Complex rest = target - p;
            const Real len = cplx_abs(rest);
            if (len == 0) {
                break;
            }
            const Real rho = std::min(cplx_abs(p), cplx_abs(Complex(1) - p));
            if (rho < eps()) {
                throw hyp_domain_error("gauss_continue: path runs into a singular point");
            }
            const Real hmax = rho / 2;
            Complex h = len <= hmax ? rest : rest * Complex(hmax / len);
            j = gauss_step(ra, rb, rc, p, j, h);
            p = len <= hmax ? target : p + h;
        }
    }
    return j;
}

ConnectionCase make_case(CuspCount tag, const Rational& a, const Rational& b, const Rational& c)
{
    auto fail = [](const char* why) { throw std::invalid_argument(std::string("connection case: ") + why); };
    switch (tag) {
    case CuspCount::inf0:
        if (is_integer(a) || is_integer(b) || is_integer(c) || is_integer(c - a - b) || is_integer(a - b)) {
            fail("a, b, c, c-a-b, a-b must be nonintegral");
        }
        break;
    case CuspCount::inf1:
        if (a != b || is_integer(a) || is_integer(c) || is_integer(c - 2 * a)) {
            fail("needs a = b with a, c, c-2a nonintegral");
        }
        break;
    case CuspCount::inf2:
        if (a != b || c != 2 * a || is_integer(a) || is_integer(c)) {
            fail("needs a = b, c = 2a, with a, c nonintegral");
        }
        break;
    case CuspCount::inf3:
        if (a != rat(1, 2) || b != rat(1, 2) || c != 1) {
            fail("parameters are fixed to (1/2, 1/2, 1)");
        }
        break;
    }
    return {tag, a, b, c};
}

ConnectionCase connection_case(const TriangleType& t)
{
    const auto cl = classify(t.m[0], t.m[1], t.m[2]);
    if (!cl.hyperbolic) {
        throw invalid_type("non-hyperbolic type " + t.to_string());
    }
    const TriangleType& s = cl.canonical;
    const Rational v1 = s.v(0), v2 = s.v(1), v3 = s.v(2);
    int cusps = 0;
    for (int i = 0; i < 3; ++i) {
        cusps += s.is_cusp(i) ? 1 : 0;
    }
    const Rational a = (1 - v1 - v2 + v3) / 2;
    const Rational b = (1 - v1 - v2 - v3) / 2;
    return make_case(static_cast<CuspCount>(cusps), a, b, 1 - v1);
}

std::array<Jet, 2> local_solutions(const ConnectionCase& cc, const Complex& z)
{
    Jet u1 = hyp2f1_jet(cc.a, cc.b, cc.c, z);
    if (cc.tag == CuspCount::inf3) {
        Jet f = hyp2f1_jet(cc.a, cc.b, cc.c, Complex(1) - z);
        return {u1, Jet{I_UNIT * f.y, -I_UNIT * f.dy}};
    }
    const Rational e = 1 - cc.c;
    check_cut(z);
    Jet g = hyp2f1_jet(cc.a - cc.c + 1, cc.b - cc.c + 1, 2 - cc.c, z);
    const Complex ze = cpow(z, e);
    Jet u2{ze * g.y, Complex(to_real(e)) * ze / z * g.y + ze * g.dy};
    return {u1, u2};
}

Complex inf3_u2_log_series(const Complex& z)
{
    Jet s = log_sum(rat(1, 2), rat(1, 2), z);
    return I_UNIT / Complex(real_pi()) * s.y;
}

CMat inverse(const CMat& m)
{
    const Complex d = det(m);
    return {m.d / d, -m.b / d, -m.c / d, m.a / d};
}

Complex trace(const CMat& m)
{
    return m.a + m.d;
}

Complex det(const CMat& m)
{
    return m.a * m.d - m.b * m.c;
}

Real max_abs_diff(const CMat& x, const CMat& y)
{
    Real r = abs(x.a - y.a);
    r = std::max(r, Real(abs(x.b - y.b)));
    r = std::max(r, Real(abs(x.c - y.c)));
    r = std::max(r, Real(abs(x.d - y.d)));
    return r;
}

CMat connection_to_one(const ConnectionCase& cc)
{
    const Complex z0(Real(1) / 2);
    auto u = local_solutions(cc, z0);
    const Complex s0 = Complex(1) - z0;
    const Rational e = cc.c - cc.a - cc.b;
    Jet w1, w2;
    if (e == 0) {
        Jet f = series_jet(cc.a, cc.b, 1, s0);
        Jet g = log_sum(cc.a, cc.b, s0);
        w1 = {f.y, -f.dy};
        w2 = {g.y, -g.dy};
    } else {
        Jet f1 = series_jet(cc.a, cc.b, 1 - e, s0);
        Jet f2 = series_jet(cc.c - cc.a, cc.c - cc.b, 1 + e, s0);
        const Complex se = cpow(s0, e);
        w1 = {f1.y, -f1.dy};
        w2 = {se * f2.y, -(Complex(to_real(e)) * se / s0 * f2.y + se * f2.dy)};
    }
    // rows: U = A W
    const CMat U = jet_matrix(u[0], u[1]);
    const CMat W = jet_matrix(w1, w2);
    return U * inverse(W);
}

CMat connection_to_one_closed_form(const ConnectionCase& cc)
{
    const Rational &a = cc.a, &b = cc.b, &c = cc.c;
    const Rational e = c - a - b;
    if (is_integer(e) || cc.tag == CuspCount::inf3) {
        throw hyp_domain_error("closed-form connection needs c - a - b nonintegral");
    }
    const Real g1 = gamma_rational(c), g2 = gamma_rational(2 - c);
    const Real ge = gamma_rational(e), gme = gamma_rational(-e);
    return {Complex(g1 * ge * rgamma_rational(c - a) * rgamma_rational(c - b)),
            Complex(g1 * gme * rgamma_rational(a) * rgamma_rational(b)),
            Complex(g2 * ge * rgamma_rational(1 - a) * rgamma_rational(1 - b)),
            Complex(g2 * gme * rgamma_rational(a - c + 1) * rgamma_rational(b - c + 1))};
}

Monodromy monodromy(const ConnectionCase& cc)
{
    if (cc.tag == CuspCount::inf3) {
        const Complex one(1), zero(0), two(2);
        CMat M0{one, two, zero, one};
        CMat M1{one, zero, -two, one};
        return {M0, M1, inverse(M1) * inverse(M0)};
    }
    const CMat M0{Complex(1), Complex(0), Complex(0), exp(-two_pi_i() * Complex(to_real(cc.c)))};
    const Rational e = cc.c - cc.a - cc.b;
    CMat D;
    if (e == 0) {
        // the logarithmic solution picks up -2 pi i times the holomorphic one
        D = {Complex(1), Complex(0), -two_pi_i(), Complex(1)};
    } else {
        D = {Complex(1), Complex(0), Complex(0), exp(two_pi_i() * Complex(to_real(e)))};
    }
    const CMat A = connection_to_one(cc);
    const CMat M1 = transpose(A * D * inverse(A));
    return {M0, M1, inverse(M1) * inverse(M0)};
}

CMat monodromy_by_continuation(const ConnectionCase& cc, const Complex& center, const Real& radius, const Real& start_angle)
{
    const int steps = 64;
    std::vector<Complex> path;
    for (int k = 0; k <= steps; ++k) {
        const Real th = start_angle + 2 * real_pi() * Real(k) / Real(steps);
        path.push_back(center + Complex(radius * cos(th), radius * sin(th)));
    }
    auto u = local_solutions(cc, path.front());
    Jet e1 = gauss_continue(cc.a, cc.b, cc.c, u[0], path);
    Jet e2 = gauss_continue(cc.a, cc.b, cc.c, u[1], path);
    // rows of the new jets = M^T rows of the old ones
    const CMat Mt = jet_matrix(e1, e2) * inverse(jet_matrix(u[0], u[1]));
    return transpose(Mt);
}

Real alpha_cusp(const Rational& v1, const Rational& v2)
{
    const Rational ab = (1 + v1 - v2) / 2;
    const Rational cd = (1 + v1 + v2) / 2;
    const Real pi = real_pi();
    auto factor = [&](const Rational& f) {
        const long num = f.get_num().get_si(), den = f.get_den().get_si();
        Real r(1);
        for (long k = 1; k < den; ++k) {
            const Real base = 2 - 2 * cos(2 * pi * Real(k) / Real(den));
            const Real ex = -cos(2 * pi * Real(k * num) / Real(den)) / 2;
            r *= pow(base, ex);
        }
        return r;
    };
    return Real(ab.get_den().get_si() * cd.get_den().get_si()) * factor(ab) * factor(cd);
}

Real alpha_elliptic(const Rational& v1, const Rational& v2, int i)
{
    if (i != 1 && i != 2) {
        throw std::invalid_argument("alpha_elliptic: i must be 1 or 2");
    }
    const Rational vi = i == 1 ? v1 : v2;
    const Rational vo = i == 1 ? v2 : v1;
    const Real pi = real_pi();
    const Real ratio = cos(pi * to_real(v1 + v2) / 2) / cos(pi * to_real(v1 - v2) / 2);
    const Real g = gamma_rational(1 + vi) * pow(gamma_rational((1 - vi + vo) / 2), 2) /
                   (gamma_rational(1 - vi) * pow(gamma_rational((1 + v1 + v2) / 2), 2));
    return ratio * g;
}

Real mu_constant(const Rational& a, const Rational& c)
{
    const Real pi = real_pi();
    return sin(pi * to_real(c - a)) / sin(pi * to_real(a)) * pow(gamma_rational(a - c + 1), 2) * gamma_rational(c) /
           (pow(gamma_rational(a), 2) * gamma_rational(2 - c));
}

AlphaConstants alpha_constants(const TriangleType& t)
{
    if (!t.is_cusp(2)) {
        throw invalid_type("alpha constants need m3 = inf");
    }
    const auto cl = classify(t.m[0], t.m[1], t.m[2]);
    if (!cl.hyperbolic) {
        throw invalid_type("non-hyperbolic type " + t.to_string());
    }
    const Rational v1 = t.v(0), v2 = t.v(1);
    AlphaConstants r;
    r.type = t;
    for (int i = 0; i < 2; ++i) {
        r.alpha[static_cast<std::size_t>(i)] = t.is_cusp(i) ? alpha_cusp(v1, v2) : alpha_elliptic(v1, v2, i + 1);
    }
    r.alpha[2] = alpha_cusp(v1, v2);
    r.mu = mu_constant((1 - v1 - v2) / 2, 1 - v1);
    r.h3 = group_data(t).h3_real;
    Rational P(2);
    for (int i = 0; i < 2; ++i) {
        if (!t.is_cusp(i)) {
            P *= t.m[static_cast<std::size_t>(i)] * t.m[static_cast<std::size_t>(i)];
        }
    }
    r.alpha3_over_nu = P;
    r.nu = r.alpha[2] / to_real(P);
    return r;
}

Complex schwarz_tau(const TriangleType& t, const Complex& z)
{
    if (!t.is_cusp(2)) {
        throw invalid_type("the round trip needs a cusp at zeta_3");
    }
    if (!(z.imag() > 0 || (z.imag() == 0 && z.real() < 0))) {
        throw std::invalid_argument("z must lie in the upper half plane or on (-inf, 0)");
    }
    if (t.is_cusp(0) && t.is_cusp(1)) {
        // lambda inversion: x = lambda(tau'), J = 1/lambda; tau = 2 tau' - 1 puts
        // z = 0, 1 at zeta_1 = -1, zeta_2 = 1
        const Complex x = Complex(1) / (Complex(1) - z);
        const Rational h = rat(1, 2);
        const Complex tp = I_UNIT * hyp2f1(h, h, 1, Complex(1) - x) / hyp2f1(h, h, 1, x);
        return Complex(2) * tp - Complex(1);
    }
    if (t.is_cusp(0)) {
        throw invalid_type("the Schwarz map needs m1 finite");
    }
    const Rational v1 = t.v(0), v2 = t.v(1);
    const Rational a = (1 - v1 - v2) / 2, c = 1 - v1;
    const Complex u1 = hyp2f1(a, a, c, z);
    const Complex u2 = cpow(z, 1 - c) * hyp2f1(a - c + 1, a - c + 1, 2 - c, z);
    const Complex phi = Complex(mu_constant(a, c)) * u2 / u1;
    const Complex zeta1 = group_data(t).zeta1;
    return (phi + zeta1) / (zeta1 * phi + Complex(1));
}

RoundTrip schwarz_roundtrip(const TriangleType& t, const Complex& z, int N)
{
    RoundTrip r;
    r.tau = schwarz_tau(t, z);
    const AlphaConstants ac = alpha_constants(t);
    // measured from the edge zeta_1 -> i inf, where J is real and > 1
    const Complex shift(group_data(t).zeta1.real());
    const Complex q3 = exp(two_pi_i() * (r.tau - shift) / Complex(ac.h3));
    if (abs(q3) >= Real(1) / 2) {
        throw roundtrip_error("tau(z) too close to the real axis for the cusp series");
    }
    r.qt3 = Complex(ac.alpha[2]) * q3;
    const RSeries J = cusp_expansion(t, N).series;
    Complex p(0);
    for (int k = N; k >= 0; --k) {
        p = p * r.qt3 + Complex(to_real(J.coeff(k)));
    }
    r.J = Complex(to_real(J.coeff(-1))) / r.qt3 + p;
    r.residual = abs(r.J - (Complex(1) - z));
    return r;
}

} // namespace tg
