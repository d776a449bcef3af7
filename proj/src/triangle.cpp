#include "trigroups/triangle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tg {

namespace {

int sort_key(int m) { return m == INF ? 1 << 30 : m; }

long squarefree_part(long n, long& square_root_factor)
{
    square_root_factor = 1;
    for (long p = 2; p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            square_root_factor *= p;
        }
    }
    return n;
}

} // namespace

Rational TriangleType::v(int i) const
{
    int mi = m[static_cast<std::size_t>(i)];
    return mi == INF ? Rational(0) : rat(1, mi);
}

std::string TriangleType::to_string() const
{
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < 3; ++i) {
        if (i > 0) {
            os << ",";
        }
        int mi = m[static_cast<std::size_t>(i)];
        if (mi == INF) {
            os << "inf";
        } else {
            os << mi;
        }
    }
    os << ")";
    return os.str();
}

Classification classify(int m1, int m2, int m3)
{
    Classification c;
    c.original.m = {m1, m2, m3};
    for (int m : c.original.m) {
        if (m != INF && m < 2) {
            throw invalid_type("stabilizer orders must be >= 2 or infinite");
        }
    }
    std::array<int, 3> idx{0, 1, 2};
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) {
        return sort_key(c.original.m[static_cast<std::size_t>(x)]) < sort_key(c.original.m[static_cast<std::size_t>(y)]);
    });
    c.perm = idx;
    for (std::size_t k = 0; k < 3; ++k) {
        c.canonical.m[k] = c.original.m[static_cast<std::size_t>(idx[k])];
    }
    const auto& s = c.canonical.m;
    const bool m3_inf = s[2] == INF;
    if (s[0] == 2 && s[1] == 2) {
        c.reason = "type (2,2,m) is not hyperbolic";
    } else if (s[0] == 2 && s[1] == 3 && !m3_inf && s[2] <= 6) {
        c.reason = "type (2,3,n) with n <= 6 is not hyperbolic";
    } else if (s == std::array<int, 3>{2, 4, 4}) {
        c.reason = "type (2,4,4) is not hyperbolic";
    } else if (s == std::array<int, 3>{3, 3, 3}) {
        c.reason = "type (3,3,3) is not hyperbolic";
    } else {
        c.hyperbolic = true;
    }
    return c;
}

TriangleType parse_type(const std::string& text)
{
    std::array<int, 3> m{};
    std::stringstream ss(text);
    std::string tok;
    int k = 0;
    while (std::getline(ss, tok, ',')) {
        if (k >= 3) {
            throw invalid_type("type needs exactly three entries: '" + text + "'");
        }
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok == "inf" || tok == "oo" || tok == "infinity") {
            m[static_cast<std::size_t>(k)] = INF;
        } else {
            try {
                std::size_t used = 0;
                int val = std::stoi(tok, &used);
                if (used != tok.size()) {
                    throw std::invalid_argument(tok);
                }
                if (val == INF) {
                    throw invalid_type("stabilizer orders must be >= 2 or infinite");
                }
                m[static_cast<std::size_t>(k)] = val;
            } catch (const invalid_type&) {
                throw;
            } catch (const std::exception&) {
                throw invalid_type("malformed type entry '" + tok + "'");
            }
        }
        ++k;
    }
    if (k != 3) {
        throw invalid_type("type needs exactly three entries: '" + text + "'");
    }
    Classification c = classify(m[0], m[1], m[2]);
    if (!c.hyperbolic) {
        throw invalid_type("non-hyperbolic type " + c.original.to_string() + ": " + c.reason);
    }
    return c.original;
}

Surd::Surd(const Rational& r)
{
    add(1, r);
}

Surd Surd::sqrt_of(long d)
{
    if (d <= 0) {
        throw std::domain_error("square root of a non-positive integer");
    }
    long f = 1;
    long sf = squarefree_part(d, f);
    Surd s;
    s.add(sf, Rational(f));
    return s;
}

void Surd::add(long d, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto& slot = t_[d];
    slot += c;
    if (slot == 0) {
        t_.erase(d);
    }
}

bool Surd::is_rational() const
{
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == 1);
}

Rational Surd::rational_part() const
{
    auto it = t_.find(1);
    return it == t_.end() ? Rational(0) : it->second;
}

Surd operator+(const Surd& a, const Surd& b)
{
    Surd r = a;
    for (const auto& [d, c] : b.t_) {
        r.add(d, c);
    }
    return r;
}

Surd operator-(const Surd& a, const Surd& b)
{
    return a + (-b);
}

Surd Surd::operator-() const
{
    Surd r = *this;
    for (auto& [d, c] : r.t_) {
        c = -c;
    }
    return r;
}

Surd operator*(const Surd& a, const Surd& b)
{
    Surd r;
    for (const auto& [da, ca] : a.t_) {
        for (const auto& [db, cb] : b.t_) {
            long g = std::gcd(da, db);
            r.add((da / g) * (db / g), ca * cb * g);
        }
    }
    return r;
}

Real Surd::value() const
{
    Real s = 0;
    for (const auto& [d, c] : t_) {
        s += to_real(c) * sqrt(Real(d));
    }
    return s;
}

std::string Surd::to_string() const
{
    if (t_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : t_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        if (d == 1) {
            os << c.get_str();
        } else {
            os << "(" << c.get_str() << ")*sqrt(" << d << ")";
        }
    }
    return os.str();
}

std::optional<Surd> two_cos_pi_over(int m)
{
    switch (m) {
    case INF: return Surd(Rational(2));
    case 2: return Surd(Rational(0));
    case 3: return Surd(Rational(1));
    case 4: return Surd::sqrt_of(2);
    case 5: return Surd(rat(1, 2)) + Surd(rat(1, 2)) * Surd::sqrt_of(5);
    case 6: return Surd::sqrt_of(3);
    default: return std::nullopt;
    }
}

Real two_cos_pi_over_real(int m)
{
    if (m == INF) {
        return Real(2);
    }
    return 2 * cos(real_pi() / m);
}

GroupData group_data(const TriangleType& t)
{
    Classification cl = classify(t.m[0], t.m[1], t.m[2]);
    if (!cl.hyperbolic) {
        throw invalid_type("non-hyperbolic type " + t.to_string());
    }
    GroupData g;
    g.type = t;
    for (int i = 0; i < 3; ++i) {
        g.v[static_cast<std::size_t>(i)] = t.v(i);
    }
    const Rational &v1 = g.v[0], &v2 = g.v[1], &v3 = g.v[2];
    g.a = (1 + v2 - v1 - v3) / 2;
    g.b = (1 + v3 - v1 - v2) / 2;
    g.c = (1 + v1 - v2 - v3) / 2;
    g.ha = (1 - v1 - v2 + v3) / 2;
    g.hb = (1 - v1 - v2 - v3) / 2;
    g.hc = 1 - v1;

    const Real pi = real_pi();
    g.zeta1 = -Complex(cos(pi * to_real(v1)), -sin(pi * to_real(v1)));
    g.zeta2 = Complex(cos(pi * to_real(v2)), sin(pi * to_real(v2)));

    auto c1 = two_cos_pi_over(t.m[0]);
    auto c2 = two_cos_pi_over(t.m[1]);
    const Real c1r = two_cos_pi_over_real(t.m[0]);
    const Real c2r = two_cos_pi_over_real(t.m[1]);
    g.h3_real = c1r + c2r;
    if (c1 && c2) {
        g.h3 = *c1 + *c2;
    }
    if (t.is_cusp(1)) {
        g.h2 = Rational(1);
    }
    g.gens_real = {Mat2<Real>{c1r, 1, -1, 0}, Mat2<Real>{0, 1, -1, c2r}, Mat2<Real>{1, c1r + c2r, 0, 1}};
    if (c1 && c2) {
        g.exact_generators = true;
        g.gens = {Mat2<Surd>{*c1, Surd(1), Surd(-1), Surd(0)}, Mat2<Surd>{Surd(0), Surd(1), Surd(-1), *c2},
                  Mat2<Surd>{Surd(1), *c1 + *c2, Surd(0), Surd(1)}};
    }
    return g;
}

bool is_arithmetic(const TriangleType& t)
{
    if (!t.has_cusp()) {
        throw invalid_type("arithmeticity is only classified for cusped types");
    }
    Classification c = classify(t.m[0], t.m[1], t.m[2]);
    static const std::array<std::array<int, 3>, 9> list{{{INF, INF, INF}, {2, 3, INF}, {3, 3, INF}, {2, INF, INF},
                                                          {3, INF, INF}, {2, 4, INF}, {2, 6, INF}, {4, 4, INF},
                                                          {6, 6, INF}}};
    return std::find(list.begin(), list.end(), c.canonical.m) != list.end();
}

} // namespace tg
