#include "trigroups/arithmetic_scan.hpp"

#include "trigroups/classical.hpp"
#include "trigroups/halphen.hpp"
#include "trigroups/schwarz.hpp"

#include <future>
#include <stdexcept>

namespace tg {

FactorResult factor(Integer n, long trial_limit)
{
    FactorResult r;
    if (n < 0) n = -n;
    if (n == 0) throw std::invalid_argument("factor: zero");
    for (long p = 2; p <= trial_limit; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            n /= p;
            ++r.factors[Integer(p)];
        }
    }
    if (n > 1) {
        if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) ++r.factors[n];
        else r.cofactor = n;
    }
    return r;
}

std::vector<long> primes_up_to(long bound)
{
    std::vector<long> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(bound + 1), true);
    for (long p = 2; p <= bound; ++p) {
        if (!sieve[static_cast<std::size_t>(p)]) continue;
        out.push_back(p);
        for (long k = p * p; k <= bound; k += p) sieve[static_cast<std::size_t>(k)] = false;
    }
    return out;
}

std::string to_string(ScanSeries s)
{
    switch (s) {
    case ScanSeries::J: return "J";
    case ScanSeries::t1: return "t1";
    case ScanSeries::t2: return "t2";
    case ScanSeries::t3: return "t3";
    case ScanSeries::a: return "a";
    case ScanSeries::b: return "b";
    }
    return "?";
}

ScanSeries parse_scan_series(const std::string& name)
{
    for (auto s : {ScanSeries::J, ScanSeries::t1, ScanSeries::t2, ScanSeries::t3, ScanSeries::a, ScanSeries::b}) {
        if (to_string(s) == name) return s;
    }
    throw std::invalid_argument("unknown series '" + name + "' (J, t1, t2, t3, a, b)");
}

RSeries scan_series(const TriangleType& t, ScanSeries which, int N)
{
    switch (which) {
    case ScanSeries::J: return cusp_expansion(t, N).series;
    case ScanSeries::t1: return solve_cusp(t, N).s[0];
    case ScanSeries::t2: return solve_cusp(t, N).s[1];
    case ScanSeries::t3: return solve_cusp(t, N).s[2];
    case ScanSeries::a: return elliptic_expansion(t, 1, N).series;
    case ScanSeries::b: return elliptic_expansion(t, 2, N).series;
    }
    throw std::logic_error("scan_series");
}

DenominatorReport scan_denominators(const RSeries& s, long prime_bound, const std::string& label)
{
    DenominatorReport r;
    r.series = label;
    r.prime_bound = prime_bound;
    for (int n = s.offset(); n <= s.order(); ++n) {
        DenominatorEntry e;
        e.n = n;
        e.denominator = s.coeff(n).get_den();
        e.factorization = factor(e.denominator);
        if (!e.factorization.complete()) r.complete = false;
        for (const auto& [p, k] : e.factorization.factors) {
            if (r.primes_appearing.insert(p).second) r.first_appearance[p] = n;
        }
        r.entries.push_back(std::move(e));
    }
    for (long p : primes_up_to(prime_bound)) {
        if (!r.primes_appearing.count(Integer(p))) r.primes_absent.push_back(p);
    }
    return r;
}

DenominatorReport scan_denominators(const TriangleType& t, ScanSeries which, int N, long prime_bound)
{
    auto r = scan_denominators(scan_series(t, which, N), prime_bound, to_string(which));
    r.type = t;
    return r;
}

std::vector<DenominatorReport> scan_many(const std::vector<ScanJob>& jobs, int N, long prime_bound)
{
    std::vector<std::future<DenominatorReport>> futures;
    futures.reserve(jobs.size());
    for (const auto& j : jobs) {
        futures.push_back(std::async(std::launch::async, [j, N, prime_bound] {
            return scan_denominators(j.type, j.which, N, prime_bound);
        }));
    }
    std::vector<DenominatorReport> out;
    out.reserve(jobs.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

std::vector<int> valuation_sequence(const DenominatorReport& r, const Integer& p)
{
    std::vector<int> out;
    out.reserve(r.entries.size());
    for (const auto& e : r.entries) {
        auto it = e.factorization.factors.find(p);
        out.push_back(it == e.factorization.factors.end() ? 0 : it->second);
    }
    return out;
}

std::set<Integer> primes_beyond(const DenominatorReport& r, const std::set<Integer>& allowed)
{
    std::set<Integer> out;
    for (const auto& p : r.primes_appearing) {
        if (!allowed.count(p)) out.insert(p);
    }
    return out;
}

std::set<Integer> rescale_primes(const TriangleType& t)
{
    const auto& row = table1_row(t);
    std::set<Integer> out;
    for (const auto& part : {row.lambda.get_num(), row.lambda.get_den()}) {
        if (abs(part) == 1) continue;
        for (const auto& [p, k] : factor(part).factors) out.insert(p);
    }
    return out;
}

std::vector<int> p_rescale_failures(const RSeries& t_i, long p)
{
    std::vector<int> out;
    Rational scale = pow(Rational(p), t_i.offset());
    for (int n = t_i.offset(); n <= t_i.order(); ++n) {
        Rational v = t_i.coeff(n) * scale;
        if (mpz_divisible_ui_p(v.get_den().get_mpz_t(), static_cast<unsigned long>(p))) out.push_back(n);
        scale *= p;
    }
    return out;
}

AkiyamaReport akiyama_check(const TriangleType& t, int N)
{
    if (t.is_cusp(0) || t.is_cusp(1) || !t.is_cusp(2)) {
        throw std::invalid_argument("akiyama_check needs (m1, m2, inf) with m1, m2 finite");
    }
    AkiyamaReport r;
    r.type = t;
    auto c = cusp_expansion(t, N).series;
    Integer base = Integer(t.m[0]) * t.m[0] * t.m[1] * t.m[1];
    Integer scale = base;
    for (int n = 0; n <= N; ++n) {
        AkiyamaRow row;
        row.n = n;
        row.Q = Rational(c.coeff(n) * Rational(scale)).get_den();
        row.largest_prime = 1;
        auto f = factor(row.Q);
        if (!f.complete()) row.largest_prime = f.cofactor;
        else if (!f.factors.empty()) row.largest_prime = f.factors.rbegin()->first;
        if (n >= 2 && row.largest_prime > n + 1) r.violations.push_back(n);
        r.rows.push_back(std::move(row));
        scale *= base;
    }
    return r;
}

std::string to_string(LeoFlag f)
{
    switch (f) {
    case LeoFlag::two: return "p=2";
    case LeoFlag::divides_m: return "p|m";
    case LeoFlag::plus_minus_one: return "p=+-1 mod m";
    }
    return "?";
}

static bool is_power_of(Integer x, const Integer& p)
{
    if (x < p) return false;
    while (x % p == 0) x /= p;
    return x == 1;
}

LeoReport leo_decomposition(int m, const RSeries& c)
{
    if (m < 3) throw std::invalid_argument("leo_decomposition needs m >= 3");
    LeoReport r;
    r.m = m;
    Integer step = Integer(64) * m * m;
    Integer scale = step;
    for (int n = 0; n <= c.order(); ++n) {
        Rational x = c.coeff(n) * Rational(scale);
        LeoRow row;
        row.n = n;
        row.C = x.get_num();
        row.D = x.get_den();
        if (row.D != 1) {
            for (const auto& [p, k] : factor(row.D).factors) {
                if (!r.first_appearance.count(p)) r.first_appearance[p] = n;
                if (p == 2) row.flags.emplace_back(p, LeoFlag::two);
                if (m % p == 0) row.flags.emplace_back(p, LeoFlag::divides_m);
                Integer res = p % m;
                if (res == 1 || res == m - 1) row.flags.emplace_back(p, LeoFlag::plus_minus_one);
            }
        }
        if (!row.flags.empty()) r.flagged_indices.push_back(n);
        r.rows.push_back(std::move(row));
        scale *= step;
    }
    for (const auto& [p, n] : r.first_appearance) r.first_at_prime_power_minus_one[p] = is_power_of(Integer(n + 1), p);
    return r;
}

LeoReport leo_decomposition(int m, int N)
{
    return leo_decomposition(m, cusp_expansion(TriangleType{{2, m, INF}}, N).series);
}

static void summarize(RescaledSequence& s)
{
    for (const auto& v : s.values) {
        if (v <= 0) s.all_positive = false;
        Integer d = v.get_den();
        s.denominators.insert(d);
        if (d > s.max_denominator) s.max_denominator = d;
        if (d == 1) continue;
        for (const auto& [p, k] : factor(d).factors) {
            auto& e = s.max_exponent[p];
            e = std::max(e, k);
        }
    }
}

EllipticRescaleReport elliptic_rescale(const TriangleType& t, int point, int N)
{
    if (point != 1 && point != 2) throw std::invalid_argument("elliptic_rescale: point is 1 or 2");
    int i = point - 1;
    if (t.is_cusp(i)) throw std::invalid_argument("elliptic_rescale: m" + std::to_string(point) + " must be finite");
    EllipticRescaleReport r;
    r.type = t;
    r.point = point;
    r.m_here = t.m[static_cast<std::size_t>(i)];
    int other = t.m[static_cast<std::size_t>(1 - i)];
    r.m_other = other == INF ? 1 : other;
    auto x = elliptic_expansion(t, point, N).series;
    std::string name = point == 1 ? "a" : "b";
    std::string here = std::to_string(r.m_here), oth = std::to_string(r.m_other);
    r.single.label = name + "_n (" + here + "n)! " + oth + "^n";
    r.doubled.label = name + "_n (" + here + "n)! " + oth + "^(2n)";
    Integer p1 = 1, p2 = 1;
    for (int n = 1; n <= N; ++n) {
        p1 *= r.m_other;
        p2 *= r.m_other * r.m_other;
        Rational f(factorial(static_cast<unsigned long>(r.m_here * n)));
        r.single.values.push_back(x.coeff(n) * f * Rational(p1));
        r.doubled.values.push_back(x.coeff(n) * f * Rational(p2));
    }
    summarize(r.single);
    summarize(r.doubled);
    return r;
}

VanishingReport structural_vanishing(int N)
{
    VanishingReport r;
    auto c = universal_coeffs_cusped(N);
    for (int n = 0; n <= N; ++n) {
        const auto& cn = c[static_cast<std::size_t>(n)];
        if (n >= 2 && cn.eval(rat(1, 2), 0) != 0) r.failures_22.push_back(n);
        if (cn.eval(1, 1) != 0) r.failures_1inf.push_back(n);
    }
    return r;
}

} // namespace tg
