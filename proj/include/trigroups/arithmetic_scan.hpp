#pragma once

#include "trigroups/series.hpp"
#include "trigroups/triangle.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tg {

using Factorization = std::map<Integer, int>;

struct FactorResult {
    Factorization factors;
    // 1 when the factorization is complete; otherwise a composite left over
    // after trial division that the primality test could not split.
    Integer cofactor = 1;
    bool complete() const { return cofactor == 1; }
};

// Trial division up to min(sqrt(n), trial_limit), then a probabilistic
// primality test on what remains.
FactorResult factor(Integer n, long trial_limit = 1'000'000);

std::vector<long> primes_up_to(long bound);

// Which expansion a scan runs over.
enum class ScanSeries { J, t1, t2, t3, a, b };

std::string to_string(ScanSeries s);
ScanSeries parse_scan_series(const std::string& name);

// J in qt3 (cusp), t_i in qhat, a_n at zeta_1 and b_n at zeta_2 (normalized parameters).
RSeries scan_series(const TriangleType& t, ScanSeries which, int N);

struct DenominatorEntry {
    int n = 0;
    Integer denominator;
    FactorResult factorization;
};

struct DenominatorReport {
    std::optional<TriangleType> type;
    std::string series;
    long prime_bound = 0;
    std::vector<DenominatorEntry> entries;
    std::set<Integer> primes_appearing;
    std::vector<long> primes_absent; // primes <= prime_bound never seen
    std::map<Integer, int> first_appearance;
    bool complete = true;
};

DenominatorReport scan_denominators(const RSeries& s, long prime_bound, const std::string& label = "");
DenominatorReport scan_denominators(const TriangleType& t, ScanSeries which, int N, long prime_bound);

// Independent (type, series) scans run concurrently; results in input order.
struct ScanJob {
    TriangleType type;
    ScanSeries which = ScanSeries::J;
};
std::vector<DenominatorReport> scan_many(const std::vector<ScanJob>& jobs, int N, long prime_bound);

// m_{n,p}: the exponent of p in the n-th denominator, one per entry.
std::vector<int> valuation_sequence(const DenominatorReport& r, const Integer& p);

// Primes that appear but are not in the given set.
std::set<Integer> primes_beyond(const DenominatorReport& r, const std::set<Integer>& allowed);

// Prime divisors of the integral rescale lambda with qt3 = lambda Q (arithmetic types).
std::set<Integer> rescale_primes(const TriangleType& t);

// t_i(p qhat) has coefficients s_{i,n} p^n; lists the n where p still divides a denominator.
std::vector<int> p_rescale_failures(const RSeries& t_i, long p);

struct AkiyamaRow {
    int n = 0;
    Integer Q;
    Integer largest_prime; // 1 for Q = 1
};

struct AkiyamaReport {
    TriangleType type;
    std::vector<AkiyamaRow> rows;
    std::vector<int> violations; // n >= 2 with a prime > n + 1 in Q_n
    bool ok() const { return violations.empty(); }
};

// Q_n = den(c_n (m1^2 m2^2)^(n+1)) for a type (m1, m2, inf) with m1, m2 finite.
AkiyamaReport akiyama_check(const TriangleType& t, int N);

enum class LeoFlag { two, divides_m, plus_minus_one };

std::string to_string(LeoFlag f);

struct LeoRow {
    int n = 0;
    Integer C, D;
    std::vector<std::pair<Integer, LeoFlag>> flags;
};

struct LeoReport {
    int m = 0;
    std::vector<LeoRow> rows;
    std::map<Integer, int> first_appearance; // primes of D_n
    // first appearance at n = p^k - 1 for some k >= 1
    std::map<Integer, bool> first_at_prime_power_minus_one;
    std::vector<int> flagged_indices;
};

// c_n = C_n / (D_n 2^(6n+6) m^(2n+2)) with gcd(C_n, D_n) = 1, for n = 0..order.
LeoReport leo_decomposition(int m, const RSeries& c);
LeoReport leo_decomposition(int m, int N);

struct RescaledSequence {
    std::string label;
    std::vector<Rational> values; // n = 1..N
    bool all_positive = true;
    std::set<Integer> denominators;
    Integer max_denominator = 1;
    std::map<Integer, int> max_exponent; // per prime, over all n
};

struct EllipticRescaleReport {
    TriangleType type;
    int point = 1; // 1 or 2
    int m_here = 0, m_other = 0;
    // x_n (m_here n)! m_other^n and x_n (m_here n)! m_other^(2n)
    RescaledSequence single, doubled;
};

// m_other = 1 when the other vertex is a cusp.
EllipticRescaleReport elliptic_rescale(const TriangleType& t, int point, int N);

struct VanishingReport {
    std::vector<int> failures_22; // n >= 2 with c_n(2, 2) != 0
    std::vector<int> failures_1inf; // n >= 0 with c_n(1, inf) != 0
    bool ok() const { return failures_22.empty() && failures_1inf.empty(); }
};

// The universal cusp coefficients at (gamma+, gamma-) = (1/2, 0) and (1, 1).
VanishingReport structural_vanishing(int N);

} // namespace tg
