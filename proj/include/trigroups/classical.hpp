#pragma once

#include "trigroups/cyclo.hpp"
#include "trigroups/series.hpp"
#include "trigroups/triangle.hpp"

#include <string>
#include <vector>

namespace tg {

inline const Tag TAG_Q{Var::q, 1};
inline const Tag TAG_Q_HALF{Var::q, 2};
inline const Tag TAG_Q_EIGHTH{Var::q, 8};

// Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

// Normalized E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k even >= 2.
RSeries eisenstein_classical(int k, int N);

// s(p tau): x -> x^p in the same variable.
RSeries at_multiple(const RSeries& s, int p);

// theta_3, theta_4 in q^(1/2) to order N; theta_2 in q^(1/8) to order 4N + 3.
RSeries theta_series(int i, int N);
// theta_i^4 in q^(1/2), order N.
RSeries theta_fourth(int i, int N);

// (eta(tau)/eta(N tau))^(24/(N-1)) = q^-1 + ..., N in {2, 3}.
RSeries eta_quotient(int level, int N);
// 24 q d/dq log(eta(tau)/eta(level tau)).
RSeries eta_log_derivative(int level, int N);

struct AffineFit {
    Rational a, b; // normalized = a * raw + b
    RSeries series;
};

// The eta quotient rescaled to the normalized Hauptmodul of (level, inf, inf),
// fitting a and b on the q^-1 and q^0 coefficients of the Schwarz expansion.
AffineFit eta_hauptmodul(int level, int N);

// (E_2k(tau) + p^k E_2k(p tau)) / (p^k + 1).
RSeries hecke_eisenstein(int p, int k, int N);

// E_4, E_6 of the Hecke group (2, m, inf) for m in {3, 4, 6}.
RSeries hecke_E(int m, int weight, int N);
// f4^3 / (f4^3 - f6^2) for (2, m, inf), m in {3, 4, 6}.
RSeries hecke_hauptmodul(int m, int N);

// (1/2)(E6/sqrt(E6^2 - E4^3) + 1) for (m, m, inf), in q^(1/2), order N.
CSeries mm_type_hauptmodul(int m, int N);
// The branch sqrt(E6^2 - E4^3) = c q^(1/2) (1 + ...); returns c.
CycloScalar mm_sqrt_leading(int m);

struct Table1Row {
    TriangleType type;
    std::string realization;
    std::string g;
    std::string zeta1, gamma1, zeta2, gamma2, zeta3, gamma3;
    CycloScalar alpha3;
    int h3 = 1; // cusp width: J is a series in q^(1/h3)
    // qt3 = q_sub * x with x = q or q^(1/2).
    CycloScalar q_sub;
    // qt3 = lambda * Q with Q an integral local parameter.
    Rational lambda;
    std::string Q;
};

const std::vector<Table1Row>& table1();
const Table1Row& table1_row(const TriangleType& t);

// The classical Hauptmodul of an arithmetic type, in x = q or q^(1/2).
CSeries classical_hauptmodul(const TriangleType& t, int N);
// Schwarz expansion at zeta_3 rewritten in the same x.
CSeries schwarz_in_classical_variable(const TriangleType& t, int N);

struct IntegralityViolation {
    int weight = 0;
    int l = 0;
    int exponent = 0;
    std::string coefficient;
};

struct Prop1Report {
    TriangleType type;
    Rational lambda;
    int max_weight = 0;
    int order = 0;
    int forms_checked = 0;
    std::vector<IntegralityViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Every basis element f_{2k} J^l with 2k <= max_weight, rewritten in Q and
// divided by its leading coefficient, must have integer coefficients up to Q^N.
Prop1Report proposition1_check(const TriangleType& t, int max_weight, int N);

} // namespace tg
