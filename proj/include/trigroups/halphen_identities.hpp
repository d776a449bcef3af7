#pragma once

#include "trigroups/halphen.hpp"

#include <string>
#include <vector>

namespace tg {

struct IdentityCheck {
    std::string name;
    bool ok = false;
    int order = 0;      // compared through qhat^order
    std::string detail; // first mismatch, empty when ok
};

struct IdentityReport {
    TriangleType type;
    std::vector<IdentityCheck> checks;
    bool ok() const;
};

// Compare two series through a given order and describe the first mismatch.
IdentityCheck compare_series(const std::string& name, const RSeries& lhs, const RSeries& rhs, int order);

// Cross-engine and structural identities for a cusped type, all as exact
// rational qhat-series (J from the Schwarz engine under qt3 = (alpha3/nu) qhat):
//   s1 - s2 = -theta J / J,  s3 - s2 = -theta J / (J - 1),
//   n_delta ((b-a)/b s1 - s2 + (a+b-1)/b s3) = E_{2;t},
//   (s3 - s2)/(s3 - s1) = J = E4^3/(E4^3 - E6^2),  j_t = 1/qhat + O(qhat),
//   f4 = E4 and f6 = E6 or E6/(J - 1) when m1 <= m2 < inf.
IdentityReport identity_suite(const TriangleType& t, int N);

struct DarbouxReport {
    Rational c; // qhat = c x^e with x = q^(1/2)
    int e = 1;
    std::vector<IdentityCheck> checks;
    bool ok() const;
};

// -1/4 s_i(c x^e) = x d/dx log theta_{j_i}(x), (j1, j2, j3) = (3, 2, 4), for
// (inf, inf, inf). The substitution is found from the leading terms of s_1.
DarbouxReport darboux_theta_check(int N);

} // namespace tg
