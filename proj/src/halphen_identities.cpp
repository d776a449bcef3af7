#include "trigroups/halphen_identities.hpp"

#include "trigroups/classical.hpp"
#include "trigroups/forms.hpp"
#include "trigroups/schwarz.hpp"

#include <algorithm>

namespace tg {

namespace {

const Tag QHAT{Var::qhat, 1};

bool all_ok(const std::vector<IdentityCheck>& v)
{
    return std::all_of(v.begin(), v.end(), [](const IdentityCheck& c) { return c.ok; });
}

} // namespace

bool IdentityReport::ok() const
{
    return all_ok(checks);
}

bool DarbouxReport::ok() const
{
    return all_ok(checks);
}

IdentityCheck compare_series(const std::string& name, const RSeries& lhs, const RSeries& rhs, int order)
{
    IdentityCheck c;
    c.name = name;
    c.order = std::min({order, lhs.order(), rhs.order()});
    if (!(lhs.tag() == rhs.tag())) {
        c.detail = "variables differ: " + tag_name(lhs.tag()) + " vs " + tag_name(rhs.tag());
        return c;
    }
    for (int e = std::min(lhs.offset(), rhs.offset()); e <= c.order; ++e) {
        if (lhs.coeff(e) != rhs.coeff(e)) {
            c.detail = "x^" + std::to_string(e) + ": " + lhs.coeff(e).get_str() + " vs " + rhs.coeff(e).get_str();
            return c;
        }
    }
    c.ok = c.order >= order;
    if (!c.ok) {
        c.detail = "only known through order " + std::to_string(c.order);
    }
    return c;
}

IdentityReport identity_suite(const TriangleType& t, int N)
{
    IdentityReport r;
    r.type = t;
    const int M = N + 3;
    const HalphenSolution h = solve_cusp(t, M);
    const Rational R = h.alpha3_over_nu;
    const auto& s = h.s;
    const RSeries J = cusp_expansion(t, M).series.rescaled(R, QHAT);
    const RSeries one = RSeries::one(QHAT, M);

    r.checks.push_back(compare_series("s1 - s2 = -theta J / J", s[0] - s[1], -(J.theta() / J), N));
    r.checks.push_back(compare_series("s3 - s2 = -theta J / (J - 1)", s[2] - s[1], -(J.theta() / (J - one)), N));

    const HalphenParams& p = h.params;
    const DeltaPackage dp = delta_and_e2(t, M);
    const RSeries comb = (s[0] * ((p.b - p.a) / p.b) - s[1] + s[2] * ((p.a + p.b - 1) / p.b)) * dp.n_delta;
    r.checks.push_back(compare_series("E2 combination = E_{2;t}", comb, dp.e2.rescaled(R, QHAT), N));

    const HalphenHauptmodul hm = hauptmodul_from_halphen(h);
    r.checks.push_back(compare_series("(s3 - s2)/(s3 - s1) = J", hm.J, J, N));
    const RSeries E4 = halphen_E4(h), E6 = halphen_E6(h);
    const RSeries E43 = E4 * E4 * E4;
    r.checks.push_back(compare_series("J = E4^3/(E4^3 - E6^2)", E43 / (E43 - E6 * E6), J, N));
    r.checks.push_back(compare_series("E4 variants agree", eisenstein_like(h, 2, 1), eisenstein_like(h, 2, 2), N));

    IdentityCheck jn;
    jn.name = "j_t = 1/qhat + O(qhat)";
    jn.order = 0;
    jn.ok = hm.j_norm.valuation() == -1 && hm.j_norm.coeff(-1) == 1 && hm.j_norm.coeff(0) == 0;
    if (!jn.ok) {
        jn.detail = "leading terms " + hm.j_norm.truncated(0).to_string();
    }
    r.checks.push_back(jn);

    // the f6 rule is stated for m1 <= m2
    if (!t.is_cusp(1) && !t.is_cusp(0) && t.m[0] <= t.m[1]) {
        const RSeries f4 = f_form(t, 2, M).rescaled(R, QHAT);
        const RSeries f6 = f_form(t, 3, M).rescaled(R, QHAT);
        r.checks.push_back(compare_series("f4 = E4", f4, E4, N));
        if (t.m[0] == 2) {
            r.checks.push_back(compare_series("f6 = E6", f6, E6, N));
        } else {
            r.checks.push_back(compare_series("f6 = E6/(J - 1)", f6, E6 / (J - one), N));
        }
    }
    return r;
}

DarbouxReport darboux_theta_check(int N)
{
    const TriangleType t{{INF, INF, INF}};
    const int M = N + 2;
    const HalphenSolution h = solve_cusp(t, M);

    // x d/dx log theta_j in x = q^(1/2); theta_2 lives in q^(1/8) = x^(1/4)
    const RSeries L3 = log_derivative(theta_series(3, M));
    const RSeries L4 = log_derivative(theta_series(4, M));
    const RSeries L2 = log_derivative(theta_series(2, M)).deflated(4, TAG_Q_HALF) * Rational(rat(1, 4));

    DarbouxReport d;
    const RSeries u1 = h.s[0] * Rational(rat(-1, 4));
    const int k = u1.valuation();
    const int k2 = L3.valuation();
    if (k != 1 || k2 < 1) {
        d.checks.push_back({"leading-term alignment", false, 0, "unexpected valuations"});
        return d;
    }
    d.e = k2 / k;
    d.c = L3.coeff(k2) / u1.coeff(k);

    const std::array<const RSeries*, 3> L{&L3, &L2, &L4};
    const char* names[3] = {"-1/4 s1 = x d/dx log theta3", "-1/4 s2 = x d/dx log theta2",
                            "-1/4 s3 = x d/dx log theta4"};
    for (int i = 0; i < 3; ++i) {
        RSeries u = (h.s[static_cast<std::size_t>(i)] * Rational(rat(-1, 4))).rescaled(d.c, TAG_Q_HALF);
        if (d.e != 1) {
            u = u.inflated(d.e, TAG_Q_HALF);
        }
        d.checks.push_back(compare_series(names[i], u, *L[static_cast<std::size_t>(i)], N));
    }
    return d;
}

} // namespace tg
