#include "doctest.h"

#include "../common/types.hpp"
#include "trigroups/halphen_identities.hpp"

using namespace tg;

TEST_CASE("identity suite on arithmetic and random types")
{
    auto types = testtypes::arithmetic();
    for (const auto& t : testtypes::random_cusped(101, 10)) {
        types.push_back(t);
    }
    types.push_back(TriangleType{{5, 2, INF}});
    for (const auto& t : types) {
        auto r = identity_suite(t, 30);
        CHECK(r.checks.size() >= 7);
        for (const auto& c : r.checks) {
            CHECK_MESSAGE(c.ok, t.to_string() << ": " << c.name << " " << c.detail);
        }
    }
}

TEST_CASE("mismatch reporting")
{
    const Tag q{Var::qhat, 1};
    RSeries a(q, 0, {1, 2, 3}, 2), b(q, 0, {1, 2, 4}, 2);
    auto c = compare_series("x", a, b, 2);
    CHECK(!c.ok);
    CHECK(c.detail == "x^2: 3 vs 4");
    CHECK(compare_series("y", a, a, 2).ok);
    CHECK(!compare_series("z", a, a, 5).ok);
}

TEST_CASE("Darboux theta identity")
{
    auto d = darboux_theta_check(30);
    CHECK(d.c == 8);
    CHECK(d.e == 1);
    REQUIRE(d.checks.size() == 3);
    for (const auto& c : d.checks) {
        CHECK_MESSAGE(c.ok, c.name << " " << c.detail);
    }
}
