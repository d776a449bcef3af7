#include "doctest.h"

#include "trigroups/triangle.hpp"

using namespace tg;

TEST_CASE("classification of hyperbolic types")
{
    CHECK(classify(2, 3, 7).hyperbolic);
    CHECK_FALSE(classify(3, 3, 3).hyperbolic);
    CHECK(classify(2, 3, INF).hyperbolic);
    CHECK_FALSE(classify(2, 3, 6).hyperbolic);
    CHECK_FALSE(classify(2, 2, INF).hyperbolic);
    CHECK_FALSE(classify(4, 2, 4).hyperbolic);
    CHECK(classify(2, 4, 5).hyperbolic);
    CHECK_THROWS_AS(classify(1, 3, INF), invalid_type);
    auto c = classify(INF, 3, 2);
    CHECK(c.canonical.m == std::array<int, 3>{2, 3, INF});
    CHECK(c.perm == std::array<int, 3>{2, 1, 0});
}

TEST_CASE("type parsing")
{
    CHECK(parse_type("2,3,inf").m == std::array<int, 3>{2, 3, INF});
    CHECK_THROWS_AS(parse_type("3,3,3"), invalid_type);
    CHECK_THROWS_AS(parse_type("2,x,inf"), invalid_type);
    CHECK_THROWS_AS(parse_type("2,3"), invalid_type);
}

TEST_CASE("parameters of the modular group")
{
    auto g = group_data(TriangleType{{2, 3, INF}});
    REQUIRE(g.h3.has_value());
    CHECK(*g.h3 == Surd(Rational(1)));
    CHECK(g.ha == rat(1, 12));
    CHECK(g.hb == rat(1, 12));
    CHECK(g.hc == rat(1, 2));
    auto h = group_data(TriangleType{{INF, INF, INF}});
    CHECK(*h.h3 == Surd(Rational(4)));
    CHECK(h.a == rat(1, 2));
    CHECK(h.b == rat(1, 2));
    CHECK(h.c == rat(1, 2));
    CHECK(h.h2.has_value());
}

TEST_CASE("Halphen parameter combinations give the angles")
{
    for (auto m : std::vector<std::array<int, 3>>{{2, 3, INF}, {2, 5, INF}, {3, INF, INF}, {2, 3, 7}, {4, 5, 6}}) {
        auto g = group_data(TriangleType{m});
        CHECK(1 - g.a - g.b == g.v[0]);
        CHECK(1 - g.c - g.b == g.v[1]);
        CHECK(1 - g.a - g.c == g.v[2]);
        if (g.v[2] == 0) {
            CHECK(g.a + g.c == 1);
        }
    }
}

TEST_CASE("generator relations hold exactly")
{
    const Mat2<Surd> minus_i{Surd(-1), Surd(0), Surd(0), Surd(-1)};
    for (int m1 : {2, 3, 4, 5, 6, INF}) {
        for (int m2 : {3, 4, 5, 6, INF}) {
            if (!classify(m1, m2, INF).hyperbolic) {
                continue;
            }
            auto g = group_data(TriangleType{{m1, m2, INF}});
            REQUIRE(g.exact_generators);
            CHECK(g.gens[0] * g.gens[1] * g.gens[2] == minus_i);
            if (m1 != INF) {
                CHECK(mat_pow(g.gens[0], m1) == minus_i);
            }
            if (m2 != INF) {
                CHECK(mat_pow(g.gens[1], m2) == minus_i);
            }
            CHECK(g.h3_real > 0);
        }
    }
}

TEST_CASE("float generators for other orders")
{
    auto g = group_data(TriangleType{{2, 7, INF}});
    CHECK_FALSE(g.exact_generators);
    auto p = mat_pow(g.gens_real[1], 7);
    CHECK(abs(p.a + 1) < Real("1e-12"));
    CHECK(abs(p.b) < Real("1e-12"));
    CHECK(abs(p.d + 1) < Real("1e-12"));
    auto r = g.gens_real[0] * g.gens_real[1] * g.gens_real[2];
    CHECK(abs(r.a + 1) < Real("1e-12"));
    CHECK(abs(r.c) < Real("1e-12"));
}

TEST_CASE("arithmetic types")
{
    CHECK(is_arithmetic(TriangleType{{2, 4, INF}}));
    CHECK_FALSE(is_arithmetic(TriangleType{{2, 5, INF}}));
    CHECK(is_arithmetic(TriangleType{{INF, 3, INF}}));
    CHECK_THROWS_AS(is_arithmetic(TriangleType{{2, 3, 7}}), invalid_type);
    auto key = [](int m) { return m == INF ? 1000 : m; };
    int count = 0;
    for (int m1 : {2, 3, 4, 5, 6, 7, 8, INF}) {
        for (int m2 : {2, 3, 4, 5, 6, 7, 8, INF}) {
            if (key(m1) > key(m2) || !classify(m1, m2, INF).hyperbolic) {
                continue;
            }
            count += is_arithmetic(TriangleType{{m1, m2, INF}}) ? 1 : 0;
        }
    }
    CHECK(count == 9);
}
