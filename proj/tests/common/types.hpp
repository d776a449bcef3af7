#pragma once

#include "trigroups/classical.hpp"
#include "trigroups/triangle.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testtypes {

inline std::vector<tg::TriangleType> arithmetic()
{
    std::vector<tg::TriangleType> r;
    for (const auto& row : tg::table1()) {
        r.push_back(row.type);
    }
    return r;
}

// Distinct cusped hyperbolic types (m1, m2, inf) that are not arithmetic.
inline std::vector<tg::TriangleType> random_cusped(unsigned seed, int count)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(2, 16);
    std::vector<tg::TriangleType> r;
    while (static_cast<int>(r.size()) < count) {
        int a = pick(rng), b = pick(rng);
        if (a == 16) {
            a = tg::INF;
        }
        if (b == 16) {
            b = tg::INF;
        }
        tg::TriangleType t{{a, b, tg::INF}};
        if (tg::Rational(1) - t.v(0) - t.v(1) <= 0 || tg::is_arithmetic(t)) {
            continue;
        }
        if (std::find(r.begin(), r.end(), t) == r.end()) {
            r.push_back(t);
        }
    }
    return r;
}

} // namespace testtypes
