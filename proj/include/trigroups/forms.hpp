#pragma once

#include "trigroups/series.hpp"
#include "trigroups/triangle.hpp"

#include <array>
#include <string>
#include <vector>

namespace tg {

// ceil(k / m), with ceil(k / inf) = 0.
int ceil_div_m(int k, int m);

// d_{2k} = k - ceil(k/m1) - ceil(k/m2), the order of f_{2k} at i infinity.
int d_order(const TriangleType& t, int k);

// dim of holomorphic forms of the given (even) weight. Requires m3 = inf.
int dimension(const TriangleType& t, int weight);

struct FormBasis {
    TriangleType type;
    int weight = 0; // 2k
    int d = 0;
    // elements[l] = f_{2k} J^l, series in qt3
    std::vector<RSeries> elements;
};

// f_{2k} = (-1)^k Jdot^k J^(ceil(k/m2)-k) (J-1)^(ceil(k/m1)-k) in qt3, order N.
RSeries f_form(const TriangleType& t, int k, int N);
FormBasis basis(const TriangleType& t, int k, int N);

struct DeltaPackage {
    TriangleType type;
    int L = 1;
    Rational n_delta;
    RSeries delta;
    RSeries e2;
};

DeltaPackage delta_and_e2(const TriangleType& t, int N);

class not_a_form : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// theta f - (weight / 2L) E2 f, where theta = qt3 d/dqt3.
RSeries serre_derivative(const RSeries& f, int weight, const DeltaPackage& pkg);

// Coordinates of f in basis(t, weight/2); throws not_a_form if f is not in the span.
std::vector<Rational> coordinates(const RSeries& f, const FormBasis& b);

struct Generator {
    int weight = 0;
    std::string name; // "f4", "J^2 f8", "E^(1)_6", ...
    int k = 0;        // the f_{2k} (or E_{2k}) index
    int J_power = 0;
    int variant = 0;  // Halphen side only: which E^(i)
};

struct GeneratorSets {
    std::vector<Generator> forms;
    std::vector<Generator> halphen; // empty when the Halphen-side list is not given
    // Only for the third case: whether the second range 3 <= l <= m1 was empty.
    bool empty_second_range = false;
};

// Generators for m1 <= m2 (the type is reordered first if needed).
GeneratorSets generator_weights(const TriangleType& t);

RSeries generator_series(const TriangleType& t, const Generator& g, int N);

// E^(variant)_{2k} = J^a (J-1)^b f_{2k}; returns {a, b}. Halphen variant 1 is
// (s1-s2)(s3-s2)^(k-1), variant 2 is (s1-s2)^(k-1)(s3-s2).
std::pair<int, int> halphen_relation(const TriangleType& t, int k, int variant);

// Orders of f_{2k} at zeta_1, zeta_2 (weighted by 1/m_i, so J - 1 ~ q1 counts 1)
// and at zeta_3. Their sum must equal k(1 - 1/m1 - 1/m2).
std::array<Rational, 3> forced_orders(const TriangleType& t, int k);

// Dimension count for cocompact types: max(0, k+1-sum ceil(k/m_i)), 1 at k = 0.
int nocusp_dimension(const TriangleType& t, int k);

} // namespace tg
