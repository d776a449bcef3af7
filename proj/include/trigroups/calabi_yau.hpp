#pragma once

#include "trigroups/series.hpp"
#include "trigroups/triangle.hpp"

#include <array>
#include <string>
#include <vector>

namespace tg {

inline const Tag TAG_Z{Var::z, 1};

struct CYModel {
    std::string name;
    Rational a1, a2; // a3 = 1 - a2, a4 = 1 - a1
    long n1 = 0, n2 = 0;
    TriangleType type;
    long n0 = 0;
    // false only for the quintic's 5; the others are read off as -n2
    bool n0_inferred = true;

    std::array<Rational, 4> a() const { return {a1, a2, 1 - a2, 1 - a1}; }
};

// The 14 hypergeometric models, quintic first.
const std::vector<CYModel>& cy_models();
// By name ("quintic", or "a1,a2" such as "1/6,1/3") or by 1-based index.
const CYModel& find_cy_model(const std::string& key);

// psi_1 = psi_0 ln z + sigma, sigma(0) = 0.
struct FrobeniusPair {
    RSeries psi0, sigma;
};

FrobeniusPair frobenius(const CYModel& m, int N);

// delta^4 f - z prod(delta + a_i) f, coefficients 0..order of f.
RSeries pf_apply(const CYModel& m, const RSeries& f);
// The part of L(psi_0 ln z + sigma) without ln z (the ln z part is L psi_0).
RSeries pf_log_part(const CYModel& m, const FrobeniusPair& p);

// exp(sum (psi(1) - psi(a_i))), checked to be an integer.
Integer cy_mu(const CYModel& m);

struct MirrorMap {
    Integer mu;
    RSeries q_of_z; // z exp(sigma/psi_0), leading term z
    // In Z = z/mu and Q = q/mu; Z_of_Q is the reversion of Q_of_Z.
    RSeries Q_of_Z, Z_of_Q;
};

MirrorMap mirror_map(const CYModel& m, int N);

struct YukawaResult {
    RSeries wronskian; // psi_0 theta psi_1 - psi_1 theta psi_0, log-free
    RSeries log_coefficient; // its ln z part, identically zero
    RSeries Y_z; // n0 psi_0^4 / (W^3 (1 - z))
    RSeries Y_Q;
    std::vector<Rational> n; // n_0 .. n_N from Y = n0 + sum n_d d^3 Q^d / (1 - Q^d)
    std::vector<int> non_integral; // d with n_d not an integer
};

YukawaResult yukawa(const CYModel& m, int N);

// Lambert inversion: y_k = sum_{d | k} n_d d^3.
std::vector<Rational> lambert_invert(const RSeries& Y);

using IMat4 = std::array<std::array<Integer, 4>, 4>;

IMat4 identity4();
IMat4 operator*(const IMat4& x, const IMat4& y);
Integer det(const IMat4& x);
// Exact inverse; throws unless det = +-1.
IMat4 inverse(const IMat4& x);
// Coefficients c0..c4 of det(x I - M), c4 = 1.
std::array<Integer, 5> char_poly(const IMat4& x);
int rank(const IMat4& x);

struct CYMonodromy {
    IMat4 M0, M1, Minf;
    // M0^-1 Minf: the loop around z = 1 with Minf read as the opposite orientation;
    // unipotent with rank(conifold - I) = 1.
    IMat4 conifold;
    long minf_order = 0; // 0 when no power up to the bound is I
};

CYMonodromy cy_monodromy(const CYModel& m, long order_bound = 10000);
long matrix_order(const IMat4& x, long bound);

} // namespace tg
