#include "trigroups/cyclo.hpp"

#include <sstream>
#include <stdexcept>

namespace tg {

CycloScalar& CycloScalar::operator+=(const CycloScalar& o)
{
    for (int k = 0; k < 4; ++k) {
        r_[k] += o.r_[k];
    }
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o)
{
    for (int k = 0; k < 4; ++k) {
        r_[k] -= o.r_[k];
    }
    return *this;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b)
{
    const auto& x = a.r_;
    const auto& y = b.r_;
    return {x[0] * y[0] - x[1] * y[1] + 3 * x[2] * y[2] - 3 * x[3] * y[3],
            x[0] * y[1] + x[1] * y[0] + 3 * (x[2] * y[3] + x[3] * y[2]),
            x[0] * y[2] + x[2] * y[0] - (x[1] * y[3] + x[3] * y[1]),
            x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1]};
}

Rational CycloScalar::norm() const
{
    CycloScalar w = *this * galois_sqrt3(); // lies in Q(i)
    return w.r_[0] * w.r_[0] + w.r_[1] * w.r_[1];
}

CycloScalar CycloScalar::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero in Q(i, sqrt3)");
    }
    CycloScalar g = galois_sqrt3();
    CycloScalar w = *this * g;
    Rational n = w.r_[0] * w.r_[0] + w.r_[1] * w.r_[1];
    CycloScalar r = g * w.conj();
    for (auto& c : r.r_) {
        c /= n;
    }
    return r;
}

bool CycloScalar::has_integer_components() const
{
    for (const auto& c : r_) {
        if (!is_integer(c)) {
            return false;
        }
    }
    return true;
}

std::array<std::string, 4> CycloScalar::component_strings() const
{
    return {r_[0].get_str(), r_[1].get_str(), r_[2].get_str(), r_[3].get_str()};
}

std::string CycloScalar::to_string() const
{
    static const char* names[4] = {"", "i", "sqrt3", "i*sqrt3"};
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (r_[k] == 0) {
            continue;
        }
        Rational a = abs(r_[k]);
        if (!first) {
            os << (r_[k] < 0 ? " - " : " + ");
        } else if (r_[k] < 0) {
            os << "-";
        }
        first = false;
        if (k == 0) {
            os << a.get_str();
        } else if (a == 1) {
            os << names[k];
        } else {
            os << a.get_str() << "*" << names[k];
        }
    }
    return first ? "0" : os.str();
}

} // namespace tg
