#pragma once

#include "trigroups/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <string>

namespace tg {

// Working precision is fixed at 128 binary digits.
inline constexpr unsigned precision_bits = 128;

using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<precision_bits, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;
using Complex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<
        boost::multiprecision::cpp_bin_float<precision_bits, boost::multiprecision::digit_base_2>>,
    boost::multiprecision::et_off>;

Real to_real(const Rational& r);
Real real_pi();
Real euler_gamma();

// Fixed-digit scientific rendering, deterministic for a given value.
std::string format_real(const Real& x, int digits = 30);
std::string format_complex(const Complex& z, int digits = 30);

} // namespace tg
