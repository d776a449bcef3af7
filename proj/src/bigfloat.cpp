#include "trigroups/bigfloat.hpp"

#include <boost/math/constants/constants.hpp>

#include <sstream>

namespace tg {

Real to_real(const Rational& r)
{
    return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
}

Real real_pi()
{
    return boost::math::constants::pi<Real>();
}

Real euler_gamma()
{
    return boost::math::constants::euler<Real>();
}

std::string format_real(const Real& x, int digits)
{
    std::ostringstream os;
    os.precision(digits);
    os << std::scientific << x;
    return os.str();
}

std::string format_complex(const Complex& z, int digits)
{
    std::string re = format_real(z.real(), digits);
    std::string im = format_real(z.imag(), digits);
    if (im.front() == '-') {
        return re + " - " + im.substr(1) + "i";
    }
    return re + " + " + im + "i";
}

} // namespace tg
