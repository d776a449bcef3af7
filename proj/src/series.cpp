#include "trigroups/series.hpp"

namespace tg {

std::string tag_name(const Tag& t)
{
    std::string base;
    switch (t.var) {
    case Var::qt1: base = "qt1"; break;
    case Var::qt2: base = "qt2"; break;
    case Var::qt3: base = "qt3"; break;
    case Var::qhat: base = "qhat"; break;
    case Var::q: base = "q"; break;
    case Var::Q: base = "Q"; break;
    case Var::z: base = "z"; break;
    }
    if (t.root != 1) {
        base += "^(1/" + std::to_string(t.root) + ")";
    }
    return base;
}

} // namespace tg
