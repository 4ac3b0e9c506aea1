#include "tpms/params.hpp"

#include <cmath>
#include <sstream>

namespace tpms {

namespace {

std::string triple_str(double a, double b, double x) {
    std::ostringstream os;
    os << "(a=" << a << ", b=" << b << ", x=" << x << ")";
    return os.str();
}

}  // namespace

bool params_valid(double a, double b, double x) {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(x) &&
           0.0 < a && a < b && b < 1.0 && 0.0 < x && x < 1.0;
}

SurfaceParams make_params(double a, double b, double x) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x))
        throw ParamDomainError("non-finite parameter in " + triple_str(a, b, x));
    if (!(0.0 < a))
        throw ParamDomainError("0 < a violated in " + triple_str(a, b, x));
    if (!(a < b))
        throw ParamDomainError("a < b violated in " + triple_str(a, b, x));
    if (!(b < 1.0))
        throw ParamDomainError("b < 1 violated in " + triple_str(a, b, x));
    if (!(0.0 < x))
        throw ParamDomainError("0 < x violated in " + triple_str(a, b, x));
    if (!(x < 1.0))
        throw ParamDomainError("x < 1 violated in " + triple_str(a, b, x));
    return SurfaceParams{a, b, x};
}

}  // namespace tpms
