// params.hpp -- the (a,b,x) triple that selects one member of the family.
#pragma once

#include <stdexcept>
#include <string>

namespace tpms {

// One member of the family is picked by a triple (a,b,x) subject to
//   0 < a < b < 1   and   0 < x < 1.
// The strict inequalities are part of the contract: on their boundary the
// algebraic data degenerates (branch points collide), so construction rejects
// any triple that touches them.
struct SurfaceParams {
    double a = 0.0;
    double b = 0.0;
    double x = 0.0;
};

class ParamDomainError : public std::domain_error {
public:
    explicit ParamDomainError(const std::string& what) : std::domain_error(what) {}
};

SurfaceParams make_params(double a, double b, double x);

// True iff the triple satisfies the strict inequalities (no throw).
bool params_valid(double a, double b, double x);

}  // namespace tpms
