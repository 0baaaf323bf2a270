#pragma once

#include "alexdef/laurent.hpp"

#include <string>

namespace alexdef {

/// Parses a polynomial expression in the Laurent variable `t` with integer or
/// rational coefficients; `z` denotes the tower's root of unity zeta_m.
/// Supported syntax: + - * ^ ( ), rational literals a or a/b, e.g.
/// "t^2-6*t+1", "z*t - 1/2", "(t-1)^2". Negative exponents are allowed on
/// unit bases (t^-1). Throws precondition_error on malformed input.
LaurentPoly parse_poly_expr(const std::string& text, const FieldTower::Ptr& tower);

} // namespace alexdef
