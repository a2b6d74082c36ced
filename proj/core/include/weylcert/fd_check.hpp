#pragma once

#include "weylcert/scalar_field.hpp"

namespace weylcert {

// Compares jet partials of order <= check_order (at most 2) against central
// finite differences with the given step.  Returns the worst relative
// deviation, scaled by max(1, |jet value|) per entry.  Diagnostic only.
double fd_crosscheck(const ScalarField& field, const std::vector<double>& point,
                     int check_order, double step);

}  // namespace weylcert
