#pragma once

#include <functional>
#include <vector>

#include "weylcert/jet.hpp"

namespace weylcert {

struct QuadOptions {
    double abs_tol = 1e-10;
    int max_depth = 30;
};

// Adaptive Gauss quadrature (7-point Gauss with 15-point Kronrod error
// estimate) for a vector-valued integrand on [a, b].  The integrand writes
// its m components into out.  Deterministic for a fixed integrand.
std::vector<double> integrate(const std::function<void(double t, double* out)>& f, int m,
                              double a, double b, const QuadOptions& opt = {});

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

// Integrates a jet-valued integrand coefficientwise.  All jets returned by f
// must share one shape.
Jet integrate_jet(const std::function<Jet(double)>& f, double a, double b,
                  const QuadOptions& opt = {});

}  // namespace weylcert
