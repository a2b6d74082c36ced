#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "weylcert/grid.hpp"
#include "weylcert/scalar_field.hpp"
#include "weylcert/tensor_calc.hpp"

namespace weylcert {

// Pseudo-Riemannian metric on one global n-chart, components as fields.
// The (a, b) and (b, a) slots always hold the same field.  The declared
// signature is the ascending sign pattern certified by check_signature.
struct MetricChart {
    int n = 0;
    std::vector<std::string> coords;
    std::vector<ScalarField> comp;  // n*n, row-major
    std::vector<int> signature;     // +-1, ascending (negatives first)
    Box box;                        // default sampling region

    const ScalarField& g(int a, int b) const { return comp[a * n + b]; }
    ScalarField& g(int a, int b) { return comp[a * n + b]; }
    int max_order() const;
};

// Field on the first base.dim() axes of an n-chart, constant in the rest.
ScalarField lift_to_chart(const ScalarField& base, int n);

// All component jets at one point (rank-2 JetTensor in n variables).
JetTensor metric_jets(const MetricChart& m, const double* x, int order);

Eigen::MatrixXd metric_values(const MetricChart& m, const std::vector<double>& x);

// Eigenvalue sign pattern against the declared signature, point by point.
// margin is the smallest |eigenvalue| seen; matches requires every point.
struct SignatureCheck {
    bool matches = false;
    double margin = 0.0;
};
SignatureCheck check_signature(const MetricChart& m,
                               const std::vector<std::vector<double>>& grid);

// Constant inner product on the (n-4)-dimensional factor.
struct InnerProductV {
    Eigen::MatrixXd gamma;  // symmetric, nondegenerate (or 0x0)

    InnerProductV() : gamma(0, 0) {}
    explicit InnerProductV(Eigen::MatrixXd m);
    static InnerProductV diag(const std::vector<double>& d);

    int size() const { return static_cast<int>(gamma.rows()); }
    double theta(const double* v) const;  // <v, v>
    std::vector<int> signs() const;       // ascending; throws when degenerate
};

}  // namespace weylcert
