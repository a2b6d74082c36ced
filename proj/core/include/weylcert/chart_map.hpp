#pragma once

#include <Eigen/Dense>

#include "weylcert/metric_chart.hpp"

namespace weylcert {

// Differentiable map between equal-dimensional charts, components as fields
// over the source chart.  domain is the sampling box in source coordinates.
struct ChartMap {
    int n = 0;
    std::vector<ScalarField> comp;
    Box domain;

    std::vector<double> apply(const std::vector<double>& x) const;
};

ChartMap identity_map(int n, const Box& domain);
ChartMap linear_map(const Eigen::MatrixXd& m, const Box& domain);

// (J*g)_ab = (g_cd o J) dJ^c/dx^a dJ^d/dx^b.  Throws on a singular Jacobian
// at any evaluation point.
MetricChart pullback_metric(const ChartMap& J, const MetricChart& g);

// max |A_ab - B_ab| over the grid; charts must share the dimension.
double metric_deviation(const MetricChart& a, const MetricChart& b,
                        const std::vector<std::vector<double>>& grid);

}  // namespace weylcert
