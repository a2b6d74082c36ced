#include "weylcert/chart_map.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace weylcert {

std::vector<double> ChartMap::apply(const std::vector<double>& x) const {
    std::vector<double> y(comp.size());
    for (std::size_t c = 0; c < comp.size(); ++c) y[c] = comp[c](x, 0).value();
    return y;
}

ChartMap identity_map(int n, const Box& domain) {
    ChartMap j;
    j.n = n;
    j.domain = domain;
    for (int c = 0; c < n; ++c) j.comp.push_back(ScalarField::coordinate(n, c));
    return j;
}

ChartMap linear_map(const Eigen::MatrixXd& m, const Box& domain) {
    if (m.rows() != m.cols()) throw std::invalid_argument("linear_map: matrix must be square");
    const int n = static_cast<int>(m.rows());
    ChartMap j;
    j.n = n;
    j.domain = domain;
    for (int c = 0; c < n; ++c) {
        ScalarField row = ScalarField::constant(n, 0.0);
        for (int a = 0; a < n; ++a)
            if (m(c, a) != 0.0) row = row + ScalarField::coordinate(n, a) * m(c, a);
        j.comp.push_back(row);
    }
    return j;
}

MetricChart pullback_metric(const ChartMap& J, const MetricChart& g) {
    const int n = g.n;
    if (J.n != n || static_cast<int>(J.comp.size()) != n)
        throw std::invalid_argument("pullback_metric: dimension mismatch");

    int jorder = kMaxJetOrder;
    for (const ScalarField& c : J.comp) jorder = std::min(jorder, c.max_order());
    const int order = std::min(g.max_order(), jorder - 1);
    if (order < 0) throw std::invalid_argument("pullback_metric: map is not differentiable enough");

    MetricChart out;
    out.n = n;
    out.coords = g.coords;
    out.signature = g.signature;
    out.box = J.domain;
    out.comp.assign(static_cast<std::size_t>(n) * n, ScalarField());

    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            ScalarField fab = memoized(ScalarField(n, order, [J, g, a, b](const double* x, int ord) {
                const int n = g.n;
                std::vector<Jet> jx;
                jx.reserve(n);
                std::vector<double> y(n);
                for (int c = 0; c < n; ++c) {
                    jx.push_back(J.comp[c](x, ord + 1));
                    y[c] = jx.back().value();
                }
                Eigen::MatrixXd jac(n, n);
                for (int c = 0; c < n; ++c)
                    for (int e = 0; e < n; ++e) jac(c, e) = jx[c].derivative(e).value();
                if (std::abs(jac.determinant()) < 1e-12)
                    throw std::runtime_error("pullback_metric: singular Jacobian");

                std::vector<Jet> inner;
                inner.reserve(n);
                for (int c = 0; c < n; ++c) inner.push_back(jx[c].truncate(ord));

                Jet acc(n, ord);
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        const Jet outer = g.g(c, d)(y, ord);
                        acc = acc + Jet::compose(outer, inner) * jx[c].derivative(a).truncate(ord) *
                                        jx[d].derivative(b).truncate(ord);
                    }
                return acc;
            }));
            out.g(a, b) = fab;
            out.g(b, a) = fab;
        }
    return out;
}

double metric_deviation(const MetricChart& a, const MetricChart& b,
                        const std::vector<std::vector<double>>& grid) {
    if (a.n != b.n) throw std::invalid_argument("metric_deviation: dimension mismatch");
    double worst = 0.0;
    for (const auto& x : grid) {
        const Eigen::MatrixXd va = metric_values(a, x), vb = metric_values(b, x);
        worst = std::max(worst, (va - vb).cwiseAbs().maxCoeff());
    }
    return worst;
}

}  // namespace weylcert
