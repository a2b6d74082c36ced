#include "weylcert/area_form.hpp"

#include <cmath>
#include <stdexcept>

#include "weylcert/quadrature.hpp"

namespace weylcert {

ScalarField exponential_of_potential(const ScalarField& t1, const ScalarField& t2,
                                     const std::vector<double>& basepoint, double base_value,
                                     int max_order) {
    if (base_value == 0.0) throw std::invalid_argument("exponential_of_potential: zero base value");
    if (basepoint.size() != 2) throw std::invalid_argument("exponential_of_potential: bad basepoint");

    const double b1 = basepoint[0], b2 = basepoint[1];
    const double sign = base_value > 0.0 ? 1.0 : -1.0;
    const double log_base = std::log(std::abs(base_value));

    ScalarField a(2, max_order, [t1, t2, b1, b2, sign, log_base](const double* y, int order) {
        const double y1 = y[0], y2 = y[1];
        // log-potential value by an L-path from the basepoint
        double lv = log_base;
        lv += integrate([&](double s) {
            const double p[2] = {s, b2};
            return t1(p, 0).value();
        }, b1, y1);
        lv += integrate([&](double s) {
            const double p[2] = {y1, s};
            return t2(p, 0).value();
        }, b2, y2);

        Jet lam(2, order);
        lam[0] = lv;
        if (order >= 1) {
            const Jet tj[2] = {t1(y, order - 1), t2(y, order - 1)};
            const JetShape& sh = lam.shape();
            for (int i = 1; i < sh.size(); ++i) {
                MIdx m = sh.index(i);
                const int axis = m[0] > 0 ? 0 : 1;
                --m[axis];
                lam[i] = tj[axis][tj[axis].shape().rank(m)];
            }
        }
        return sign * exp(lam);
    });
    return memoized(a);
}

AreaForm parallel_area_form(const SurfaceConnection& conn,
                            const std::vector<double>& basepoint, double base_value) {
    // trace fields t_j = Γ^k_{jk}
    ScalarField t1 = conn.gamma[0][0][0] + conn.gamma[1][0][1];
    ScalarField t2 = conn.gamma[0][1][0] + conn.gamma[1][1][1];

    AreaForm out;
    out.a = exponential_of_potential(t1, t2, basepoint, base_value, conn.max_order);
    out.basepoint = basepoint;
    out.base_value = base_value;
    return out;
}

double area_form_loop_defect(const SurfaceConnection& conn, const Box& rect) {
    if (rect.dim() != 2) throw std::invalid_argument("area_form_loop_defect: need a 2-box");
    ScalarField t1 = conn.gamma[0][0][0] + conn.gamma[1][0][1];
    ScalarField t2 = conn.gamma[0][1][0] + conn.gamma[1][1][1];
    const double x0 = rect.lo[0], x1 = rect.hi[0], y0 = rect.lo[1], y1 = rect.hi[1];
    auto seg1 = [&](double ycoord, double a, double b) {
        return integrate([&](double s) {
            const double p[2] = {s, ycoord};
            return t1(p, 0).value();
        }, a, b);
    };
    auto seg2 = [&](double xcoord, double a, double b) {
        return integrate([&](double s) {
            const double p[2] = {xcoord, s};
            return t2(p, 0).value();
        }, a, b);
    };
    return seg1(y0, x0, x1) + seg2(x1, y0, y1) + seg1(y1, x1, x0) + seg2(x0, y1, y0);
}

double area_form_parallel_residual(const SurfaceConnection& conn, const AreaForm& alpha,
                                   const std::vector<std::vector<double>>& grid) {
    double worst = 0.0;
    for (const auto& y : grid) {
        Jet a = alpha.a(y, 1);
        JetTensor G = christoffel_jets(conn, y.data(), 0);
        for (int j = 0; j < 2; ++j) {
            const double tr = G(0, j, 0).value() + G(1, j, 1).value();
            worst = std::max(worst, std::abs(a.deriv({j}) - tr * a.value()));
        }
    }
    return worst;
}

}  // namespace weylcert
