#include "weylcert/fd_check.hpp"

#include <cmath>
#include <stdexcept>

namespace weylcert {

namespace {

double value_at(const ScalarField& f, std::vector<double> x, int ax1, double d1,
                int ax2, double d2) {
    x[ax1] += d1;
    if (ax2 >= 0) x[ax2] += d2;
    return f(x, 0).value();
}

}  // namespace

double fd_crosscheck(const ScalarField& field, const std::vector<double>& point,
                     int check_order, double step) {
    if (check_order < 1 || check_order > 2)
        throw std::invalid_argument("fd_crosscheck: check_order must be 1 or 2");
    if (step <= 0.0) throw std::invalid_argument("fd_crosscheck: step must be positive");

    const int d = field.dim();
    const Jet j = field(point, check_order);
    const double h = step;
    double worst = 0.0;

    auto record = [&worst](double fd, double jet) {
        const double dev = std::abs(fd - jet) / std::max(1.0, std::abs(jet));
        worst = std::max(worst, dev);
    };

    for (int a = 0; a < d; ++a) {
        const double fp = value_at(field, point, a, h, -1, 0.0);
        const double fm = value_at(field, point, a, -h, -1, 0.0);
        record((fp - fm) / (2.0 * h), j.deriv({a}));
        if (check_order < 2) continue;
        const double f0 = j.value();
        record((fp - 2.0 * f0 + fm) / (h * h), j.deriv({a, a}));
        for (int b = a + 1; b < d; ++b) {
            const double fpp = value_at(field, point, a, h, b, h);
            const double fpm = value_at(field, point, a, h, b, -h);
            const double fmp = value_at(field, point, a, -h, b, h);
            const double fmm = value_at(field, point, a, -h, b, -h);
            record((fpp - fpm - fmp + fmm) / (4.0 * h * h), j.deriv({a, b}));
        }
    }
    return worst;
}

}  // namespace weylcert
