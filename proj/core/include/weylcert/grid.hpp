#pragma once

#include <stdexcept>
#include <vector>

namespace weylcert {

// Axis-aligned sample box.  Fixture charts publish one; verification grids
// shrink it by a relative margin to stay clear of the boundary.
struct Box {
    std::vector<double> lo, hi;
    int dim() const { return static_cast<int>(lo.size()); }
};

inline std::vector<std::vector<double>> grid_points(const Box& box,
                                                    const std::vector<int>& counts,
                                                    double margin = 0.0) {
    const int d = box.dim();
    if (static_cast<int>(counts.size()) != d || static_cast<int>(box.hi.size()) != d)
        throw std::invalid_argument("grid_points: dim mismatch");
    std::vector<std::vector<double>> pts;
    std::vector<int> ix(d, 0);
    long total = 1;
    for (int c : counts) {
        if (c < 1) throw std::invalid_argument("grid_points: counts must be >= 1");
        total *= c;
    }
    pts.reserve(total);
    for (long t = 0; t < total; ++t) {
        std::vector<double> p(d);
        for (int a = 0; a < d; ++a) {
            const double w = box.hi[a] - box.lo[a];
            const double lo = box.lo[a] + margin * w, hi = box.hi[a] - margin * w;
            p[a] = (counts[a] == 1) ? 0.5 * (lo + hi)
                                    : lo + (hi - lo) * ix[a] / (counts[a] - 1);
        }
        pts.push_back(std::move(p));
        for (int a = d - 1; a >= 0; --a) {
            if (++ix[a] < counts[a]) break;
            ix[a] = 0;
        }
    }
    return pts;
}

}  // namespace weylcert
