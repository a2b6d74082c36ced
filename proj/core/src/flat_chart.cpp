#include "weylcert/flat_chart.hpp"

#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "weylcert/jet_linalg.hpp"

namespace weylcert {

namespace {

constexpr double kMinX3 = 1e-9;

struct PointKey {
    uint64_t b0, b1;
    int order;
    bool operator==(const PointKey& o) const {
        return b0 == o.b0 && b1 == o.b1 && order == o.order;
    }
};

struct PointKeyHash {
    size_t operator()(const PointKey& k) const {
        uint64_t h = 1469598103934665603ull;
        uint64_t parts[3] = {k.b0, k.b1, static_cast<uint64_t>(k.order)};
        for (uint64_t v : parts) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

PointKey make_key(const double* u, int order) {
    PointKey k{0, 0, order};
    std::memcpy(&k.b0, &u[0], sizeof k.b0);
    std::memcpy(&k.b1, &u[1], sizeof k.b1);
    return k;
}

std::array<double, 2> newton_invert(const Embedding3& emb, const double* u,
                                    std::array<double, 2> y) {
    for (int it = 0; it < 60; ++it) {
        const Jet r1 = emb.r[0](y.data(), 1);
        const Jet r2 = emb.r[1](y.data(), 1);
        const Jet r3 = emb.r[2](y.data(), 1);
        if (std::abs(r3.value()) < kMinX3)
            throw std::runtime_error("flat_chart: x3 vanishing along the solve");
        const Jet p1 = r1 / r3, p2 = r2 / r3;
        const double e1 = p1.value() - u[0], e2 = p2.value() - u[1];
        if (std::abs(e1) < 1e-13 && std::abs(e2) < 1e-13) return y;
        const double j11 = p1.deriv({0}), j12 = p1.deriv({1});
        const double j21 = p2.deriv({0}), j22 = p2.deriv({1});
        const double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-12)
            throw std::runtime_error("flat_chart: projection Jacobian degenerate");
        y[0] -= (j22 * e1 - j12 * e2) / det;
        y[1] -= (j11 * e2 - j21 * e1) / det;
    }
    throw std::runtime_error("flat_chart: inverse solve did not converge");
}

}  // namespace

std::array<double, 2> FlatChart::project(const double* y) const {
    const double r1 = source.r[0](y, 0).value();
    const double r2 = source.r[1](y, 0).value();
    const double r3 = source.r[2](y, 0).value();
    if (std::abs(r3) < kMinX3) throw std::runtime_error("flat_chart: x3 vanishing");
    return {r1 / r3, r2 / r3};
}

FlatChart make_flat_chart(const Embedding3& emb, const Box& u_domain,
                          const std::vector<double>& base_u,
                          std::function<std::array<double, 2>(const double*)> guess) {
    if (u_domain.dim() != 2 || base_u.size() != 2)
        throw std::invalid_argument("make_flat_chart: need a 2-box and a 2-point");

    FlatChart chart;
    chart.source = emb;
    chart.domain = u_domain;
    chart.base_u = base_u;

    struct Cache {
        std::mutex mu;
        std::unordered_map<PointKey, std::shared_ptr<const std::array<Jet, 2>>, PointKeyHash> map;
    };
    auto cache = std::make_shared<Cache>();

    chart.inverse = [emb, guess, cache](const double* u, int order) -> std::array<Jet, 2> {
        const int ord = std::max(order, 1);  // the map inversion needs the Jacobian
        const PointKey key = make_key(u, ord);
        {
            std::lock_guard<std::mutex> lk(cache->mu);
            auto it = cache->map.find(key);
            if (it != cache->map.end())
                return {(*it->second)[0].truncate(order), (*it->second)[1].truncate(order)};
        }
        const std::array<double, 2> ys = newton_invert(emb, u, guess(u));
        const std::vector<double> yv = {ys[0], ys[1]};
        const Jet r1 = emb.r[0](yv, ord);
        const Jet r2 = emb.r[1](yv, ord);
        const Jet r3 = emb.r[2](yv, ord);
        if (std::abs(r3.value()) < kMinX3) throw std::runtime_error("flat_chart: x3 vanishing");
        const std::vector<Jet> proj = {r1 / r3, r2 / r3};
        const std::vector<Jet> inv = jet_invert_map(proj, yv);
        auto val = std::make_shared<const std::array<Jet, 2>>(std::array<Jet, 2>{inv[0], inv[1]});
        std::lock_guard<std::mutex> lk(cache->mu);
        const auto& stored = *cache->map.emplace(key, val).first->second;
        return {stored[0].truncate(order), stored[1].truncate(order)};
    };
    return chart;
}

ScalarField pull_to_flat(const FlatChart& chart, const ScalarField& g) {
    int max_order = g.max_order();
    for (const auto& comp : chart.source.r) max_order = std::min(max_order, comp.max_order());
    auto inverse = chart.inverse;
    ScalarField out(2, max_order, [inverse, g](const double* u, int order) {
        const std::array<Jet, 2> yj = inverse(u, order);
        const double ys[2] = {yj[0].value(), yj[1].value()};
        const Jet outer = g(ys, order);
        return Jet::compose(outer, {yj[0], yj[1]});
    });
    return memoized(out);
}

FlatSurface flatten(const FlatChart& chart) {
    FlatSurface s;
    for (int i = 0; i < 3; ++i) s.r[i] = pull_to_flat(chart, chart.source.r[i]);
    s.f = s.r[2];
    s.domain = chart.domain;
    s.basepoint = chart.base_u;

    const ScalarField f = s.f;
    const ScalarField fd[2] = {derivative(f, 0), derivative(f, 1)};
    const ScalarField zero = ScalarField::constant(2, 0.0);

    s.conn.max_order = f.max_order() - 1;
    s.conn.gamma[0][0][0] = fd[0] * 2.0 / f;
    s.conn.gamma[0][0][1] = s.conn.gamma[0][1][0] = fd[1] / f;
    s.conn.gamma[0][1][1] = zero;
    s.conn.gamma[1][0][0] = zero;
    s.conn.gamma[1][0][1] = s.conn.gamma[1][1][0] = fd[0] / f;
    s.conn.gamma[1][1][1] = fd[1] * 2.0 / f;

    s.b.sym = Sym2::kSymmetric;
    s.rho.sym = Sym2::kSymmetric;
    for (int j = 0; j < 2; ++j)
        for (int k = j; k < 2; ++k) {
            ScalarField bjk = derivative(fd[j], k) / f - fd[j] * fd[k] * 2.0 / (f * f);
            s.b.comp[j][k] = s.b.comp[k][j] = bjk;
            s.rho.comp[j][k] = s.rho.comp[k][j] = bjk * -1.0;
        }

    s.alpha.a = memoized(f * f * f);
    s.alpha.basepoint = chart.base_u;
    s.alpha.base_value = s.alpha.a(chart.base_u, 0).value();
    return s;
}

}  // namespace weylcert
