#include "weylcert/centroaffine.hpp"

#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "weylcert/area_form.hpp"
#include "weylcert/jet_linalg.hpp"

namespace weylcert {

namespace {

uint64_t dbits(double v) {
    uint64_t u;
    std::memcpy(&u, &v, sizeof u);
    return u;
}

struct FrameKey {
    uint64_t b0, b1;
    int order;
    bool operator==(const FrameKey& o) const {
        return b0 == o.b0 && b1 == o.b1 && order == o.order;
    }
};

struct FrameKeyHash {
    size_t operator()(const FrameKey& k) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t v : {k.b0, k.b1, static_cast<uint64_t>(k.order)}) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// One solve per (point, order) feeds all nine component fields.
struct FrameSolver {
    std::array<ScalarField, 3> r;
    std::mutex mu;
    std::unordered_map<FrameKey, std::shared_ptr<const JetMatrix>, FrameKeyHash> cache;

    std::shared_ptr<const JetMatrix> solve(const double* y, int order) {
        const FrameKey key{dbits(y[0]), dbits(y[1]), order};
        {
            std::lock_guard<std::mutex> lk(mu);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
        }
        JetMatrix A(9, Jet(2, order)), B(9, Jet(2, order));
        for (int i = 0; i < 3; ++i) {
            const Jet ri = r[i](y, order + 2);
            const Jet d1 = ri.derivative(0);
            const Jet d2 = ri.derivative(1);
            A[i * 3 + 0] = d1.truncate(order);
            A[i * 3 + 1] = d2.truncate(order);
            A[i * 3 + 2] = ri.truncate(order);
            B[i * 3 + 0] = d1.derivative(0);
            B[i * 3 + 1] = d1.derivative(1);
            B[i * 3 + 2] = d2.derivative(1);
        }
        const double det =
            A[0].value() * (A[4].value() * A[8].value() - A[5].value() * A[7].value()) -
            A[1].value() * (A[3].value() * A[8].value() - A[5].value() * A[6].value()) +
            A[2].value() * (A[3].value() * A[7].value() - A[4].value() * A[6].value());
        if (std::abs(det) <= 1e-6)
            throw std::runtime_error("centroaffine_connection: singular radial frame");
        auto X = std::make_shared<const JetMatrix>(jet_solve(std::move(A), std::move(B), 3, 3));
        std::lock_guard<std::mutex> lk(mu);
        return cache.emplace(key, X).first->second;
    }
};

}  // namespace

CentroaffineOutput centroaffine_connection(const Embedding3& emb) {
    auto solver = std::make_shared<FrameSolver>();
    solver->r = emb.r;
    int max_order = kMaxJetOrder;
    for (const auto& f : emb.r) max_order = std::min(max_order, f.max_order());
    max_order -= 2;
    if (max_order < 0) throw std::invalid_argument("centroaffine_connection: embedding order too low");

    auto entry = [solver, max_order](int row, int col) {
        return ScalarField(2, max_order, [solver, row, col](const double* y, int order) {
            return (*solver->solve(y, order))[row * 3 + col];
        });
    };

    CentroaffineOutput out;
    out.conn.max_order = max_order;
    for (int l = 0; l < 2; ++l) {
        out.conn.gamma[l][0][0] = entry(l, 0);
        out.conn.gamma[l][0][1] = out.conn.gamma[l][1][0] = entry(l, 1);
        out.conn.gamma[l][1][1] = entry(l, 2);
    }
    out.b.sym = Sym2::kSymmetric;
    out.b.comp[0][0] = entry(2, 0);
    out.b.comp[0][1] = out.b.comp[1][0] = entry(2, 1);
    out.b.comp[1][1] = entry(2, 2);
    return out;
}

double centroaffine_reconstruction_residual(const Embedding3& emb, const CentroaffineOutput& ca,
                                            const std::vector<std::vector<double>>& grid) {
    double worst = 0.0;
    for (const auto& y : grid) {
        const JetTensor G = christoffel_jets(ca.conn, y.data(), 0);
        const JetTensor b = tensor_jets(ca.b, y.data(), 0);
        for (int i = 0; i < 3; ++i) {
            const Jet ri = emb.r[i](y, 2);
            const double r = ri.value();
            const double d[2] = {ri.deriv({0}), ri.deriv({1})};
            const double dd[2][2] = {{ri.deriv({0, 0}), ri.deriv({0, 1})},
                                     {ri.deriv({0, 1}), ri.deriv({1, 1})}};
            for (int j = 0; j < 2; ++j)
                for (int k = j; k < 2; ++k) {
                    double res = dd[j][k] - b(j, k).value() * r;
                    for (int s = 0; s < 2; ++s) res -= G(s, j, k).value() * d[s];
                    worst = std::max(worst, std::abs(res));
                }
        }
    }
    return worst;
}

RecoveredF recover_f(const SurfaceConnection& conn, const std::vector<double>& basepoint,
                     double base_value, const std::vector<std::vector<double>>& grid) {
    RecoveredF out;
    // ξ_j = −Γ^k_{jk}/3: the difference tensor against the zero connection of
    // the chart is Γ, required to be of projective form ξ_jδ^l_k + ξ_kδ^l_j.
    out.xi.comp[0] = (conn.gamma[0][0][0] + conn.gamma[1][0][1]) * (-1.0 / 3.0);
    out.xi.comp[1] = (conn.gamma[0][1][0] + conn.gamma[1][1][1]) * (-1.0 / 3.0);

    for (const auto& y : grid) {
        const JetTensor G = christoffel_jets(conn, y.data(), 0);
        const JetTensor xi = oneform_jets(out.xi, y.data(), 1);
        for (int l = 0; l < 2; ++l)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) {
                    double proj = 0.0;
                    if (l == k) proj += xi(j).value();
                    if (l == j) proj += xi(k).value();
                    out.off_trace_residual =
                        std::max(out.off_trace_residual, std::abs(G(l, j, k).value() + proj));
                }
        out.dxi_residual = std::max(out.dxi_residual,
                                    std::abs(xi(1).deriv({0}) - xi(0).deriv({1})));
    }
    if (out.off_trace_residual > 1e-9)
        throw std::runtime_error("recover_f: difference tensor not of projective form");
    if (out.dxi_residual > 1e-9) throw std::runtime_error("recover_f: xi is not closed");

    // d(log f) = −ξ
    out.f = exponential_of_potential(out.xi.comp[0] * -1.0, out.xi.comp[1] * -1.0, basepoint,
                                     base_value, conn.max_order);
    return out;
}

double hessian_equation_residual(const ScalarField& f, const SurfaceConnection& conn,
                                 const std::vector<std::vector<double>>& grid) {
    double worst = 0.0;
    for (const auto& y : grid) {
        const Jet fj = f(y, 2);
        const JetTensor G = christoffel_jets(conn, y.data(), 0);
        const std::array<double, 4> rho = ricci2(conn, y);
        const double d[2] = {fj.deriv({0}), fj.deriv({1})};
        const double dd[2][2] = {{fj.deriv({0, 0}), fj.deriv({0, 1})},
                                 {fj.deriv({0, 1}), fj.deriv({1, 1})}};
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                double res = dd[j][k] + fj.value() * rho[j * 2 + k];
                for (int s = 0; s < 2; ++s) res -= G(s, j, k).value() * d[s];
                worst = std::max(worst, std::abs(res));
            }
    }
    return worst;
}

}  // namespace weylcert
