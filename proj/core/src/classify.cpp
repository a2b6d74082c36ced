#include "weylcert/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace weylcert {

FlatnessResult is_projectively_flat(const SurfaceConnection& conn,
                                    const std::vector<std::vector<double>>& grid, double tol,
                                    bool strict) {
    double asym = 0.0, residual = 0.0;
    for (const auto& y : grid) {
        JetTensor G = christoffel_jets(conn, y.data(), 2);
        JetTensor rho = ricci2_jets(G);
        asym = std::max(asym, std::abs(rho(0, 1).value() - rho(1, 0).value()));
        JetTensor drho = covariant_derivative(rho, G);
        for (int k = 0; k < 2; ++k)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l)
                    residual = std::max(residual,
                                        std::abs(drho(k, j, l).value() - drho(j, k, l).value()));
    }
    if (strict && asym > tol)
        throw std::runtime_error("is_projectively_flat: Ricci asymmetric (not equiaffine)");
    return {residual < tol && asym < tol, residual, asym};
}

SurfaceConnection projective_modify(const SurfaceConnection& conn, const OneForm2& xi) {
    SurfaceConnection out;
    out.max_order = std::min({conn.max_order, xi.comp[0].max_order(), xi.comp[1].max_order()});
    for (int l = 0; l < 2; ++l)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                ScalarField g = conn.gamma[l][j][k];
                if (l == k) g = g + xi.comp[j];
                if (l == j) g = g + xi.comp[k];
                out.gamma[l][j][k] = g;
            }
    return out;
}

const char* to_string(ConnClass c) {
    switch (c) {
        case ConnClass::kFlat: return "FLAT";
        case ConnClass::kParallelRicci: return "PARALLEL_RICCI";
        case ConnClass::kRicciRecurrent: return "RICCI_RECURRENT";
        case ConnClass::kGeneric: return "GENERIC";
    }
    return "?";
}

namespace {

void ricci_signature(double r11, double r12, double r22, double zero_tol,
                     int& pos, int& neg, int& zero) {
    const double tr = r11 + r22;
    const double det = r11 * r22 - r12 * r12;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    const double ev[2] = {0.5 * (tr + disc), 0.5 * (tr - disc)};
    const double scale = std::max({1.0, std::abs(ev[0]), std::abs(ev[1])});
    pos = neg = zero = 0;
    for (double e : ev) {
        if (std::abs(e) < zero_tol * scale)
            ++zero;
        else if (e > 0.0)
            ++pos;
        else
            ++neg;
    }
}

}  // namespace

ClassifyResult classify_connection(const SurfaceConnection& conn,
                                   const std::vector<std::vector<double>>& grid, double tol) {
    ClassifyResult out;
    struct PointData {
        double rho[2][2];
        double drho[2][2][2];
    };
    std::vector<PointData> data;
    data.reserve(grid.size());

    for (const auto& y : grid) {
        JetTensor G = christoffel_jets(conn, y.data(), 2);
        JetTensor rho = ricci2_jets(G);
        JetTensor drho = covariant_derivative(rho, G);
        PointData pd;
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                pd.rho[j][k] = rho(j, k).value();
                out.max_rho = std::max(out.max_rho, std::abs(pd.rho[j][k]));
                for (int u = 0; u < 2; ++u) {
                    pd.drho[u][j][k] = drho(u, j, k).value();
                    out.max_drho = std::max(out.max_drho, std::abs(pd.drho[u][j][k]));
                }
            }
        data.push_back(pd);
    }

    if (out.max_rho < tol) {
        out.verdict = ConnClass::kFlat;
        return out;
    }

    if (out.max_drho < tol * std::max(1.0, out.max_rho)) {
        out.verdict = ConnClass::kParallelRicci;
        // signature at the first grid point; note disagreements elsewhere
        int p0, n0, z0;
        const PointData& first = data.front();
        ricci_signature(first.rho[0][0], first.rho[0][1], first.rho[1][1], 1e-7, p0, n0, z0);
        out.sig_pos = p0;
        out.sig_neg = n0;
        out.sig_zero = z0;
        for (std::size_t i = 1; i < data.size(); ++i) {
            int p, n, z;
            ricci_signature(data[i].rho[0][0], data[i].rho[0][1], data[i].rho[1][1], 1e-7,
                            p, n, z);
            if (p != p0 || n != n0)
                out.notes.push_back("signature varies across grid at point index " +
                                    std::to_string(i));
        }
        return out;
    }

    // Recurrence: every 2x2 minor of the (ρ, D_uρ) pair must vanish.
    const double minor_scale = std::max(1.0, out.max_rho * out.max_drho);
    for (const PointData& pd : data) {
        for (int u = 0; u < 2; ++u)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k)
                    for (int l = 0; l < 2; ++l)
                        for (int m = 0; m < 2; ++m) {
                            const double minor = pd.rho[j][k] * pd.drho[u][l][m] -
                                                 pd.rho[l][m] * pd.drho[u][j][k];
                            out.max_minor = std::max(out.max_minor, std::abs(minor));
                        }
    }
    if (out.max_minor < tol * minor_scale) {
        out.verdict = ConnClass::kRicciRecurrent;
        return out;
    }

    out.verdict = ConnClass::kGeneric;
    return out;
}

}  // namespace weylcert
