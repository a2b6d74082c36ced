#include "weylcert/surface_connection.hpp"

#include <stdexcept>

namespace weylcert {

SurfaceConnection SurfaceConnection::flat() {
    SurfaceConnection c;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) c.gamma[j][k][l] = ScalarField::constant(2, 0.0);
    return c;
}

SurfaceConnection SurfaceConnection::from_fields(const ScalarField g[2][2][2], int max_order) {
    SurfaceConnection c;
    c.max_order = max_order;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) c.gamma[j][k][l] = g[j][k][l];
    return c;
}

JetTensor christoffel_jets(const SurfaceConnection& conn, const double* y, int order) {
    JetTensor G(2, 3, 2, order);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = k; l < 2; ++l) {
                Jet v = conn.gamma[j][k][l](y, order);
                G(j, k, l) = v;
                if (l != k) G(j, l, k) = v;
            }
    return G;
}

JetTensor tensor_jets(const CovTensor2& t, const double* y, int order) {
    JetTensor T(2, 2, 2, order);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) T(j, k) = t.comp[j][k](y, order);
    return T;
}

JetTensor oneform_jets(const OneForm2& xi, const double* y, int order) {
    JetTensor X(2, 1, 2, order);
    for (int j = 0; j < 2; ++j) X(j) = xi.comp[j](y, order);
    return X;
}

JetTensor curvature2_jets(const JetTensor& gamma) {
    const int ord = gamma.jet_order() - 1;
    if (ord < 0) throw std::invalid_argument("curvature2_jets: gamma order too low");
    JetTensor R(2, 4, 2, ord);
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l)
                for (int m = 0; m < 2; ++m) {
                    Jet r = gamma(m, j, l).derivative(k) - gamma(m, k, l).derivative(j);
                    for (int s = 0; s < 2; ++s) {
                        r.add_scaled_product(gamma(m, k, s).truncate(ord),
                                             gamma(s, j, l).truncate(ord), 1.0);
                        r.add_scaled_product(gamma(m, j, s).truncate(ord),
                                             gamma(s, k, l).truncate(ord), -1.0);
                    }
                    R(j, k, l, m) = std::move(r);
                }
    return R;
}

JetTensor curvature2_jets(const SurfaceConnection& conn, const double* y, int order) {
    return curvature2_jets(christoffel_jets(conn, y, order + 1));
}

JetTensor ricci2_jets(const JetTensor& gamma) {
    JetTensor R = curvature2_jets(gamma);
    JetTensor rho(2, 2, 2, R.jet_order());
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) {
            Jet v = R(j, 0, k, 0);
            v += R(j, 1, k, 1);
            rho(j, k) = std::move(v);
        }
    return rho;
}

JetTensor ricci2_jets(const SurfaceConnection& conn, const double* y, int order) {
    return ricci2_jets(christoffel_jets(conn, y, order + 1));
}

std::array<double, 16> curvature2(const SurfaceConnection& conn, const std::vector<double>& y) {
    JetTensor R = curvature2_jets(conn, y.data(), 0);
    std::array<double, 16> out;
    for (int i = 0; i < 16; ++i) out[i] = R.flat(i).value();
    return out;
}

std::array<double, 4> ricci2(const SurfaceConnection& conn, const std::vector<double>& y) {
    JetTensor rho = ricci2_jets(conn, y.data(), 0);
    std::array<double, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = rho.flat(i).value();
    return out;
}

CovTensor2 ricci_field(const SurfaceConnection& conn) {
    CovTensor2 out;
    out.sym = Sym2::kGeneral;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k)
            out.comp[j][k] = memoized(ScalarField(
                2, conn.max_order - 1,
                [conn, j, k](const double* y, int order) { return ricci2_jets(conn, y, order)(j, k); }));
    return out;
}

}  // namespace weylcert
