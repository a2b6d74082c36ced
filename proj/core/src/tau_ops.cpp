#include <stdexcept>

#include "weylcert/kerb.hpp"
#include "weylcert/tau.hpp"

namespace weylcert {

FourFormValue L_apply(const SurfaceConnection& conn, const CovTensor2& rho, const CovTensor2& tau,
                      const std::vector<double>& point) {
    const JetTensor G = christoffel_jets(conn, point.data(), 2);
    const JetTensor T = tensor_jets(tau, point.data(), 2);
    const JetTensor DT = covariant_derivative(T, G);
    const JetTensor DDT = covariant_derivative(DT, G);

    const JetTensor R = tensor_jets(rho, point.data(), 0);
    auto rv = [&R](int j, int k) { return R(j, k).value(); };
    auto tv = [&T](int j, int k) { return T(j, k).value(); };

    // (j,k,l,m) = (1,2,1,2); DDT(a, b, c, d) = tau_{cd,ba}
    FourFormValue out;
    out.a1212 = DDT(0, 0, 1, 1).value() - DDT(0, 1, 0, 1).value() - DDT(1, 0, 1, 0).value() +
                DDT(1, 1, 0, 0).value() + tv(1, 1) * rv(0, 0) - tv(0, 1) * rv(1, 0) -
                tv(1, 0) * rv(0, 1) + tv(0, 0) * rv(1, 1);
    return out;
}

double F_apply(const SurfaceConnection& conn, const CovTensor2& rho, const CovTensor2& T,
               const std::vector<double>& point) {
    const JetTensor G = christoffel_jets(conn, point.data(), 1);
    const JetTensor Tj = tensor_jets(T, point.data(), 2);

    // contravariant divergence W^k = d_j T^{jk} + G^j_{js} T^{sk} + G^k_{js} T^{js}
    std::array<Jet, 2> trace;  // G^j_{js} as order-1 jets
    for (int s = 0; s < 2; ++s) trace[s] = G(0, 0, s) + G(1, 1, s);

    std::array<Jet, 2> W;
    for (int k = 0; k < 2; ++k) {
        Jet w = Tj(0, k).derivative(0);
        w += Tj(1, k).derivative(1);
        for (int s = 0; s < 2; ++s) w.add_scaled_product(trace[s], Tj(s, k).truncate(1));
        for (int j = 0; j < 2; ++j)
            for (int s = 0; s < 2; ++s) w.add_scaled_product(G(k, j, s), Tj(j, s).truncate(1));
        W[k] = std::move(w);
    }

    // div W = d_k W^k + G^k_{ks} W^s
    double div = W[0].derivative(0).value() + W[1].derivative(1).value();
    for (int s = 0; s < 2; ++s) div += trace[s].value() * W[s].value();

    const JetTensor R = tensor_jets(rho, point.data(), 0);
    double pair = 0.0;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) pair += Tj(j, k).value() * R(j, k).value();
    return div + pair;
}

TauField gauge_shift(const SurfaceConnection& conn, const TauField& tau, const OneForm2& xi) {
    const CovTensor2 shift = b_apply(conn, xi);
    TauField out;
    out.sym = Sym2::kSymmetric;
    for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out.comp[j][k] = tau.comp[j][k] + shift.comp[j][k];
    return out;
}

}  // namespace weylcert
