#include "weylcert/tensor_calc.hpp"

#include <cmath>
#include <stdexcept>

namespace weylcert {

JetTensor::JetTensor(int chart_dim, int rank, int jet_dim, int jet_order)
    : cdim_(chart_dim), rank_(rank) {
    if (chart_dim < 1 || rank < 0) throw std::invalid_argument("JetTensor: bad shape");
    std::size_t n = 1;
    for (int i = 0; i < rank; ++i) n *= chart_dim;
    c_.assign(n, Jet(jet_dim, jet_order));
}

double JetTensor::max_abs_value() const {
    double m = 0.0;
    for (const Jet& j : c_) m = std::max(m, std::abs(j.value()));
    return m;
}

JetTensor covariant_derivative(const JetTensor& T, const JetTensor& gamma) {
    const int d = T.chart_dim();
    const int k = T.rank();
    const int ord = T.jet_order();
    if (ord < 1) throw std::invalid_argument("covariant_derivative: jet order too low");
    if (gamma.chart_dim() != d || gamma.rank() != 3)
        throw std::invalid_argument("covariant_derivative: bad gamma");
    const int out_ord = ord - 1;

    // Γ truncated to the result order once, up front.
    JetTensor G(d, 3, gamma.jet_dim(), out_ord);
    for (int i = 0; i < G.component_count(); ++i)
        G.flat(i) = gamma.flat(i).truncate(out_ord);

    JetTensor R(d, k + 1, T.jet_dim(), out_ord);
    const int stride_count = T.component_count();  // d^k

    std::vector<int> idx(k, 0);
    for (int lin = 0; lin < stride_count; ++lin) {
        // decode lin into idx (row-major)
        int rem = lin;
        for (int i = k - 1; i >= 0; --i) {
            idx[i] = rem % d;
            rem /= d;
        }
        for (int a = 0; a < d; ++a) {
            Jet out = T.flat(lin).derivative(a);
            for (int slot = 0; slot < k; ++slot) {
                // replace idx[slot] by summation index s
                int stride = 1;
                for (int i = slot + 1; i < k; ++i) stride *= d;
                const int base = lin - idx[slot] * stride;
                for (int s = 0; s < d; ++s) {
                    Jet ts = T.flat(base + s * stride).truncate(out_ord);
                    out.add_scaled_product(G(s, a, idx[slot]), ts, -1.0);
                }
            }
            R.flat(a * stride_count + lin) = std::move(out);
        }
    }
    return R;
}

}  // namespace weylcert
