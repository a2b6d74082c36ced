#pragma once

#include <vector>

#include "weylcert/jet.hpp"

namespace weylcert {

// Pointwise tensor whose components are jets on a chart.  Index convention
// for covariant derivatives: the derivative index is prepended, so for a
// 1-form comp(j, k) of the derivative holds xi_{k,j}, and a second pass
// gives comp(l, j, k) = xi_{k,jl} (comma indices accumulate left to right
// in application order).
class JetTensor {
public:
    JetTensor() : cdim_(0), rank_(0) {}
    JetTensor(int chart_dim, int rank, int jet_dim, int jet_order);

    int chart_dim() const { return cdim_; }
    int rank() const { return rank_; }
    int jet_dim() const { return c_.empty() ? 0 : c_[0].dim(); }
    int jet_order() const { return c_.empty() ? 0 : c_[0].order(); }
    int component_count() const { return static_cast<int>(c_.size()); }

    Jet& flat(int i) { return c_[i]; }
    const Jet& flat(int i) const { return c_[i]; }

    Jet& operator()(int a) { return c_[a]; }
    const Jet& operator()(int a) const { return c_[a]; }
    Jet& operator()(int a, int b) { return c_[a * cdim_ + b]; }
    const Jet& operator()(int a, int b) const { return c_[a * cdim_ + b]; }
    Jet& operator()(int a, int b, int c) { return c_[(a * cdim_ + b) * cdim_ + c]; }
    const Jet& operator()(int a, int b, int c) const { return c_[(a * cdim_ + b) * cdim_ + c]; }
    Jet& operator()(int a, int b, int c, int d) {
        return c_[((a * cdim_ + b) * cdim_ + c) * cdim_ + d];
    }
    const Jet& operator()(int a, int b, int c, int d) const {
        return c_[((a * cdim_ + b) * cdim_ + c) * cdim_ + d];
    }
    Jet& operator()(int a, int b, int c, int d, int e) {
        return c_[(((a * cdim_ + b) * cdim_ + c) * cdim_ + d) * cdim_ + e];
    }
    const Jet& operator()(int a, int b, int c, int d, int e) const {
        return c_[(((a * cdim_ + b) * cdim_ + c) * cdim_ + d) * cdim_ + e];
    }

    double max_abs_value() const;  // max |component value| (order-0 part)

private:
    int cdim_, rank_;
    std::vector<Jet> c_;
};

// Covariant derivative of a fully covariant tensor: prepends the derivative
// index.  gamma is the rank-3 table with gamma(m, a, b) = Γ^m_{ab}; its jets
// must support order >= T.jet_order() - 1.  Result jets drop one order.
JetTensor covariant_derivative(const JetTensor& T, const JetTensor& gamma);

}  // namespace weylcert
