#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "weylcert/jet.hpp"

namespace weylcert {

// A scalar field on a chart, queried through jets.  The evaluator must be
// pure: same point and order give bit-identical jets.
class ScalarField {
public:
    using Evaluator = std::function<Jet(const double* x, int order)>;

    ScalarField() : dim_(0), max_order_(-1) {}
    ScalarField(int dim, int max_order, Evaluator eval);

    static ScalarField constant(int dim, double v);
    static ScalarField coordinate(int dim, int axis);
    // Field backed by a single precomputed jet, restricted to its point.
    static ScalarField from_jet(const Jet& j, const std::vector<double>& x0);

    int dim() const { return dim_; }
    int max_order() const { return max_order_; }
    bool valid() const { return static_cast<bool>(eval_); }

    Jet operator()(const double* x, int order) const;
    Jet operator()(const std::vector<double>& x, int order) const;

private:
    int dim_;
    int max_order_;
    Evaluator eval_;
};

// All partials d^a f(point) with |a| <= order.
Jet jet_eval(const ScalarField& field, const std::vector<double>& point, int order);

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, double s);
ScalarField operator*(double s, const ScalarField& a);
ScalarField operator+(const ScalarField& a, double v);
ScalarField operator-(const ScalarField& a, double v);

// Lift a univariate jet function (exp, sin, ...) to fields.
ScalarField apply(Jet (*fn)(const Jet&), const ScalarField& a);

// Partial derivative as a field; max_order drops by one.
ScalarField derivative(const ScalarField& a, int axis);

// Caches evaluations keyed by (point, order).  Purity of the wrapped field
// makes the cache transparent; grid sweeps hit each point many times.
ScalarField memoized(const ScalarField& a);

}  // namespace weylcert
