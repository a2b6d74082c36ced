#pragma once

#include <initializer_list>
#include <vector>

#include "weylcert/multi_index.hpp"

namespace weylcert {

// Truncated Taylor expansion of a smooth scalar at a point, in derivative
// normalization: entry rank(a) holds the partial derivative d^a f, not the
// Taylor coefficient d^a f / a!.
class Jet {
public:
    Jet() : shape_(nullptr) {}
    Jet(int dim, int order);
    static Jet constant(int dim, int order, double v);
    static Jet coordinate(int dim, int order, int axis, double x0);

    bool empty() const { return shape_ == nullptr; }
    int dim() const { return shape_->dim(); }
    int order() const { return shape_->order(); }
    int size() const { return shape_->size(); }
    const JetShape& shape() const { return *shape_; }

    double value() const { return c_[0]; }
    double& operator[](int i) { return c_[i]; }
    double operator[](int i) const { return c_[i]; }

    // Mixed partial by axis list, e.g. deriv({0,0,1}) = d^2/dx0^2 d/dx1 f.
    double deriv(std::initializer_list<int> axes) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(double s);
    Jet& operator+=(double v) { c_[0] += v; return *this; }
    Jet& operator-=(double v) { c_[0] -= v; return *this; }
    Jet operator-() const;

    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    friend Jet operator+(Jet a, double v) { a += v; return a; }
    friend Jet operator+(double v, Jet a) { a += v; return a; }
    friend Jet operator-(Jet a, double v) { a -= v; return a; }
    friend Jet operator-(double v, const Jet& a) { Jet r = -a; r += v; return r; }
    friend Jet operator*(Jet a, double s) { a *= s; return a; }
    friend Jet operator*(double s, Jet a) { a *= s; return a; }
    friend Jet operator/(Jet a, double s) { a *= 1.0 / s; return a; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);
    friend Jet operator/(double v, const Jet& b);

    // this += s * a * b.  The workhorse of every tensor contraction.
    void add_scaled_product(const Jet& a, const Jet& b, double s = 1.0);
    void add_scaled(const Jet& a, double s);

    Jet derivative(int axis) const;   // order drops by one
    Jet truncate(int new_order) const;
    // Reinterpret on a larger chart: axis i of this jet becomes axis
    // axis_map[i]; derivatives along new axes vanish.
    Jet extend(int new_dim, const std::vector<int>& axis_map) const;

    // Taylor composition: outer is a jet in m variables at the point
    // (inner[0].value(), ..., inner[m-1].value()); the inner jets share one
    // chart.  Result: jet of outer∘inner on the inner chart.
    static Jet compose(const Jet& outer, const std::vector<Jet>& inner);

    double max_abs() const;

private:
    const JetShape* shape_;
    std::vector<double> c_;
};

// phi(f) for univariate phi given its derivatives at f.value():
// derivs[k] = phi^(k)(f.value()), k = 0..f.order().
Jet apply_univariate(const Jet& f, const double* derivs);

Jet exp(const Jet& f);
Jet log(const Jet& f);
Jet sqrt(const Jet& f);
Jet sin(const Jet& f);
Jet cos(const Jet& f);
Jet sinh(const Jet& f);
Jet cosh(const Jet& f);
Jet atan(const Jet& f);
Jet pow(const Jet& f, double p);
Jet recip(const Jet& f);

}  // namespace weylcert
