#include "weylcert/jet.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace weylcert {

Jet::Jet(int dim, int order) : shape_(&JetShape::get(dim, order)) {
    c_.assign(shape_->size(), 0.0);
}

Jet Jet::constant(int dim, int order, double v) {
    Jet j(dim, order);
    j.c_[0] = v;
    return j;
}

Jet Jet::coordinate(int dim, int order, int axis, double x0) {
    if (axis < 0 || axis >= dim) throw std::invalid_argument("Jet::coordinate: bad axis");
    Jet j(dim, order);
    j.c_[0] = x0;
    if (order >= 1) {
        MIdx a{};
        a[axis] = 1;
        j.c_[j.shape_->rank(a)] = 1.0;
    }
    return j;
}

double Jet::deriv(std::initializer_list<int> axes) const {
    MIdx a{};
    int deg = 0;
    for (int ax : axes) {
        if (ax < 0 || ax >= dim()) throw std::invalid_argument("Jet::deriv: bad axis");
        ++a[ax];
        ++deg;
    }
    if (deg > order()) throw std::invalid_argument("Jet::deriv: order exceeded");
    return c_[shape_->rank(a)];
}

Jet& Jet::operator+=(const Jet& o) {
    if (shape_ != o.shape_) throw std::invalid_argument("Jet: shape mismatch");
    for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    if (shape_ != o.shape_) throw std::invalid_argument("Jet: shape mismatch");
    for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Jet& Jet::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (double& v : r.c_) v = -v;
    return r;
}

void Jet::add_scaled(const Jet& a, double s) {
    if (shape_ != a.shape_) throw std::invalid_argument("Jet: shape mismatch");
    for (int i = 0; i < size(); ++i) c_[i] += s * a.c_[i];
}

void Jet::add_scaled_product(const Jet& a, const Jet& b, double s) {
    if (shape_ != a.shape_ || shape_ != b.shape_)
        throw std::invalid_argument("Jet: shape mismatch");
    const double* pa = a.c_.data();
    const double* pb = b.c_.data();
    double* pd = c_.data();
    for (const auto& t : shape_->product_terms())
        pd[t.dst] += s * t.binom * pa[t.lhs] * pb[t.rhs];
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.dim(), a.order());
    r.add_scaled_product(a, b);
    return r;
}

Jet operator/(const Jet& a, const Jet& b) { return a * recip(b); }

Jet operator/(double v, const Jet& b) { return recip(b) * v; }

Jet Jet::derivative(int axis) const {
    if (axis < 0 || axis >= dim()) throw std::invalid_argument("Jet::derivative: bad axis");
    if (order() == 0) throw std::invalid_argument("Jet::derivative: order 0");
    Jet r(dim(), order() - 1);
    const auto& tbl = shape_->shift_table(axis);
    for (int i = 0; i < r.size(); ++i) r.c_[i] = c_[tbl[i]];
    return r;
}

Jet Jet::truncate(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("Jet::truncate: cannot raise order");
    if (new_order == order()) return *this;
    Jet r(dim(), new_order);
    for (int i = 0; i < r.size(); ++i) r.c_[i] = c_[i];
    return r;
}

Jet Jet::extend(int new_dim, const std::vector<int>& axis_map) const {
    if (static_cast<int>(axis_map.size()) != dim())
        throw std::invalid_argument("Jet::extend: axis_map size mismatch");
    Jet r(new_dim, order());
    for (int i = 0; i < size(); ++i) {
        const MIdx& a = shape_->index(i);
        MIdx b{};
        for (int ax = 0; ax < dim(); ++ax) {
            int nx = axis_map[ax];
            if (nx < 0 || nx >= new_dim) throw std::invalid_argument("Jet::extend: bad axis_map");
            b[nx] = static_cast<std::uint8_t>(b[nx] + a[ax]);
        }
        r.c_[r.shape_->rank(b)] = c_[i];
    }
    return r;
}

Jet Jet::compose(const Jet& outer, const std::vector<Jet>& inner) {
    const int m = outer.dim();
    if (static_cast<int>(inner.size()) != m)
        throw std::invalid_argument("Jet::compose: arity mismatch");
    const JetShape* ish = inner[0].shape_;
    for (const Jet& g : inner)
        if (g.shape_ != ish) throw std::invalid_argument("Jet::compose: inner shape mismatch");
    if (ish->order() != outer.order())
        throw std::invalid_argument("Jet::compose: order mismatch");
    const int K = outer.order();

    std::vector<std::vector<Jet>> pw(m);
    for (int i = 0; i < m; ++i) {
        Jet d = inner[i];
        d.c_[0] = 0.0;
        pw[i].resize(K + 1);
        pw[i][0] = Jet::constant(ish->dim(), K, 1.0);
        for (int k = 1; k <= K; ++k) pw[i][k] = pw[i][k - 1] * d;
    }

    Jet r(ish->dim(), K);
    const JetShape& osh = outer.shape();
    for (int j = 0; j < osh.size(); ++j) {
        const double coef = outer.c_[j] / osh.factorial(j);
        if (coef == 0.0) continue;
        const MIdx& a = osh.index(j);
        Jet term = pw[0][a[0]];
        for (int i = 1; i < m; ++i)
            if (a[i] > 0) term = term * pw[i][a[i]];
        r.add_scaled(term, coef);
    }
    return r;
}

double Jet::max_abs() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

Jet apply_univariate(const Jet& f, const double* derivs) {
    const int K = f.order();
    Jet delta = f;
    delta[0] = 0.0;
    double kfac[kMaxJetOrder + 1];
    kfac[0] = 1.0;
    for (int k = 1; k <= K; ++k) kfac[k] = kfac[k - 1] * k;
    Jet r = Jet::constant(f.dim(), K, derivs[K] / kfac[K]);
    for (int k = K - 1; k >= 0; --k) {
        r = r * delta;
        r += derivs[k] / kfac[k];
    }
    return r;
}

namespace {

using DerivSeq = double[kMaxJetOrder + 1];

Jet apply_seq(const Jet& f, const DerivSeq& d) { return apply_univariate(f, d); }

}  // namespace

Jet exp(const Jet& f) {
    DerivSeq d;
    const double e = std::exp(f.value());
    for (int k = 0; k <= f.order(); ++k) d[k] = e;
    return apply_seq(f, d);
}

Jet log(const Jet& f) {
    const double v = f.value();
    if (v <= 0.0) throw std::domain_error("log: nonpositive jet value");
    DerivSeq d;
    d[0] = std::log(v);
    double p = 1.0 / v;  // (-1)^{k-1} (k-1)! / v^k
    for (int k = 1; k <= f.order(); ++k) {
        d[k] = p;
        p *= -static_cast<double>(k) / v;
    }
    return apply_seq(f, d);
}

Jet sqrt(const Jet& f) { return pow(f, 0.5); }

Jet pow(const Jet& f, double p) {
    const double v = f.value();
    if (v <= 0.0) throw std::domain_error("pow: nonpositive jet value");
    DerivSeq d;
    double coef = 1.0;
    for (int k = 0; k <= f.order(); ++k) {
        d[k] = coef * std::pow(v, p - k);
        coef *= (p - k);
    }
    return apply_seq(f, d);
}

Jet recip(const Jet& f) {
    const double v = f.value();
    if (v == 0.0) throw std::domain_error("recip: zero jet value");
    DerivSeq d;
    double cur = 1.0 / v;  // (-1)^k k! / v^{k+1}
    for (int k = 0; k <= f.order(); ++k) {
        d[k] = cur;
        cur *= -static_cast<double>(k + 1) / v;
    }
    return apply_seq(f, d);
}

Jet sin(const Jet& f) {
    DerivSeq d;
    const double s = std::sin(f.value()), c = std::cos(f.value());
    const double cyc[4] = {s, c, -s, -c};
    for (int k = 0; k <= f.order(); ++k) d[k] = cyc[k % 4];
    return apply_seq(f, d);
}

Jet cos(const Jet& f) {
    DerivSeq d;
    const double s = std::sin(f.value()), c = std::cos(f.value());
    const double cyc[4] = {c, -s, -c, s};
    for (int k = 0; k <= f.order(); ++k) d[k] = cyc[k % 4];
    return apply_seq(f, d);
}

Jet sinh(const Jet& f) {
    DerivSeq d;
    const double s = std::sinh(f.value()), c = std::cosh(f.value());
    for (int k = 0; k <= f.order(); ++k) d[k] = (k % 2 == 0) ? s : c;
    return apply_seq(f, d);
}

Jet cosh(const Jet& f) {
    DerivSeq d;
    const double s = std::sinh(f.value()), c = std::cosh(f.value());
    for (int k = 0; k <= f.order(); ++k) d[k] = (k % 2 == 0) ? c : s;
    return apply_seq(f, d);
}

Jet atan(const Jet& f) {
    // atan^(k) for k >= 1 equals the (k-1)-th derivative of 1/(1+t^2);
    // obtained from a univariate jet of that rational function.
    const int K = f.order();
    DerivSeq d;
    d[0] = std::atan(f.value());
    if (K >= 1) {
        Jet t = Jet::coordinate(1, K - 1, 0, f.value());
        Jet g = recip(1.0 + t * t);
        for (int k = 1; k <= K; ++k) {
            MIdx a{};
            a[0] = static_cast<std::uint8_t>(k - 1);
            d[k] = g[g.shape().rank(a)];
        }
    }
    return apply_seq(f, d);
}

}  // namespace weylcert
