#include "weylcert/scalar_field.hpp"

#include <cmath>
#include <cstring>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace weylcert {

ScalarField::ScalarField(int dim, int max_order, Evaluator eval)
    : dim_(dim), max_order_(max_order), eval_(std::move(eval)) {
    if (dim < 1 || dim > kMaxJetDim) throw std::invalid_argument("ScalarField: bad dim");
    if (max_order < 0 || max_order > kMaxJetOrder)
        throw std::invalid_argument("ScalarField: bad max_order");
}

ScalarField ScalarField::constant(int dim, double v) {
    return ScalarField(dim, kMaxJetOrder,
                       [dim, v](const double*, int order) { return Jet::constant(dim, order, v); });
}

ScalarField ScalarField::coordinate(int dim, int axis) {
    if (axis < 0 || axis >= dim) throw std::invalid_argument("ScalarField::coordinate: bad axis");
    return ScalarField(dim, kMaxJetOrder, [dim, axis](const double* x, int order) {
        return Jet::coordinate(dim, order, axis, x[axis]);
    });
}

ScalarField ScalarField::from_jet(const Jet& j, const std::vector<double>& x0) {
    if (static_cast<int>(x0.size()) != j.dim())
        throw std::invalid_argument("ScalarField::from_jet: point dim mismatch");
    const int dim = j.dim();
    return ScalarField(dim, j.order(), [j, x0, dim](const double* x, int order) {
        for (int i = 0; i < dim; ++i)
            if (x[i] != x0[i]) throw std::domain_error("from_jet field queried off its point");
        return j.truncate(order);
    });
}

Jet ScalarField::operator()(const double* x, int order) const {
    if (!eval_) throw std::logic_error("ScalarField: empty");
    if (order < 0 || order > max_order_)
        throw std::invalid_argument("ScalarField: order unsupported");
    return eval_(x, order);
}

Jet ScalarField::operator()(const std::vector<double>& x, int order) const {
    if (static_cast<int>(x.size()) != dim_)
        throw std::invalid_argument("ScalarField: point dim mismatch");
    return (*this)(x.data(), order);
}

Jet jet_eval(const ScalarField& field, const std::vector<double>& point, int order) {
    return field(point, order);
}

namespace {

int common_dim(const ScalarField& a, const ScalarField& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("ScalarField: dim mismatch");
    return a.dim();
}

}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
    int dim = common_dim(a, b);
    return ScalarField(dim, std::min(a.max_order(), b.max_order()),
                       [a, b](const double* x, int k) { return a(x, k) + b(x, k); });
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
    int dim = common_dim(a, b);
    return ScalarField(dim, std::min(a.max_order(), b.max_order()),
                       [a, b](const double* x, int k) { return a(x, k) - b(x, k); });
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
    int dim = common_dim(a, b);
    return ScalarField(dim, std::min(a.max_order(), b.max_order()),
                       [a, b](const double* x, int k) { return a(x, k) * b(x, k); });
}

ScalarField operator/(const ScalarField& a, const ScalarField& b) {
    int dim = common_dim(a, b);
    return ScalarField(dim, std::min(a.max_order(), b.max_order()),
                       [a, b](const double* x, int k) { return a(x, k) / b(x, k); });
}

ScalarField operator*(const ScalarField& a, double s) {
    return ScalarField(a.dim(), a.max_order(),
                       [a, s](const double* x, int k) { return a(x, k) * s; });
}

ScalarField operator*(double s, const ScalarField& a) { return a * s; }

ScalarField operator+(const ScalarField& a, double v) {
    return ScalarField(a.dim(), a.max_order(),
                       [a, v](const double* x, int k) { return a(x, k) + v; });
}

ScalarField operator-(const ScalarField& a, double v) { return a + (-v); }

ScalarField apply(Jet (*fn)(const Jet&), const ScalarField& a) {
    return ScalarField(a.dim(), a.max_order(),
                       [fn, a](const double* x, int k) { return fn(a(x, k)); });
}

ScalarField derivative(const ScalarField& a, int axis) {
    return ScalarField(a.dim(), a.max_order() - 1,
                       [a, axis](const double* x, int k) { return a(x, k + 1).derivative(axis); });
}

namespace {

struct MemoKey {
    std::vector<std::uint64_t> bits;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t b : k.bits) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

ScalarField memoized(const ScalarField& a) {
    auto cache = std::make_shared<
        std::unordered_map<MemoKey, Jet, MemoKeyHash>>();
    auto mtx = std::make_shared<std::mutex>();
    const int dim = a.dim();
    return ScalarField(dim, a.max_order(), [a, cache, mtx, dim](const double* x, int k) {
        MemoKey key;
        key.bits.resize(dim + 1);
        key.bits[0] = static_cast<std::uint64_t>(k);
        for (int i = 0; i < dim; ++i) {
            std::uint64_t b;
            std::memcpy(&b, &x[i], sizeof b);
            key.bits[i + 1] = b;
        }
        {
            std::lock_guard<std::mutex> lock(*mtx);
            auto it = cache->find(key);
            if (it != cache->end()) return it->second;
        }
        Jet j = a(x, k);
        std::lock_guard<std::mutex> lock(*mtx);
        cache->emplace(std::move(key), j);
        return j;
    });
}

}  // namespace weylcert
