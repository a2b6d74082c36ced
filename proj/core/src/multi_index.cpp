#include "weylcert/multi_index.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace weylcert {

int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<int>(r);
}

namespace {

void enumerate_degree(int dim, int degree, int axis, MIdx& cur, std::vector<MIdx>& out) {
    if (axis == dim - 1) {
        cur[axis] = static_cast<std::uint8_t>(degree);
        out.push_back(cur);
        cur[axis] = 0;
        return;
    }
    for (int a = degree; a >= 0; --a) {
        cur[axis] = static_cast<std::uint8_t>(a);
        enumerate_degree(dim, degree - a, axis + 1, cur, out);
    }
    cur[axis] = 0;
}

}  // namespace

JetShape::JetShape(int dim, int order) : dim_(dim), order_(order) {
    if (dim < 1 || dim > kMaxJetDim || order < 0 || order > kMaxJetOrder)
        throw std::invalid_argument("JetShape: dim/order out of range");

    // prefix_[k] = number of entries with degree <= k.
    MIdx cur{};
    for (int d = 0; d <= order; ++d) enumerate_degree(dim, d, 0, cur, idx_);
    {
        int run = 0, deg_at = 0;
        for (int k = 0; k <= kMaxJetOrder + 1; ++k) {
            while (deg_at < static_cast<int>(idx_.size())) {
                int deg = 0;
                for (int ax = 0; ax < dim; ++ax) deg += idx_[deg_at][ax];
                if (deg > k) break;
                ++deg_at;
            }
            run = deg_at;
            prefix_[k] = run;
        }
    }

    const int n = static_cast<int>(idx_.size());
    degree_.resize(n);
    factorial_.resize(n);
    for (int i = 0; i < n; ++i) {
        int deg = 0;
        double fac = 1.0;
        for (int ax = 0; ax < dim; ++ax) {
            deg += idx_[i][ax];
            for (int v = 2; v <= idx_[i][ax]; ++v) fac *= v;
        }
        degree_[i] = deg;
        factorial_[i] = fac;
    }

    // Dense rank lookup: mixed radix (order + 1) per axis.
    const int radix = order + 1;
    std::size_t lut_size = 1;
    for (int ax = 0; ax < dim; ++ax) lut_size *= radix;
    lut_.assign(lut_size, -1);
    for (int i = 0; i < n; ++i) {
        std::size_t code = 0;
        for (int ax = dim - 1; ax >= 0; --ax) code = code * radix + idx_[i][ax];
        lut_[code] = i;
    }

    for (int ax = 0; ax < dim; ++ax) {
        auto& tbl = shift_[ax];
        tbl.resize(order > 0 ? prefix_[order - 1] : 0);
        for (std::size_t i = 0; i < tbl.size(); ++i) {
            MIdx b = idx_[i];
            b[ax] = static_cast<std::uint8_t>(b[ax] + 1);
            tbl[i] = rank(b);
        }
    }

    // Leibniz scatter list: every ordered pair with compatible degrees.
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (degree_[i] + degree_[j] > order) continue;
            MIdx c{};
            double w = 1.0;
            for (int ax = 0; ax < dim; ++ax) {
                c[ax] = static_cast<std::uint8_t>(idx_[i][ax] + idx_[j][ax]);
                w *= binomial(c[ax], idx_[i][ax]);
            }
            prod_.push_back({i, j, rank(c), w});
        }
    }
}

int JetShape::rank(const MIdx& a) const {
    const int radix = order_ + 1;
    std::size_t code = 0;
    for (int ax = dim_ - 1; ax >= 0; --ax) {
        if (a[ax] > order_) return -1;
        code = code * radix + a[ax];
    }
    int r = lut_[code];
    return r;
}

const JetShape& JetShape::get(int dim, int order) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<JetShape>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    const int key = dim * 16 + order;
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, std::unique_ptr<JetShape>(new JetShape(dim, order))).first;
    return *it->second;
}

}  // namespace weylcert
