#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace weylcert {

inline constexpr int kMaxJetDim = 8;
inline constexpr int kMaxJetOrder = 5;

// Exponent vector of a partial derivative; axes beyond dim stay zero.
using MIdx = std::array<std::uint8_t, kMaxJetDim>;

int binomial(int n, int k);

// Shared per-(dim, order) tables: graded-lex enumeration of multi-indices
// with |a| <= order, O(1) rank lookup, the sparse Leibniz product list and
// derivative-shift tables.  Instances are cached and immutable.
class JetShape {
public:
    static const JetShape& get(int dim, int order);

    int dim() const { return dim_; }
    int order() const { return order_; }
    int size() const { return static_cast<int>(idx_.size()); }

    const MIdx& index(int i) const { return idx_[i]; }
    int degree(int i) const { return degree_[i]; }
    double factorial(int i) const { return factorial_[i]; }
    int rank(const MIdx& a) const;

    // Entries of the graded-lex list with degree <= k form a prefix; its
    // length equals JetShape::get(dim, k).size().
    int prefix_size(int k) const { return prefix_[k]; }

    struct ProductTerm {
        std::int32_t lhs, rhs, dst;
        double binom;  // multinomial weight: (a+b)! / (a! b!)
    };
    const std::vector<ProductTerm>& product_terms() const { return prod_; }

    // shift_table(axis)[i] = rank of index(i) + e_axis in this shape, for
    // every i in the order-(order-1) prefix.  Realizes d/dx_axis.
    const std::vector<std::int32_t>& shift_table(int axis) const { return shift_[axis]; }

private:
    JetShape(int dim, int order);

    int dim_, order_;
    std::vector<MIdx> idx_;
    std::vector<int> degree_;
    std::vector<double> factorial_;
    std::array<int, kMaxJetOrder + 2> prefix_{};
    std::vector<ProductTerm> prod_;
    std::array<std::vector<std::int32_t>, kMaxJetDim> shift_;
    std::vector<std::int32_t> lut_;  // dense rank lookup, mixed radix (order+1)
};

}  // namespace weylcert
