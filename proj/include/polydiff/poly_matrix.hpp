#pragma once

#include <vector>

#include "polydiff/poly.hpp"

namespace polydiff {

// Small dense matrix over an arbitrary scalar; Eigen stays the container for
// everything floating, this one exists for exact entries (Poly, GaussRat).
template <class T>
class DenseMat {
public:
    DenseMat() = default;
    DenseMat(int rows, int cols, T fill = T())
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    friend bool operator==(const DenseMat& x, const DenseMat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> a_;
};

using PolyMat = DenseMat<Poly>;

// Exact determinant. Cofactor expansion up to 4x4, fraction-free Bareiss
// elimination above that (every division it performs is exact).
Poly poly_det(const PolyMat& m);

PolyMat poly_identity(int n, int nvars);

}  // namespace polydiff
