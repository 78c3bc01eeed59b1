#include "polydiff/poly_matrix.hpp"

#include <stdexcept>

namespace polydiff {

namespace {

Poly det_cofactor(const PolyMat& m, std::vector<int>& cols, int row) {
    int n = m.rows();
    if (static_cast<int>(cols.size()) == 1)
        return m(row, cols[0]);
    Poly acc(m(0, 0).nvars());
    for (size_t k = 0; k < cols.size(); ++k) {
        const Poly& pivot = m(row, cols[k]);
        if (pivot.is_zero()) continue;
        int col = cols[k];
        cols.erase(cols.begin() + k);
        Poly sub = det_cofactor(m, cols, row + 1);
        cols.insert(cols.begin() + k, col);
        Poly contrib = pivot * sub;
        if (k % 2 == 1) contrib = -contrib;
        acc += contrib;
    }
    (void)n;
    return acc;
}

Poly det_bareiss(PolyMat m) {
    const int n = m.rows();
    const int nv = m(0, 0).nvars();
    Poly prev = Poly::constant(nv, GaussRat(1));
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k).is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m(i, k).is_zero()) { swap_row = i; break; }
            if (swap_row < 0) return Poly(nv);  // singular column
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                auto q = divexact(num, prev);
                if (!q) throw std::logic_error("poly_det: Bareiss division not exact");
                m(i, j) = std::move(*q);
            }
            m(i, k) = Poly(nv);
        }
        prev = m(k, k);
    }
    Poly d = m(n - 1, n - 1);
    return negate ? -d : d;
}

}  // namespace

Poly poly_det(const PolyMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("poly_det: non-square input");
    if (m.rows() == 0) throw std::invalid_argument("poly_det: empty matrix");
    const int nv = m(0, 0).nvars();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j).nvars() != nv)
                throw std::invalid_argument("poly_det: mixed rings");

    if (m.rows() <= 4) {
        std::vector<int> cols(m.cols());
        for (int j = 0; j < m.cols(); ++j) cols[j] = j;
        return det_cofactor(m, cols, 0);
    }
    return det_bareiss(m);
}

PolyMat poly_identity(int n, int nvars) {
    PolyMat m(n, n, Poly(nvars));
    for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(nvars, GaussRat(1));
    return m;
}

}  // namespace polydiff
