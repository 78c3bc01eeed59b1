#include "polydiff/discriminant.hpp"

#include <stdexcept>

namespace polydiff {

Poly discriminant_sylvester(std::span<const Poly> coeffs, int d) {
    if (d < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    if (static_cast<int>(coeffs.size()) != d)
        throw std::invalid_argument("discriminant: expected d coefficients a0..a_{d-1}");
    const int nv = coeffs[0].nvars();
    for (const Poly& c : coeffs)
        if (c.nvars() != nv) throw std::invalid_argument("discriminant: mixed rings");

    if (d == 1) return Poly::constant(nv, GaussRat(1));  // empty root product

    auto cnst = [&](long k) { return Poly::constant(nv, GaussRat(Rat(k))); };

    // P high-to-low: 1, a_{d-1}, ..., a_0 ; P' high-to-low: d, (d-1)a_{d-1}, ..., a_1.
    std::vector<Poly> p_row, dp_row;
    p_row.push_back(cnst(1));
    for (int k = d - 1; k >= 0; --k) p_row.push_back(coeffs[k]);
    dp_row.push_back(cnst(d));
    for (int k = d - 1; k >= 1; --k) dp_row.push_back(coeffs[k] * GaussRat(Rat(k)));

    const int n = 2 * d - 1;
    PolyMat s(n, n, Poly(nv));
    for (int i = 0; i < d - 1; ++i)
        for (int j = 0; j <= d; ++j) s(i, i + j) = p_row[j];
    for (int i = 0; i < d; ++i)
        for (int j = 0; j <= d - 1; ++j) s(d - 1 + i, i + j) = dp_row[j];

    Poly res = poly_det(s);
    // (-1)^{d(d-1)/2}
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) res = -res;
    return res;
}

}  // namespace polydiff
