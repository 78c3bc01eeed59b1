#pragma once

#include <span>

#include "polydiff/poly_matrix.hpp"

namespace polydiff {

// Discriminant of the monic polynomial X^d + a_{d-1}X^{d-1} + ... + a_0,
// computed as (-1)^{d(d-1)/2} times the (2d-1)x(2d-1) Sylvester resultant
// determinant of (P, P'). The coefficients a_0..a_{d-1} are given as
// polynomials over a shared ring (variables for the symbolic discriminant,
// constants for numeric evaluation). After substituting elementary-symmetric
// expressions of the roots it equals prod_{i<j}(x_j - x_i)^2.
Poly discriminant_sylvester(std::span<const Poly> coeffs, int d);

}  // namespace polydiff
