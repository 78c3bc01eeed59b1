#pragma once

#include <utility>
#include <vector>

#include "polydiff/model.hpp"

namespace polydiff {

// Rewrites every conjugate pair (Z, Zb) as real coordinates (U, V) with
// Z = U + iV, converting gamma, drift, boundary, tilt, domain predicates and
// the interior point. All outputs must come out with real coefficients;
// a complex leftover means the input violated conjugate symmetry and throws
// std::invalid_argument.
DiffusionModel realify(const DiffusionModel& m);

// Inverse direction: bundles the listed (u,v) index pairs back into
// conjugate-pair coordinates Z = u + iv, Zb = u - iv.
DiffusionModel complexify(const DiffusionModel& m,
                          const std::vector<std::pair<int, int>>& uv_pairs);

bool is_real_poly(const Poly& p);

}  // namespace polydiff
