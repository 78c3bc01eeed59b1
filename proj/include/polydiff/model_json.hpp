#pragma once

#include "json.hpp"
#include "polydiff/model.hpp"

namespace polydiff {

// Lossless model serialization. Polynomials and rationals travel as exact
// text (see poly_io); kinds[i] is -1 for a real coordinate or the index of
// its conjugate partner.
nlohmann::json model_to_json(const DiffusionModel& m);
DiffusionModel model_from_json(const nlohmann::json& j);

}  // namespace polydiff
