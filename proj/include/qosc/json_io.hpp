#pragma once

#include <json.hpp>

#include "qosc/rmatrix.hpp"

namespace qosc {

/// 9 rows of 9 expression strings in the field grammar.
nlohmann::json matrix_to_json(const BigRMatrix& m);
BigRMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace qosc
